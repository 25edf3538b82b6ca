#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "eprsim/analysis.hpp"
#include "eprsim/errors.hpp"
#include "oracles.hpp"

namespace eprsim::analysis {
namespace {

constexpr double kPi = std::numbers::pi;

StepFunction square_wave() { return StepFunction::dichotomic({0.0, kPi / 2.0, kPi, 3.0 * kPi / 2.0}); }

double at(const StepFunction& p, double theta, std::size_t n_quad = 1024) {
  const std::vector<double> grid{theta};
  return shifted_autocorrelation(p, grid, n_quad).front().value;
}

TEST(StepFunction, Validation) {
  EXPECT_THROW(StepFunction({1.0}, {1.0}), InputError);
  EXPECT_THROW(StepFunction({1.0, 0.5}, {1.0, -1.0}), InputError);
  EXPECT_THROW(StepFunction({0.0, 7.0}, {1.0, -1.0}), InputError);
  EXPECT_THROW(StepFunction({0.0, 1.0}, {1.0, 1.0}), InputError);
  EXPECT_THROW(StepFunction({0.0, 1.0}, {1.0}), InputError);
  EXPECT_THROW(StepFunction::dichotomic({0.0, 1.0, 2.0}), InputError);
}

TEST(StepFunction, EvaluatesWithWrapAround) {
  const auto p = StepFunction::dichotomic({1.0, 2.0});
  EXPECT_EQ(p(0.5), -1.0);
  EXPECT_EQ(p(1.5), 1.0);
  EXPECT_EQ(p(2.5), -1.0);
  EXPECT_EQ(p(1.5 + 2.0 * kPi), 1.0);
  EXPECT_EQ(p(1.5 - 2.0 * kPi), 1.0);
}

TEST(ShiftedAutocorrelation, SquareWaveExamples) {
  const auto p = square_wave();
  EXPECT_EQ(at(p, 0.0), 1.0);
  EXPECT_EQ(at(p, kPi / 2.0), -1.0);
  EXPECT_EQ(at(p, kPi / 4.0), 0.0);
}

TEST(ShiftedAutocorrelation, Errors) {
  EXPECT_THROW(shifted_autocorrelation(square_wave(), {}), InputError);
  const std::vector<double> grid{0.0};
  EXPECT_THROW(shifted_autocorrelation(square_wave(), grid, 1023), InputError);
}

TEST(ShiftedAutocorrelation, AgreesWithDenseSampling) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto p = StepFunction::random_dichotomic(seed, 6);
    for (const double theta : {0.1, 0.9, 2.3, 4.0}) {
      // Midpoint sampling error is bounded by (number of breakpoints) * h / (2 pi).
      EXPECT_NEAR(at(p, theta), oracle::sampled_autocorrelation(p, theta, 1 << 20), 12.0 / (1 << 20)) << seed;
    }
  }
}

TEST(ShiftedAutocorrelation, IndependentOfQuadratureCount) {
  const auto p = StepFunction::random_dichotomic(9, 10);
  for (const double theta : {0.2, 1.7, 3.3}) EXPECT_NEAR(at(p, theta, 1024), at(p, theta, 1 << 20), 1e-14);
}

TEST(ShiftedAutocorrelation, UnityAtZeroLagEvenAndPeriodic) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto p = StepFunction::random_dichotomic(seed, 2 + 2 * (seed % 6));
    ASSERT_EQ(at(p, 0.0), 1.0) << seed;
    for (const double theta : {0.37, 1.9, 2.8}) {
      ASSERT_NEAR(at(p, theta), at(p, -theta), 1e-13);
      ASSERT_NEAR(at(p, theta), at(p, theta + 2.0 * kPi), 1e-13);
    }
  }
}

TEST(HarmonicDeviation, SelfComparisonIsZero) {
  std::vector<CorrelationPoint> corr;
  for (const double t : linspace(0.0, kPi, 64)) corr.push_back({t, -std::cos(2.0 * t)});
  EXPECT_EQ(harmonic_deviation(corr).max_abs_dev, 0.0);
}

TEST(HarmonicDeviation, TriangleWaveIsFarFromHarmonic) {
  const auto grid = linspace(0.0, kPi, 721);
  const auto dev = harmonic_deviation(shifted_autocorrelation(square_wave(), grid));
  EXPECT_GE(dev.max_abs_dev, 0.2);
  // Dense-grid oracle: |triangle - (-cos 2 theta)| written out by hand.
  double oracle_max = 0.0;
  for (const double t : grid) {
    const double phase = std::fmod(t, kPi / 2.0 * 2.0);
    const double triangle = phase <= kPi / 2.0 ? 1.0 - 4.0 * phase / kPi : -3.0 + 4.0 * phase / kPi;
    oracle_max = std::max(oracle_max, std::abs(triangle + std::cos(2.0 * t)));
  }
  EXPECT_NEAR(dev.max_abs_dev, oracle_max, 1e-12);
}

TEST(HarmonicDeviation, RejectsSparseOrShortGrids) {
  std::vector<CorrelationPoint> sparse;
  for (const double t : linspace(0.0, kPi, 63)) sparse.push_back({t, 0.0});
  EXPECT_THROW(harmonic_deviation(sparse), InputError);
  std::vector<CorrelationPoint> partial;
  for (const double t : linspace(0.0, 1.0, 100)) partial.push_back({t, 0.0});
  EXPECT_THROW(harmonic_deviation(partial), InputError);
}

TEST(PiecewiseLinearity, SquareWaveAutocorrelationIsTriangle) {
  const auto report = check_piecewise_linear(square_wave(), 4096);
  EXPECT_TRUE(report.piecewise_linear);
  EXPECT_GT(report.checked, 4000u);
  EXPECT_GT(report.excluded, 0u);
}

TEST(PiecewiseLinearity, HarmonicSamplesAreNotLinear) {
  // Sanity check of the detector itself: a smooth harmonic has nonzero second differences.
  const double h = 2.0 * kPi / 4096.0;
  const double second = -std::cos(2.0 * (1.0 + h)) + 2.0 * std::cos(2.0) - std::cos(2.0 * (1.0 - h));
  EXPECT_GT(std::abs(second), 1e-12);
}

TEST(PiecewiseLinearity, RandomStepFunctionsAreNeverHarmonic) {
  const auto grid = linspace(0.0, kPi, 181);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto p = StepFunction::random_dichotomic(seed, 2 + 2 * (seed % 8));
    const auto report = check_piecewise_linear(p, 2048);
    ASSERT_TRUE(report.piecewise_linear) << seed << " " << report.max_second_difference;
    ASSERT_GT(harmonic_deviation(shifted_autocorrelation(p, grid)).max_abs_dev, 0.0) << seed;
  }
}

TEST(HarmonicArgument, MatchesOverlapArithmetic) {
  const auto grid = linspace(-kPi, kPi, 201);
  const auto report = harmonic_argument_check({}, grid);
  for (const auto& point : report.points) {
    // For D = sign: the integrand is -1 outside [min(0, s), max(0, s)], +1 inside.
    const double s = std::sin(point.t);
    ASSERT_NEAR(point.rhs, 2.0 * std::abs(s) - 2.0 * kPi, 1e-12) << point.t;
  }
  EXPECT_NEAR(report.points[100].rhs, -2.0 * kPi, 1e-12);  // t = 0
  EXPECT_NEAR(report.points[150].deviation, std::abs(2.0 - 2.0 * kPi - 1.0), 1e-12);  // t = pi/2
  EXPECT_GT(report.max_abs_dev, 0.0);
  EXPECT_EQ(report.fraction_deviating, 1.0);
}

TEST(HarmonicArgument, ConstantFunctionIntegratesToTwoPi) {
  const auto grid = linspace(-kPi, kPi, 11);
  const auto report = harmonic_argument_check({0.0, 1.0, 1.0}, grid);
  for (const auto& point : report.points) EXPECT_NEAR(point.rhs, 2.0 * kPi, 1e-13);
}

TEST(HarmonicArgument, GridMustCoverFullPeriod) {
  const auto grid = linspace(0.0, kPi, 11);
  EXPECT_THROW(harmonic_argument_check({}, grid), InputError);
}

}  // namespace
}  // namespace eprsim::analysis
