#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "eprsim/errors.hpp"
#include "eprsim/optics.hpp"
#include "eprsim/samples.hpp"
#include "eprsim/statistics.hpp"
#include "oracles.hpp"

namespace eprsim::statistics {
namespace {

constexpr double kPi = std::numbers::pi;

DichotomicSequence random_sequence(std::mt19937_64& rng, std::size_t n) {
  std::vector<int> v(n);
  for (auto& x : v) x = (rng() & 1U) ? 1 : -1;
  return DichotomicSequence(std::move(v));
}

DichotomicSequence from_bits(std::uint32_t bits, int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = ((bits >> i) & 1U) ? -1 : 1;
  return DichotomicSequence(std::move(v));
}

TEST(DichotomicSequence, RejectsNonDichotomicValues) {
  EXPECT_THROW(DichotomicSequence({1, 0, -1}), InputError);
  EXPECT_THROW(DichotomicSequence(std::vector<int>{}), InputError);
}

TEST(EventwiseCorrelation, Examples) {
  EXPECT_EQ(eventwise_correlation({1, 1, 1, 1}, {1, 1, 1, 1}).value, 1.0);
  EXPECT_EQ(eventwise_correlation({1, -1}, {-1, 1}).value, -1.0);
  EXPECT_EQ(eventwise_correlation({1, 1, -1, -1}, {1, -1, 1, -1}).value, 0.0);
}

TEST(EventwiseCorrelation, StdErrIsSampleStdOverRootN) {
  const auto est = eventwise_correlation({1, 1, -1, -1}, {1, -1, 1, -1});
  // Products (1, -1, -1, 1): sample variance 4/3.
  EXPECT_NEAR(est.std_err, std::sqrt(4.0 / 3.0) / 2.0, 1e-15);
}

TEST(EventwiseCorrelation, LengthMismatch) {
  EXPECT_THROW(eventwise_correlation({1, 1}, {1}), InputError);
}

TEST(EventwiseCorrelation, SymmetricAndBounded) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 50;
    const auto x = random_sequence(rng, n), y = random_sequence(rng, n);
    const double v = eventwise_correlation(x, y).value;
    ASSERT_EQ(v, eventwise_correlation(y, x).value);
    ASSERT_LE(std::abs(v), 1.0);
  }
}

TEST(NormalizedCorrelation, ConstantSamplesGiveZero) {
  const std::vector<double> ones(10, 1.0);
  EXPECT_EQ(normalized_correlation(ones, ones), 0.0);
}

TEST(NormalizedCorrelation, FlippedPair) {
  const std::vector<double> a{1.0, -1.0}, b{-1.0, 1.0};
  EXPECT_EQ(normalized_correlation(a, b), -1.0);
}

TEST(NormalizedCorrelation, Errors) {
  const std::vector<double> zeros(4, 0.0), one{1.0}, two{1.0, 2.0};
  EXPECT_THROW(normalized_correlation(zeros, zeros), DegenerateInputError);
  EXPECT_THROW(normalized_correlation(one, one), InputError);
  EXPECT_THROW(normalized_correlation(two, one), InputError);
}

TEST(CoherenceCorrelation, LockedModeAtQuarterPiIsZero) {
  const auto s = samples::locked_mode_intensities(3, 10000, kPi / 4.0, 0.0);
  EXPECT_NEAR(coherence_correlation(s.coincidence, s.a, s.b), 0.0, 1e-12);
}

TEST(CoherenceCorrelation, DoubleMeasurementGivesMinusCosTwoTheta) {
  for (const double theta : {0.0, 0.3, 1.0, 2.0}) {
    const auto s = samples::locked_mode_intensities(4, 2000, theta, 0.0);
    EXPECT_NEAR(coherence_correlation(s.coincidence, s.a, s.b), -std::cos(2.0 * theta), 1e-12);
  }
}

TEST(CoherenceCorrelation, SingleModeVariantSpansMinusOneToZero) {
  double lo = 1.0, hi = -1.0;
  for (int k = 0; k <= 90; ++k) {
    const auto s = samples::locked_mode_intensities(5, 100, k * kPi / 90.0, 0.0);
    const double v = coherence_correlation(s.coincidence, s.a, s.b, false);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  EXPECT_NEAR(lo, -1.0, 1e-12);
  EXPECT_NEAR(hi, 0.0, 1e-12);
}

TEST(FourChannelCorrelation, Examples) {
  detection::CoincidenceCounts crossed;
  crossed.n_pm = 5;
  crossed.n_mp = 5;
  EXPECT_EQ(four_channel_correlation(crossed).value, -1.0);

  detection::CoincidenceCounts matched;
  matched.n_pp = 5;
  matched.n_mm = 5;
  EXPECT_EQ(four_channel_correlation(matched).value, 1.0);

  EXPECT_THROW(four_channel_correlation(detection::CoincidenceCounts{}), DegenerateInputError);
}

TEST(FourChannelCorrelation, LockedModeAlignedIsExactlyMinusOne) {
  detection::RunSettings s{Model::kLockedMode, 1, 1000000, 1.0e3, {}};
  const auto est = four_channel_correlation(detection::simulate_counts(s, 0.0, 0.0, 1e-9));
  EXPECT_EQ(est.value, -1.0);
  EXPECT_EQ(est.n, 1000000u);
}

TEST(Chsh, Examples) {
  EXPECT_EQ(chsh(0.0, 0.0, 0.0, 0.0), 0.0);
  auto p = [](double x, double y) { return -std::cos(2.0 * (x - y)); };
  const double a = 0.0, ap = kPi / 4.0, b = kPi / 8.0, bp = 3.0 * kPi / 8.0;
  EXPECT_NEAR(chsh(p(a, b), p(a, bp), p(ap, bp), p(ap, b)), 2.0 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(chsh(p(0.0, kPi / 4.0), p(0.0, kPi / 2.0), p(kPi / 4.0, kPi / 2.0), p(kPi / 4.0, kPi / 4.0)), 2.0,
              1e-12);
  EXPECT_THROW(chsh(1.5, 0.0, 0.0, 0.0), InputError);
}

TEST(Chsh, GridSearchApproachesButNeverExceedsTwoRootTwo) {
  // Brute force over a 1 degree lattice of (a', b, b') with a = 0; the
  // analytic correlation depends only on differences, so a = 0 loses nothing.
  const double deg = kPi / 180.0;
  auto p = [](double x, double y) { return -std::cos(2.0 * (x - y)); };
  double best = 0.0;
  for (int ap = 0; ap < 180; ++ap) {
    for (int b = 0; b < 180; ++b) {
      for (int bp = 0; bp < 180; ++bp) {
        best = std::max(best, chsh(p(0.0, b * deg), p(0.0, bp * deg), p(ap * deg, bp * deg), p(ap * deg, b * deg)));
      }
    }
  }
  EXPECT_LE(best, 2.0 * std::sqrt(2.0) + 1e-9);
  // The exact optimum sits at odd multiples of 22.5 degrees, half a step off the lattice.
  EXPECT_GT(best, 2.0 * std::sqrt(2.0) - 2e-3);
}

TEST(AmendedBound, Examples) {
  std::vector<double> centered{1.0, -1.0, 0.5, -0.5};
  EXPECT_EQ(amended_bound(centered, centered), 2.0);
  const std::vector<double> ones(8, 1.0), minus(8, -1.0);
  EXPECT_EQ(amended_bound(ones, ones), 4.0);
  EXPECT_EQ(amended_bound(ones, minus), 0.0);
  const std::vector<double> zeros(3, 0.0);
  EXPECT_THROW(amended_bound(zeros, zeros), DegenerateInputError);
}

TEST(AmendedBound, ReducesToTwoForMeanCenteredSamples) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> gauss(0.3, 1.7);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> a(64), b(64);
    for (auto& x : a) x = gauss(rng);
    for (auto& x : b) x = gauss(rng);
    for (auto* v : {&a, &b}) {
      double m = 0.0;
      for (const double x : *v) m += x;
      m /= 64.0;
      for (auto& x : *v) x -= m;
    }
    ASSERT_NEAR(amended_bound(a, b), 2.0, 1e-12);
  }
}

TEST(SicaCheck, Examples) {
  const DichotomicSequence ones{1, 1, 1};
  const auto all = sica_check(ones, ones, ones, ones);
  EXPECT_EQ(all.lhs, 2.0);
  EXPECT_TRUE(all.holds);

  const auto r = sica_check({1, 1}, {1, -1}, {1, -1}, {-1, -1});
  EXPECT_EQ(r.lhs, 2.0);
  EXPECT_TRUE(r.holds);
}

TEST(SicaCheck, LengthMismatch) {
  EXPECT_THROW(sica_check({1, 1}, {1, 1}, {1}, {1, 1}), InputError);
}

TEST(SicaCheck, ExhaustiveUpToLengthFourMatchesOracle) {
  for (int n = 1; n <= 4; ++n) {
    const std::uint32_t count = 1U << n;
    double best = 0.0;
    for (std::uint32_t a = 0; a < count; ++a) {
      for (std::uint32_t ap = 0; ap < count; ++ap) {
        for (std::uint32_t b = 0; b < count; ++b) {
          for (std::uint32_t bp = 0; bp < count; ++bp) {
            const auto r = sica_check(from_bits(a, n), from_bits(ap, n), from_bits(b, n), from_bits(bp, n));
            ASSERT_TRUE(r.holds);
            best = std::max(best, r.lhs);
          }
        }
      }
    }
    EXPECT_EQ(best, 2.0) << n;
    EXPECT_EQ(best, oracle::sica_exhaustive_max(n)) << n;
  }
}

TEST(SicaCheck, RandomQuadrupletsNeverViolate) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100000; ++trial) {
    const std::size_t n = 1 + rng() % 64;
    const auto r = sica_check(random_sequence(rng, n), random_sequence(rng, n), random_sequence(rng, n),
                              random_sequence(rng, n));
    ASSERT_TRUE(r.holds) << trial;
    ASSERT_LE(r.lhs, 2.0);
  }
}

TEST(EightSequenceCheck, IdenticalRunsReduceToSica) {
  const DichotomicSequence x{1, -1, 1, 1}, y{1, 1, -1, 1};
  const PairedRun run{x, y};
  const auto eight = eight_sequence_check(run, run, run, run);
  const auto sica = sica_check(x, x, y, y);
  EXPECT_EQ(eight.lhs, sica.lhs);
  EXPECT_LE(eight.lhs, 2.0);
  EXPECT_EQ(eight.bound, 4.0);
}

TEST(EightSequenceCheck, ExhaustiveLengthTwoReachesFour) {
  double best = 0.0;
  for (std::uint32_t code = 0; code < (1U << 16); ++code) {
    auto seq = [&](int k) { return from_bits((code >> (2 * k)) & 3U, 2); };
    const auto r = eight_sequence_check({seq(0), seq(1)}, {seq(2), seq(3)}, {seq(4), seq(5)}, {seq(6), seq(7)});
    ASSERT_TRUE(r.holds);
    best = std::max(best, r.lhs);
  }
  EXPECT_EQ(best, 4.0);
}

TEST(EightSequenceCheck, RandomSetsStayBelowFour) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100000; ++trial) {
    const std::size_t n = 1 + rng() % 32;
    auto run = [&] { return PairedRun{random_sequence(rng, n), random_sequence(rng, n)}; };
    const auto r = eight_sequence_check(run(), run(), run(), run());
    ASSERT_TRUE(r.holds);
  }
}

TEST(EightSequenceCheck, LengthMismatch) {
  const PairedRun a{{1, 1}, {1, 1}}, b{{1}, {1}};
  EXPECT_THROW(eight_sequence_check(a, a, a, b), InputError);
}

TEST(TrivialBound, AlwaysHoldsForValidCorrelations) {
  EXPECT_EQ(trivial_bound(1.0, -1.0).lhs, 2.0);
  EXPECT_TRUE(trivial_bound(1.0, -1.0).holds);
  EXPECT_TRUE(trivial_bound(-0.3, 0.8).holds);
}

TEST(NormalizedCorrelationEstimate, BarutMatchesMinusCosine) {
  const double theta = 1.0;
  const auto s = samples::barut_observables(6, 1000000, theta);
  const auto est = normalized_correlation_estimate(s.a, s.b);
  EXPECT_GT(est.std_err, 0.0);
  EXPECT_LT(est.std_err, 0.01);
  EXPECT_NEAR(est.value, -std::cos(theta), 3.0 * est.std_err);
}

TEST(NormalizedCorrelationEstimate, FurryIntensitiesGiveOneThird) {
  const auto s = samples::furry_intensities(7, 1000000, 0.0, 0.0);
  const auto est = normalized_correlation_estimate(s.a, s.b);
  EXPECT_NEAR(est.value, -1.0 / 3.0, 3.0 * est.std_err);
}

}  // namespace
}  // namespace eprsim::statistics
