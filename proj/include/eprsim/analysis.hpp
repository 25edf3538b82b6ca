#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace eprsim::analysis {

/// Piecewise-constant 2 pi-periodic function. values[k] holds on
/// [switch_points[k], switch_points[k+1]); the last level wraps around to the
/// first switch point. No switch points means a constant function.
class StepFunction {
 public:
  /// Throws InputError unless switch points are strictly ascending in
  /// [0, 2 pi), there is one level per interval, and cyclically adjacent
  /// levels differ. A single switch point is rejected (it switches nothing).
  StepFunction(std::vector<double> switch_points, std::vector<double> values);

  static StepFunction constant(double level);
  /// +-1 function with the given switch points, starting at +1. The number of
  /// switch points must be even.
  static StepFunction dichotomic(std::vector<double> switch_points);
  /// Random +-1 function with `n_switches` (even, >= 2) uniformly placed switches.
  static StepFunction random_dichotomic(std::uint64_t seed, std::size_t n_switches);

  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] std::span<const double> switch_points() const { return switch_points_; }
  [[nodiscard]] std::span<const double> values() const { return values_; }
  [[nodiscard]] static constexpr double period() { return 6.283185307179586476925286766559; }

 private:
  std::vector<double> switch_points_;
  std::vector<double> values_;
};

struct CorrelationPoint {
  double theta = 0.0;
  double value = 0.0;
};

/// (1/2 pi) int_0^{2 pi} p(x - theta) p(x) dx at each grid angle, integrated
/// exactly from the overlap lengths of the two piecewise-constant factors.
/// `n_quad` (>= 1024) is validated only: the overlap sum needs no sampling.
/// Throws InputError for an empty grid or n_quad < 1024.
std::vector<CorrelationPoint> shifted_autocorrelation(const StepFunction& p, std::span<const double> theta_grid,
                                                      std::size_t n_quad = 1024);

struct HarmonicDeviation {
  double max_abs_dev = 0.0;
  double argmax = 0.0;
};

/// max over the grid of |value - (-cos 2 theta)|. The grid must span [0, pi]
/// with at least 64 points (InputError otherwise).
HarmonicDeviation harmonic_deviation(std::span<const CorrelationPoint> corr);

/// Lags at which the autocorrelation of p may have a slope discontinuity:
/// all pairwise differences of switch points, reduced to [0, 2 pi).
std::vector<double> autocorrelation_kinks(const StepFunction& p);

struct LinearityReport {
  std::size_t checked = 0;
  std::size_t excluded = 0;  // stencils straddling a kink
  double max_second_difference = 0.0;
  bool piecewise_linear = false;
};

/// Second finite differences of the autocorrelation on a uniform grid of
/// n_grid lags over one period, skipping stencils that contain a kink.
LinearityReport check_piecewise_linear(const StepFunction& p, std::size_t n_grid, double tolerance = 1e-12);

/// D(y) = above for y > threshold, below otherwise.
struct ThresholdFunction {
  double threshold = 0.0;
  double below = -1.0;
  double above = 1.0;

  [[nodiscard]] double operator()(double y) const { return y > threshold ? above : below; }
};

struct HarmonicArgumentPoint {
  double t = 0.0;
  double rhs = 0.0;  // int_{-pi}^{pi} D(sin t - x) D(x) dx
  double deviation = 0.0;  // |rhs - sin t|
};

struct HarmonicArgumentReport {
  std::vector<HarmonicArgumentPoint> points;
  double max_abs_dev = 0.0;
  double argmax = 0.0;
  double fraction_deviating = 0.0;  // share of grid points with deviation > 1e-9
};

/// Evaluates int_{-pi}^{pi} D(sin t - x) D(x) dx by exact piecewise integration
/// and compares it with sin t. The grid must cover [-pi, pi] (InputError otherwise).
HarmonicArgumentReport harmonic_argument_check(const ThresholdFunction& d, std::span<const double> t_grid);

/// n points evenly spaced on [lo, hi], both ends included.
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace eprsim::analysis
