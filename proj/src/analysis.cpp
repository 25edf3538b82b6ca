#include "eprsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eprsim/errors.hpp"
#include "eprsim/rng.hpp"

namespace eprsim::analysis {
namespace {

constexpr double kTwoPi = StepFunction::period();
// Breakpoints closer than this are the same point up to rounding of pi multiples.
constexpr double kSliver = 64.0 * 2.220446049250313e-16 * kTwoPi;

double wrap(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r >= kTwoPi ? 0.0 : r;
}

// Integral of f over [lo, hi] for f piecewise constant with the given breakpoints.
template <typename F>
double integrate_piecewise(std::vector<double> breaks, double lo, double hi, F&& f) {
  breaks.push_back(lo);
  breaks.push_back(hi);
  std::sort(breaks.begin(), breaks.end());
  long double total = 0.0L;
  double left = lo;
  for (const double x : breaks) {
    if (x <= left) continue;
    if (x > hi) break;
    if (x - left > kSliver) total += static_cast<long double>(x - left) * f(0.5 * (left + x));
    left = x;
  }
  return static_cast<double>(total);
}

}  // namespace

StepFunction::StepFunction(std::vector<double> switch_points, std::vector<double> values)
    : switch_points_(std::move(switch_points)), values_(std::move(values)) {
  if (switch_points_.size() == 1) throw InputError("a single switch point does not switch");
  if (values_.size() != std::max<std::size_t>(1, switch_points_.size())) {
    throw InputError("step function needs one level per interval");
  }
  for (std::size_t k = 0; k < switch_points_.size(); ++k) {
    const double x = switch_points_[k];
    if (!(x >= 0.0 && x < kTwoPi)) throw InputError("switch points must lie in [0, 2 pi)");
    if (k > 0 && !(x > switch_points_[k - 1])) throw InputError("switch points must be strictly ascending");
    if (values_[k] == values_[(k + 1) % values_.size()]) throw InputError("adjacent levels must differ");
  }
  for (const double v : values_) {
    if (!std::isfinite(v)) throw InputError("levels must be finite");
  }
}

StepFunction StepFunction::constant(double level) { return StepFunction({}, {level}); }

StepFunction StepFunction::dichotomic(std::vector<double> switch_points) {
  if (switch_points.size() % 2 != 0) throw InputError("a periodic +-1 function needs an even number of switches");
  std::vector<double> levels(switch_points.size());
  for (std::size_t k = 0; k < levels.size(); ++k) levels[k] = k % 2 == 0 ? 1.0 : -1.0;
  if (levels.empty()) levels.push_back(1.0);
  return StepFunction(std::move(switch_points), std::move(levels));
}

StepFunction StepFunction::random_dichotomic(std::uint64_t seed, std::size_t n_switches) {
  if (n_switches < 2 || n_switches % 2 != 0) throw InputError("random dichotomic function needs an even count >= 2");
  auto engine = make_engine(seed, StreamId::kFuzz);
  std::vector<double> points;
  while (points.size() < n_switches) {
    points.push_back(kTwoPi * uniform01(engine));
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
  }
  return dichotomic(std::move(points));
}

double StepFunction::operator()(double x) const {
  if (switch_points_.empty()) return values_.front();
  const double r = wrap(x);
  const auto it = std::upper_bound(switch_points_.begin(), switch_points_.end(), r);
  if (it == switch_points_.begin()) return values_.back();
  return values_[static_cast<std::size_t>(it - switch_points_.begin()) - 1];
}

std::vector<CorrelationPoint> shifted_autocorrelation(const StepFunction& p, std::span<const double> theta_grid,
                                                      std::size_t n_quad) {
  if (theta_grid.empty()) throw InputError("empty angle grid");
  if (n_quad < 1024) throw InputError("n_quad must be at least 1024");
  std::vector<CorrelationPoint> out;
  out.reserve(theta_grid.size());
  for (const double theta : theta_grid) {
    std::vector<double> breaks(p.switch_points().begin(), p.switch_points().end());
    for (const double x : p.switch_points()) breaks.push_back(wrap(x + theta));
    const double integral =
        integrate_piecewise(std::move(breaks), 0.0, kTwoPi, [&](double x) { return p(x - theta) * p(x); });
    out.push_back({theta, integral / kTwoPi});
  }
  return out;
}

HarmonicDeviation harmonic_deviation(std::span<const CorrelationPoint> corr) {
  if (corr.size() < 64) throw InputError("harmonic deviation needs at least 64 grid points");
  const auto [lo, hi] = std::minmax_element(corr.begin(), corr.end(), [](const auto& l, const auto& r) {
    return l.theta < r.theta;
  });
  if (lo->theta > 1e-9 || hi->theta < std::numbers::pi - 1e-9) throw InputError("grid must span [0, pi]");
  HarmonicDeviation out;
  for (const auto& point : corr) {
    const double dev = std::abs(point.value + std::cos(2.0 * point.theta));
    if (dev > out.max_abs_dev) {
      out.max_abs_dev = dev;
      out.argmax = point.theta;
    }
  }
  return out;
}

std::vector<double> autocorrelation_kinks(const StepFunction& p) {
  std::vector<double> kinks;
  const auto points = p.switch_points();
  for (const double xi : points) {
    for (const double xj : points) kinks.push_back(wrap(xi - xj));
  }
  std::sort(kinks.begin(), kinks.end());
  kinks.erase(std::unique(kinks.begin(), kinks.end()), kinks.end());
  return kinks;
}

LinearityReport check_piecewise_linear(const StepFunction& p, std::size_t n_grid, double tolerance) {
  if (n_grid < 3) throw InputError("linearity check needs at least 3 grid points");
  const double h = kTwoPi / static_cast<double>(n_grid);
  std::vector<double> grid(n_grid + 2);
  for (std::size_t k = 0; k < grid.size(); ++k) grid[k] = h * (static_cast<double>(k) - 1.0);
  const auto corr = shifted_autocorrelation(p, grid);

  const auto kinks = autocorrelation_kinks(p);
  auto near_kink = [&](double theta) {
    const double margin = h + 1e-12;
    for (const double k : kinks) {
      for (const double shift : {-kTwoPi, 0.0, kTwoPi}) {
        if (std::abs(k + shift - theta) <= margin) return true;
      }
    }
    return false;
  };

  LinearityReport report;
  for (std::size_t k = 1; k + 1 < corr.size(); ++k) {
    if (near_kink(corr[k].theta)) {
      ++report.excluded;
      continue;
    }
    ++report.checked;
    const double second = corr[k + 1].value - 2.0 * corr[k].value + corr[k - 1].value;
    report.max_second_difference = std::max(report.max_second_difference, std::abs(second));
  }
  report.piecewise_linear = report.checked > 0 && report.max_second_difference <= tolerance;
  return report;
}

HarmonicArgumentReport harmonic_argument_check(const ThresholdFunction& d, std::span<const double> t_grid) {
  constexpr double kPi = std::numbers::pi;
  if (t_grid.empty()) throw InputError("empty t grid");
  const auto [lo, hi] = std::minmax_element(t_grid.begin(), t_grid.end());
  if (*lo > -kPi + 1e-9 || *hi < kPi - 1e-9) throw InputError("t grid must cover [-pi, pi]");

  HarmonicArgumentReport report;
  std::size_t deviating = 0;
  for (const double t : t_grid) {
    const double s = std::sin(t);
    // D(s - x) switches at x = s - threshold, D(x) at x = threshold.
    const double rhs = integrate_piecewise({s - d.threshold, d.threshold}, -kPi, kPi,
                                           [&](double x) { return d(s - x) * d(x); });
    const double dev = std::abs(rhs - s);
    report.points.push_back({t, rhs, dev});
    if (dev > report.max_abs_dev) {
      report.max_abs_dev = dev;
      report.argmax = t;
    }
    if (dev > 1e-9) ++deviating;
  }
  report.fraction_deviating = static_cast<double>(deviating) / static_cast<double>(t_grid.size());
  return report;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) out[0] = lo;
  for (std::size_t k = 0; k < n && n > 1; ++k) {
    out[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
  }
  if (n > 1) out.back() = hi;
  return out;
}

}  // namespace eprsim::analysis
