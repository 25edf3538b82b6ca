#pragma once

#include <array>
#include <cstddef>

#include "eprsim/model.hpp"
#include "eprsim/sources.hpp"

namespace eprsim::optics {

using sources::FieldVector;

/// Ideal linear polarizer at angle theta:
///   [[cos^2, cos sin], [sin cos, sin^2]]
/// A real projector: symmetric, idempotent, trace 1.
struct PolarizerMatrix {
  std::array<double, 4> m{};  // row-major
  double theta = 0.0;

  [[nodiscard]] double operator()(std::size_t row, std::size_t col) const { return m[2 * row + col]; }
  [[nodiscard]] FieldVector apply(const FieldVector& f) const {
    return {m[0] * f.h + m[1] * f.v, m[2] * f.h + m[3] * f.v};
  }
};

/// Throws InputError for non-finite theta.
PolarizerMatrix polarizer_matrix(double theta);

/// Intensity split between the two outputs of a two-channel analyzer.
struct ChannelIntensities {
  double i_plus = 0.0;
  double i_minus = 0.0;

  [[nodiscard]] double total() const { return i_plus + i_minus; }
};

struct Projection {
  FieldVector passed;
  ChannelIntensities intensities;
};

/// passed = p f, i_plus = |passed|^2, i_minus = |f|^2 - i_plus (clamped at 0).
Projection project(const PolarizerMatrix& p, const FieldVector& f);

/// Joint probabilities for (+,+), (-,-), (+,-), (-,+).
struct CoincidenceProbabilities {
  double pp = 0.0;
  double mm = 0.0;
  double pm = 0.0;
  double mp = 0.0;

  [[nodiscard]] double sum() const { return pp + mm + pm + mp; }
  /// (pp + mm - pm - mp) / sum.
  [[nodiscard]] double correlation() const { return (pp + mm - pm - mp) / sum(); }
};

/// Locked-mode coincidence probabilities, normalized over the four joint
/// outcomes: pp = mm = sin^2(theta)/2, pm = mp = cos^2(theta)/2 with
/// theta = theta1 - theta2.
CoincidenceProbabilities analytic_locked_mode(double theta1, double theta2);

/// Furry mixture: pp = mm = (2 - cos 2 theta)/8, pm = mp = (2 + cos 2 theta)/8.
CoincidenceProbabilities analytic_furry(double theta1, double theta2);

/// Closed-form correlation for a relative angle:
///   locked-mode, qm-oracle: -cos(2 theta); furry: -cos(2 theta)/3; barut: -cos(theta).
/// Throws ConfigError for any other model.
double analytic_correlation(Model model, double theta);

/// Both outputs of one arm's analyzer: the + channel projects along theta, the
/// - channel along theta + pi/2.
struct TwoChannelAnalyzer {
  PolarizerMatrix plus;
  PolarizerMatrix minus;
  FieldVector plus_axis;
  FieldVector minus_axis;

  static TwoChannelAnalyzer at(double theta);
};

/// Joint detection probabilities of one locked-mode pair from its second-order
/// coherence. The + channel of an arm analyzes along theta, the - channel along
/// theta + pi/2. The emitted mode n and its partner mode 1 - n carry half the
/// pair energy each and add with a fixed relative phase, so the coincidence
/// amplitude for channels (s, t) is the sum over both modes of the product of
/// the projected arm amplitudes.
CoincidenceProbabilities locked_mode_coincidence(const sources::PairEmission& pair, double theta1,
                                                 double theta2);
CoincidenceProbabilities locked_mode_coincidence(const sources::PairEmission& pair, const TwoChannelAnalyzer& arm1,
                                                 const TwoChannelAnalyzer& arm2);

/// Barut spin correlation Cor(A, B) for A = s1.a, B = s2.b with the angle
/// between a and b equal to theta, integrated over the sphere (composite
/// Simpson in gamma, periodic trapezoid in phi). Result within 1e-6 of
/// -cos(theta) for n_nodes >= 128. Throws ConfigError for n_nodes < 16.
double barut_quadrature(double theta, std::size_t n_nodes);

}  // namespace eprsim::optics
