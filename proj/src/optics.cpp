#include "eprsim/optics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eprsim/errors.hpp"

namespace eprsim::optics {
namespace {

constexpr double kPi = std::numbers::pi;

FieldVector axis(double theta) { return {std::cos(theta), std::sin(theta)}; }

}  // namespace

PolarizerMatrix polarizer_matrix(double theta) {
  if (!std::isfinite(theta)) throw InputError("polarizer angle must be finite");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double cs = c * s;
  return {{c * c, cs, cs, s * s}, theta};
}

Projection project(const PolarizerMatrix& p, const FieldVector& f) {
  Projection out;
  out.passed = p.apply(f);
  out.intensities.i_plus = out.passed.norm2();
  out.intensities.i_minus = std::max(0.0, f.norm2() - out.intensities.i_plus);
  return out;
}

CoincidenceProbabilities analytic_locked_mode(double theta1, double theta2) {
  const double theta = theta1 - theta2;
  const double s2 = std::sin(theta) * std::sin(theta);
  const double c2 = std::cos(theta) * std::cos(theta);
  // kappa cancels against the sample-space denominator 2 kappa.
  return {0.5 * s2, 0.5 * s2, 0.5 * c2, 0.5 * c2};
}

CoincidenceProbabilities analytic_furry(double theta1, double theta2) {
  const double c = std::cos(2.0 * (theta1 - theta2));
  const double same = (2.0 - c) / 8.0;
  const double crossed = (2.0 + c) / 8.0;
  return {same, same, crossed, crossed};
}

double analytic_correlation(Model model, double theta) {
  switch (model) {
    case Model::kLockedMode:
    case Model::kQmOracle:
      return -std::cos(2.0 * theta);
    case Model::kFurry:
      return -std::cos(2.0 * theta) / 3.0;
    case Model::kBarut:
      return -std::cos(theta);
    case Model::kAccidentals:
      break;
  }
  throw ConfigError("no analytic correlation for model '" + to_string(model) + "'");
}

TwoChannelAnalyzer TwoChannelAnalyzer::at(double theta) {
  const double minus = theta + kPi / 2.0;
  return {polarizer_matrix(theta), polarizer_matrix(minus), axis(theta), axis(minus)};
}

CoincidenceProbabilities locked_mode_coincidence(const sources::PairEmission& pair, double theta1,
                                                 double theta2) {
  return locked_mode_coincidence(pair, TwoChannelAnalyzer::at(theta1), TwoChannelAnalyzer::at(theta2));
}

CoincidenceProbabilities locked_mode_coincidence(const sources::PairEmission& pair, const TwoChannelAnalyzer& arm1,
                                                 const TwoChannelAnalyzer& arm2) {
  const int n = pair.lambda.primary != 0.0 ? 1 : 0;
  const sources::PairEmission partner = sources::locked_mode_emission(1 - n);

  // Signed amplitude behind one analyzer output: E = P S, read along the output axis.
  auto amplitude = [](const PolarizerMatrix& p, const FieldVector& out_axis, const FieldVector& f) {
    return p.apply(f).dot(out_axis);
  };
  auto probability = [&](const PolarizerMatrix& p1, const FieldVector& u1, const PolarizerMatrix& p2,
                         const FieldVector& u2) {
    const double sum = amplitude(p1, u1, pair.left) * amplitude(p2, u2, pair.right) +
                       amplitude(p1, u1, partner.left) * amplitude(p2, u2, partner.right);
    return 0.5 * sum * sum;
  };

  return {probability(arm1.plus, arm1.plus_axis, arm2.plus, arm2.plus_axis),
          probability(arm1.minus, arm1.minus_axis, arm2.minus, arm2.minus_axis),
          probability(arm1.plus, arm1.plus_axis, arm2.minus, arm2.minus_axis),
          probability(arm1.minus, arm1.minus_axis, arm2.plus, arm2.plus_axis)};
}

double barut_quadrature(double theta, std::size_t n_nodes) {
  if (n_nodes < 16) throw ConfigError("barut_quadrature needs at least 16 nodes");
  if (!std::isfinite(theta)) throw InputError("angle must be finite");

  const std::size_t n_gamma = n_nodes % 2 == 0 ? n_nodes : n_nodes + 1;  // Simpson intervals
  const std::size_t n_phi = n_nodes;
  const double h_gamma = kPi / static_cast<double>(n_gamma);
  const double h_phi = 2.0 * kPi / static_cast<double>(n_phi);

  const sources::Vec3 a{0.0, 0.0, 1.0};
  const sources::Vec3 b{std::sin(theta), 0.0, std::cos(theta)};

  double mean_a = 0.0, mean_b = 0.0, mean_ab = 0.0, mean_aa = 0.0, mean_bb = 0.0;
  for (std::size_t i = 0; i <= n_gamma; ++i) {
    const double gamma = h_gamma * static_cast<double>(i);
    const double simpson = (i == 0 || i == n_gamma) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    const double weight_gamma = simpson * h_gamma / 3.0 * std::sin(gamma);
    for (std::size_t j = 0; j < n_phi; ++j) {
      const double phi = h_phi * static_cast<double>(j);
      const auto pair = sources::barut_emission(gamma, phi);
      const double w = weight_gamma * h_phi / (4.0 * kPi);
      const double obs_a = pair.s1.dot(a);
      const double obs_b = pair.s2.dot(b);
      mean_a += w * obs_a;
      mean_b += w * obs_b;
      mean_ab += w * obs_a * obs_b;
      mean_aa += w * obs_a * obs_a;
      mean_bb += w * obs_b * obs_b;
    }
  }
  return (mean_ab - mean_a * mean_b) / std::sqrt(mean_aa * mean_bb);
}

}  // namespace eprsim::optics
