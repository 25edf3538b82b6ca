#include "eprsim/samples.hpp"

#include <cmath>

#include "eprsim/optics.hpp"
#include "eprsim/sources.hpp"

namespace eprsim::samples {
namespace {

// Emission timing does not enter the intensity estimators.
constexpr double kUnitRate = 1.0;

}  // namespace

ArmSamples furry_intensities(std::uint64_t seed, std::size_t n_events, double theta1, double theta2) {
  const auto pol_a = optics::polarizer_matrix(theta1);
  const auto pol_b = optics::polarizer_matrix(theta2);
  ArmSamples out;
  out.a.reserve(n_events);
  out.b.reserve(n_events);
  sources::FurrySource source(seed, n_events, kUnitRate);
  while (auto pair = source.next()) {
    out.a.push_back(optics::project(pol_a, pair->left).intensities.i_plus);
    out.b.push_back(optics::project(pol_b, pair->right).intensities.i_plus);
  }
  return out;
}

ArmSamples barut_observables(std::uint64_t seed, std::size_t n_events, double theta) {
  const sources::Vec3 a_hat{0.0, 0.0, 1.0};
  const sources::Vec3 b_hat{std::sin(theta), 0.0, std::cos(theta)};
  ArmSamples out;
  out.a.reserve(n_events);
  out.b.reserve(n_events);
  sources::BarutSource source(seed, n_events);
  while (auto pair = source.next()) {
    out.a.push_back(pair->s1.dot(a_hat));
    out.b.push_back(pair->s2.dot(b_hat));
  }
  return out;
}

LockedModeIntensities locked_mode_intensities(std::uint64_t seed, std::size_t n_events, double theta1,
                                              double theta2) {
  const auto pol_a = optics::polarizer_matrix(theta1);
  const auto pol_b = optics::polarizer_matrix(theta2);
  const auto arm1 = optics::TwoChannelAnalyzer::at(theta1);
  const auto arm2 = optics::TwoChannelAnalyzer::at(theta2);
  LockedModeIntensities out;
  out.coincidence.reserve(n_events);
  out.a.reserve(n_events);
  out.b.reserve(n_events);
  sources::LockedModeSource source(seed, n_events, kUnitRate);
  while (auto pair = source.next()) {
    // Each mode carries half the pair energy; undo that for the raw intensity.
    out.coincidence.push_back(2.0 * optics::locked_mode_coincidence(*pair, arm1, arm2).pp);
    out.a.push_back(optics::project(pol_a, pair->left).intensities.total());
    out.b.push_back(optics::project(pol_b, pair->right).intensities.total());
  }
  return out;
}

}  // namespace eprsim::samples
