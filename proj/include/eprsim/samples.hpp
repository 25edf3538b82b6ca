#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace eprsim::samples {

/// Per-emission arm observables for the intensity-based estimators.
struct ArmSamples {
  std::vector<double> a;
  std::vector<double> b;
};

/// Furry pairs through polarizers at (theta1, theta2): a = transmitted
/// intensity at arm A (cos^2(nu - theta1)), b = at arm B (sin^2(nu - theta2)).
ArmSamples furry_intensities(std::uint64_t seed, std::size_t n_events, double theta1, double theta2);

/// Barut spin pairs: a = s1 . a_hat, b = s2 . b_hat, with the analyzer axes in
/// the x-z plane separated by theta.
ArmSamples barut_observables(std::uint64_t seed, std::size_t n_events, double theta);

/// Locked-mode pairs with both channels of each analyzer read out.
struct LockedModeIntensities {
  std::vector<double> coincidence;  // unnormalized (+,+) coherence intensity of the pair
  std::vector<double> a;            // i_plus + i_minus at arm A
  std::vector<double> b;            // i_plus + i_minus at arm B
};

LockedModeIntensities locked_mode_intensities(std::uint64_t seed, std::size_t n_events, double theta1,
                                              double theta2);

}  // namespace eprsim::samples
