#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "eprsim/rng.hpp"

namespace eprsim::sources {

/// Per-emission hidden variable. Interpretation depends on the source:
///   locked-mode: primary = n in {0, 1}
///   furry:       primary = nu in [0, pi)
///   barut:       primary = gamma in [0, pi], secondary = phi in [0, 2 pi)
///   accidentals: primary = polarization angle in [0, pi)
struct HiddenVariable {
  double primary = 0.0;
  double secondary = 0.0;
};

/// Real amplitudes of one arm's signal in the horizontal and vertical modes.
struct FieldVector {
  double h = 0.0;
  double v = 0.0;

  [[nodiscard]] double norm2() const { return h * h + v * v; }
  [[nodiscard]] double dot(const FieldVector& other) const { return h * other.h + v * other.v; }
};

struct PairEmission {
  FieldVector left;
  FieldVector right;
  HiddenVariable lambda;
  double emit_time = 0.0;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  [[nodiscard]] double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  [[nodiscard]] double norm() const;
};

struct SpinPairEmission {
  Vec3 s1;
  Vec3 s2;
  HiddenVariable lambda;
};

/// Locked-mode double signal for mode index n (0 or 1):
/// left = (cos(n pi/2), sin(n pi/2)), right = (sin(n pi/2), -cos(n pi/2)).
/// The n = 0, 1 cases are returned exactly (no trigonometric round-off).
PairEmission locked_mode_emission(int n, double emit_time = 0.0);

/// Furry single-mode pair: left polarized along nu, right along nu + pi/2.
PairEmission furry_emission(double nu, double emit_time = 0.0);

/// Barut spin pair for polar angle gamma and azimuth phi; s2 = -s1 exactly.
SpinPairEmission barut_emission(double gamma, double phi);

/// Homogeneous Poisson emission clock with strictly increasing timestamps.
class PoissonClock {
 public:
  PoissonClock(std::uint64_t seed, double mean_rate, StreamId stream = StreamId::kEmissionTiming);
  double next();

 private:
  Engine engine_;
  std::exponential_distribution<double> gaps_;
  double now_ = 0.0;
};

/// Stateful generator of locked-mode pairs: n redrawn uniformly on {0,1} per pair.
class LockedModeSource {
 public:
  LockedModeSource(std::uint64_t seed, std::size_t n_events, double mean_rate);
  std::optional<PairEmission> next();

 private:
  PoissonClock clock_;
  Engine engine_;
  std::size_t remaining_;
};

/// Stateful generator of Furry pairs: nu uniform on [0, pi).
class FurrySource {
 public:
  FurrySource(std::uint64_t seed, std::size_t n_events, double mean_rate);
  std::optional<PairEmission> next();

 private:
  PoissonClock clock_;
  Engine engine_;
  std::size_t remaining_;
};

/// Stateful generator of Barut spin pairs, uniform on the unit sphere.
class BarutSource {
 public:
  BarutSource(std::uint64_t seed, std::size_t n_events);
  std::optional<SpinPairEmission> next();

 private:
  Engine engine_;
  std::size_t remaining_;
};

/// One arm of the uncorrelated reference source: single signals at Poisson
/// times with a polarization angle uniform on [0, pi).
struct SingleEmission {
  FieldVector field;
  HiddenVariable lambda;
  double emit_time = 0.0;
};

std::vector<PairEmission> locked_mode_source(std::uint64_t seed, std::size_t n_events, double mean_rate);
std::vector<PairEmission> furry_source(std::uint64_t seed, std::size_t n_events, double mean_rate);
std::vector<SpinPairEmission> barut_source(std::uint64_t seed, std::size_t n_events);
std::vector<SingleEmission> random_polarization_stream(std::uint64_t seed, StreamId stream,
                                                       std::size_t n_events, double mean_rate);

}  // namespace eprsim::sources
