#include "eprsim/sources.hpp"

#include <cmath>
#include <numbers>

#include "eprsim/errors.hpp"

namespace eprsim::sources {
namespace {

double checked_rate(double mean_rate) {
  if (!(mean_rate > 0.0) || !std::isfinite(mean_rate)) {
    throw ConfigError("mean_rate must be positive and finite");
  }
  return mean_rate;
}

}  // namespace

double Vec3::norm() const { return std::sqrt(dot(*this)); }

PairEmission locked_mode_emission(int n, double emit_time) {
  if (n != 0 && n != 1) throw InputError("locked-mode index must be 0 or 1");
  PairEmission e;
  // cos(n pi/2) and sin(n pi/2) written out so the modes are exactly orthogonal.
  const double c = n == 0 ? 1.0 : 0.0;
  const double s = n == 0 ? 0.0 : 1.0;
  e.left = {c, s};
  e.right = {s, n == 0 ? -1.0 : 0.0};
  e.lambda.primary = n;
  e.emit_time = emit_time;
  return e;
}

PairEmission furry_emission(double nu, double emit_time) {
  PairEmission e;
  const double c = std::cos(nu);
  const double s = std::sin(nu);
  e.left = {c, s};
  // Rotation of (c, s) by +pi/2.
  e.right = {-s, c};
  e.lambda.primary = nu;
  e.emit_time = emit_time;
  return e;
}

SpinPairEmission barut_emission(double gamma, double phi) {
  SpinPairEmission e;
  const double sg = std::sin(gamma);
  e.s1 = {sg * std::cos(phi), sg * std::sin(phi), std::cos(gamma)};
  e.s2 = {-e.s1.x, -e.s1.y, -e.s1.z};
  e.lambda = {gamma, phi};
  return e;
}

PoissonClock::PoissonClock(std::uint64_t seed, double mean_rate, StreamId stream)
    : engine_(make_engine(seed, stream)), gaps_(checked_rate(mean_rate)) {}

double PoissonClock::next() {
  const double t = now_ + gaps_(engine_);
  now_ = t > now_ ? t : std::nextafter(now_, INFINITY);
  return now_;
}

LockedModeSource::LockedModeSource(std::uint64_t seed, std::size_t n_events, double mean_rate)
    : clock_(seed, mean_rate), engine_(make_engine(seed, StreamId::kHiddenVariable)), remaining_(n_events) {}

std::optional<PairEmission> LockedModeSource::next() {
  if (remaining_ == 0) return std::nullopt;
  --remaining_;
  const int n = static_cast<int>(engine_() >> 63);
  return locked_mode_emission(n, clock_.next());
}

FurrySource::FurrySource(std::uint64_t seed, std::size_t n_events, double mean_rate)
    : clock_(seed, mean_rate), engine_(make_engine(seed, StreamId::kHiddenVariable)), remaining_(n_events) {}

std::optional<PairEmission> FurrySource::next() {
  if (remaining_ == 0) return std::nullopt;
  --remaining_;
  const double nu = std::numbers::pi * uniform01(engine_);
  return furry_emission(nu, clock_.next());
}

BarutSource::BarutSource(std::uint64_t seed, std::size_t n_events)
    : engine_(make_engine(seed, StreamId::kHiddenVariable)), remaining_(n_events) {}

std::optional<SpinPairEmission> BarutSource::next() {
  if (remaining_ == 0) return std::nullopt;
  --remaining_;
  // Inverse CDF of the sin(gamma)/2 density on [0, pi].
  const double gamma = std::acos(1.0 - 2.0 * uniform01(engine_));
  const double phi = 2.0 * std::numbers::pi * uniform01(engine_);
  return barut_emission(gamma, phi);
}

std::vector<PairEmission> locked_mode_source(std::uint64_t seed, std::size_t n_events, double mean_rate) {
  LockedModeSource source(seed, n_events, mean_rate);
  std::vector<PairEmission> out;
  out.reserve(n_events);
  while (auto e = source.next()) out.push_back(*e);
  return out;
}

std::vector<PairEmission> furry_source(std::uint64_t seed, std::size_t n_events, double mean_rate) {
  FurrySource source(seed, n_events, mean_rate);
  std::vector<PairEmission> out;
  out.reserve(n_events);
  while (auto e = source.next()) out.push_back(*e);
  return out;
}

std::vector<SpinPairEmission> barut_source(std::uint64_t seed, std::size_t n_events) {
  BarutSource source(seed, n_events);
  std::vector<SpinPairEmission> out;
  out.reserve(n_events);
  while (auto e = source.next()) out.push_back(*e);
  return out;
}

std::vector<SingleEmission> random_polarization_stream(std::uint64_t seed, StreamId stream,
                                                       std::size_t n_events, double mean_rate) {
  PoissonClock clock(seed, mean_rate, stream);
  auto engine = make_engine(seed, stream, 1);
  std::vector<SingleEmission> out;
  out.reserve(n_events);
  for (std::size_t i = 0; i < n_events; ++i) {
    const double angle = std::numbers::pi * uniform01(engine);
    out.push_back({{std::cos(angle), std::sin(angle)}, {angle, 0.0}, clock.next()});
  }
  return out;
}

}  // namespace eprsim::sources
