#pragma once

#include <cstdint>
#include <random>

namespace eprsim {

using Engine = std::mt19937_64;

/// Independent sub-stream identifiers split off one master seed.
enum class StreamId : std::uint64_t {
  kEmissionTiming = 1,
  kHiddenVariable = 2,
  kDetectorA = 3,
  kDetectorB = 4,
  kJointOutcome = 5,
  kDarkCounts = 6,
  kAccidentalsB = 7,
  kFuzz = 8,
};

/// Deterministic engine for (master seed, stream, index). Distinct triples give
/// statistically independent streams; identical triples give identical streams.
inline Engine make_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Engine(seq);
}

inline Engine make_engine(std::uint64_t seed, StreamId stream, std::uint64_t index = 0) {
  return make_engine(seed, static_cast<std::uint64_t>(stream), index);
}

/// Uniform draw on [0, 1).
inline double uniform01(Engine& engine) {
  return std::generate_canonical<double, 64>(engine);
}

/// Derives the master seed of sub-run `index` (one per angle point or setting pair).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  auto engine = make_engine(seed, 0x5eedULL, index);
  return engine();
}

}  // namespace eprsim
