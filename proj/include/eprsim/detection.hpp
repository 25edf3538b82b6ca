#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "eprsim/model.hpp"
#include "eprsim/optics.hpp"
#include "eprsim/rng.hpp"
#include "eprsim/sources.hpp"

namespace eprsim::detection {

using optics::ChannelIntensities;
using sources::HiddenVariable;

enum class Station { kA, kB };

/// One detector click.
struct EventRecord {
  double time = 0.0;
  Station station = Station::kA;
  int channel = +1;  // +1 or -1
  HiddenVariable lambda_tag;
};

/// Joint tallies for one setting pair.
struct CoincidenceCounts {
  std::uint64_t n_pp = 0;
  std::uint64_t n_mm = 0;
  std::uint64_t n_pm = 0;
  std::uint64_t n_mp = 0;
  std::uint64_t n_singles_a = 0;
  std::uint64_t n_singles_b = 0;
  double window = 0.0;
  double duration = 0.0;

  [[nodiscard]] std::uint64_t total() const { return n_pp + n_mm + n_pm + n_mp; }
  /// Adds the tallies of a disjoint batch; window and duration must agree.
  CoincidenceCounts& operator+=(const CoincidenceCounts& other);
};

struct DetectorConfig {
  double efficiency = 1.0;   // (0, 1]
  double jitter_max = 0.0;   // click latency uniform on [0, jitter_max] seconds
  double dark_rate = 0.0;    // dark clicks per second per station

  void validate() const;
};

/// Square-law detector at one station. Each call consumes its own sub-stream,
/// so a detector's output depends only on (seed, station) and its inputs.
class Detector {
 public:
  Detector(DetectorConfig config, Station station, Engine engine);

  /// At most one click: with probability efficiency the detector fires, and the
  /// channel is +1 with probability i_plus / (i_plus + i_minus).
  std::optional<EventRecord> detect(const ChannelIntensities& intensities, double emission_time,
                                    const HiddenVariable& lambda);

  /// Fires into a channel already fixed by a joint draw, with probability efficiency.
  std::optional<EventRecord> detect_channel(int channel, double emission_time, const HiddenVariable& lambda);

  [[nodiscard]] const DetectorConfig& config() const { return config_; }

 private:
  double click_time(double emission_time);

  DetectorConfig config_;
  Station station_;
  Engine engine_;
};

/// Draws one of (+,+), (-,-), (+,-), (-,+) from joint probabilities.
std::pair<int, int> sample_joint_channels(const optics::CoincidenceProbabilities& joint, Engine& engine);

/// Greedy nearest-in-time pairing of A and B clicks with |t_A - t_B| <= window.
/// A events are visited in time order; each takes the nearest unused B event
/// (ties toward the earlier B). Throws InputError for unsorted streams or a
/// negative window, ConfigError if window >= duration.
CoincidenceCounts count_coincidences(std::span<const EventRecord> stream_a, std::span<const EventRecord> stream_b,
                                     double window, double duration);

/// Channel pairs (A, B) of the coincidences found by count_coincidences, in A-time order.
std::vector<std::pair<int, int>> match_coincidences(std::span<const EventRecord> stream_a,
                                                    std::span<const EventRecord> stream_b, double window,
                                                    double duration);

/// Click streams of both stations for one run.
struct StationStreams {
  std::vector<EventRecord> a;
  std::vector<EventRecord> b;
  double duration = 0.0;
};

struct RunSettings {
  Model model = Model::kLockedMode;
  std::uint64_t seed = 0;
  std::size_t n_events = 0;
  double mean_rate = 1.0e3;  // emissions per second
  DetectorConfig detector;
};

/// Source -> polarizers -> detectors for analyzer angles (theta1, theta2).
///   locked-mode: joint channels drawn from the pair's second-order coherence
///   furry:       independent Malus detection at each arm
///   accidentals: two independent random-polarization Poisson streams
/// Other models have no photon event picture and raise ConfigError.
StationStreams simulate_events(const RunSettings& settings, double theta1, double theta2);

/// simulate_events followed by count_coincidences.
CoincidenceCounts simulate_counts(const RunSettings& settings, double theta1, double theta2, double window);

struct WindowRate {
  double window = 0.0;
  std::uint64_t coincidences = 0;
  double pair_rate = 0.0;  // coincidences per second of run time
};

/// Coincidence rate versus window width on one fixed event realization.
/// Windows must be non-negative and ascending.
std::vector<WindowRate> window_sweep(const RunSettings& settings, std::span<const double> windows,
                                     double theta1 = 0.0, double theta2 = 0.0);

/// CSV export with header time,station,channel,lambda; times and lambda with 9
/// fractional digits, events merged in time order (A before B on ties).
void write_events_csv(std::ostream& out, std::span<const EventRecord> a, std::span<const EventRecord> b);

}  // namespace eprsim::detection
