#include "eprsim/detection.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "eprsim/errors.hpp"

namespace eprsim::detection {
namespace {

void tally(CoincidenceCounts& counts, int channel_a, int channel_b) {
  if (channel_a > 0) {
    channel_b > 0 ? ++counts.n_pp : ++counts.n_pm;
  } else {
    channel_b > 0 ? ++counts.n_mp : ++counts.n_mm;
  }
}

bool time_sorted(std::span<const EventRecord> events) {
  return std::is_sorted(events.begin(), events.end(),
                        [](const EventRecord& l, const EventRecord& r) { return l.time < r.time; });
}

void sort_by_time(std::vector<EventRecord>& events) {
  std::stable_sort(events.begin(), events.end(),
                   [](const EventRecord& l, const EventRecord& r) { return l.time < r.time; });
}

void add_dark_counts(std::vector<EventRecord>& events, const DetectorConfig& config, Station station,
                     std::uint64_t seed, double duration) {
  if (config.dark_rate <= 0.0) return;
  auto engine = make_engine(seed, StreamId::kDarkCounts, station == Station::kA ? 0 : 1);
  std::exponential_distribution<double> gap(config.dark_rate);
  for (double t = gap(engine); t < duration; t += gap(engine)) {
    const int channel = uniform01(engine) < 0.5 ? +1 : -1;
    events.push_back({t, station, channel, {}});
  }
}

Engine detector_engine(std::uint64_t seed, Station station) {
  return make_engine(seed, station == Station::kA ? StreamId::kDetectorA : StreamId::kDetectorB);
}

}  // namespace

CoincidenceCounts& CoincidenceCounts::operator+=(const CoincidenceCounts& other) {
  if (window != other.window) throw InputError("cannot merge counts taken with different windows");
  n_pp += other.n_pp;
  n_mm += other.n_mm;
  n_pm += other.n_pm;
  n_mp += other.n_mp;
  n_singles_a += other.n_singles_a;
  n_singles_b += other.n_singles_b;
  duration += other.duration;
  return *this;
}

void DetectorConfig::validate() const {
  if (!(efficiency > 0.0 && efficiency <= 1.0)) throw ConfigError("detector efficiency must lie in (0, 1]");
  if (!(jitter_max >= 0.0) || !std::isfinite(jitter_max)) throw ConfigError("jitter_max must be >= 0");
  if (!(dark_rate >= 0.0) || !std::isfinite(dark_rate)) throw ConfigError("dark_rate must be >= 0");
}

Detector::Detector(DetectorConfig config, Station station, Engine engine)
    : config_(config), station_(station), engine_(std::move(engine)) {
  config_.validate();
}

double Detector::click_time(double emission_time) {
  if (config_.jitter_max <= 0.0) return emission_time;
  return emission_time + config_.jitter_max * uniform01(engine_);
}

std::optional<EventRecord> Detector::detect(const ChannelIntensities& intensities, double emission_time,
                                            const HiddenVariable& lambda) {
  const double incident = intensities.total();
  // Two draws per call regardless of outcome keep the sub-stream aligned per emission.
  const double fire = uniform01(engine_);
  const double select = uniform01(engine_);
  if (incident <= 0.0 || fire >= config_.efficiency) return std::nullopt;
  const int channel = select * incident < intensities.i_plus ? +1 : -1;
  return EventRecord{click_time(emission_time), station_, channel, lambda};
}

std::optional<EventRecord> Detector::detect_channel(int channel, double emission_time,
                                                    const HiddenVariable& lambda) {
  if (uniform01(engine_) >= config_.efficiency) return std::nullopt;
  return EventRecord{click_time(emission_time), station_, channel, lambda};
}

std::pair<int, int> sample_joint_channels(const optics::CoincidenceProbabilities& joint, Engine& engine) {
  const double u = uniform01(engine) * joint.sum();
  double edge = joint.pp;
  if (u < edge) return {+1, +1};
  edge += joint.mm;
  if (u < edge) return {-1, -1};
  edge += joint.pm;
  if (u < edge) return {+1, -1};
  return {-1, +1};
}

namespace {

template <typename OnMatch>
void greedy_match(std::span<const EventRecord> stream_a, std::span<const EventRecord> stream_b, double window,
                  double duration, OnMatch&& on_match) {
  if (!(window >= 0.0)) throw InputError("coincidence window must be non-negative");
  if (!(window < duration)) throw ConfigError("coincidence window must be shorter than the run duration");
  if (!time_sorted(stream_a) || !time_sorted(stream_b)) throw InputError("event streams must be time-sorted");

  std::vector<bool> used(stream_b.size(), false);
  std::size_t first = 0;  // earliest B event that may still fall in a window
  for (const auto& a : stream_a) {
    while (first < stream_b.size() && stream_b[first].time < a.time - window) ++first;
    std::size_t best = stream_b.size();
    double best_gap = INFINITY;
    for (std::size_t j = first; j < stream_b.size() && stream_b[j].time <= a.time + window; ++j) {
      if (used[j]) continue;
      const double gap = std::abs(stream_b[j].time - a.time);
      if (gap < best_gap) {
        best_gap = gap;
        best = j;
      }
    }
    if (best < stream_b.size()) {
      used[best] = true;
      on_match(a.channel, stream_b[best].channel);
    }
  }
}

}  // namespace

CoincidenceCounts count_coincidences(std::span<const EventRecord> stream_a, std::span<const EventRecord> stream_b,
                                     double window, double duration) {
  CoincidenceCounts counts;
  counts.window = window;
  counts.duration = duration;
  counts.n_singles_a = stream_a.size();
  counts.n_singles_b = stream_b.size();
  greedy_match(stream_a, stream_b, window, duration, [&](int ca, int cb) { tally(counts, ca, cb); });
  return counts;
}

std::vector<std::pair<int, int>> match_coincidences(std::span<const EventRecord> stream_a,
                                                    std::span<const EventRecord> stream_b, double window,
                                                    double duration) {
  std::vector<std::pair<int, int>> pairs;
  greedy_match(stream_a, stream_b, window, duration, [&](int ca, int cb) { pairs.emplace_back(ca, cb); });
  return pairs;
}

StationStreams simulate_events(const RunSettings& settings, double theta1, double theta2) {
  settings.detector.validate();
  StationStreams out;
  Detector det_a(settings.detector, Station::kA, detector_engine(settings.seed, Station::kA));
  Detector det_b(settings.detector, Station::kB, detector_engine(settings.seed, Station::kB));
  out.a.reserve(settings.n_events);
  out.b.reserve(settings.n_events);
  double last_emission = 0.0;

  switch (settings.model) {
    case Model::kLockedMode: {
      sources::LockedModeSource source(settings.seed, settings.n_events, settings.mean_rate);
      auto joint_engine = make_engine(settings.seed, StreamId::kJointOutcome);
      const auto arm1 = optics::TwoChannelAnalyzer::at(theta1);
      const auto arm2 = optics::TwoChannelAnalyzer::at(theta2);
      while (auto pair = source.next()) {
        const auto joint = optics::locked_mode_coincidence(*pair, arm1, arm2);
        const auto [channel_a, channel_b] = sample_joint_channels(joint, joint_engine);
        if (auto e = det_a.detect_channel(channel_a, pair->emit_time, pair->lambda)) out.a.push_back(*e);
        if (auto e = det_b.detect_channel(channel_b, pair->emit_time, pair->lambda)) out.b.push_back(*e);
        last_emission = pair->emit_time;
      }
      break;
    }
    case Model::kFurry: {
      sources::FurrySource source(settings.seed, settings.n_events, settings.mean_rate);
      const auto pol_a = optics::polarizer_matrix(theta1);
      const auto pol_b = optics::polarizer_matrix(theta2);
      while (auto pair = source.next()) {
        const auto in_a = optics::project(pol_a, pair->left).intensities;
        const auto in_b = optics::project(pol_b, pair->right).intensities;
        if (auto e = det_a.detect(in_a, pair->emit_time, pair->lambda)) out.a.push_back(*e);
        if (auto e = det_b.detect(in_b, pair->emit_time, pair->lambda)) out.b.push_back(*e);
        last_emission = pair->emit_time;
      }
      break;
    }
    case Model::kAccidentals: {
      const auto pol_a = optics::polarizer_matrix(theta1);
      const auto pol_b = optics::polarizer_matrix(theta2);
      const auto arm_a = sources::random_polarization_stream(settings.seed, StreamId::kEmissionTiming,
                                                             settings.n_events, settings.mean_rate);
      const auto arm_b = sources::random_polarization_stream(settings.seed, StreamId::kAccidentalsB,
                                                             settings.n_events, settings.mean_rate);
      for (const auto& s : arm_a) {
        if (auto e = det_a.detect(optics::project(pol_a, s.field).intensities, s.emit_time, s.lambda)) {
          out.a.push_back(*e);
        }
      }
      for (const auto& s : arm_b) {
        if (auto e = det_b.detect(optics::project(pol_b, s.field).intensities, s.emit_time, s.lambda)) {
          out.b.push_back(*e);
        }
      }
      if (!arm_a.empty()) last_emission = std::max(arm_a.back().emit_time, arm_b.back().emit_time);
      break;
    }
    case Model::kBarut:
    case Model::kQmOracle:
      throw ConfigError("model '" + to_string(settings.model) + "' has no photon event simulation");
  }

  out.duration = last_emission + settings.detector.jitter_max + 1.0 / settings.mean_rate;
  add_dark_counts(out.a, settings.detector, Station::kA, settings.seed, out.duration);
  add_dark_counts(out.b, settings.detector, Station::kB, settings.seed, out.duration);
  sort_by_time(out.a);
  sort_by_time(out.b);
  return out;
}

CoincidenceCounts simulate_counts(const RunSettings& settings, double theta1, double theta2, double window) {
  const auto streams = simulate_events(settings, theta1, theta2);
  return count_coincidences(streams.a, streams.b, window, streams.duration);
}

std::vector<WindowRate> window_sweep(const RunSettings& settings, std::span<const double> windows, double theta1,
                                     double theta2) {
  for (std::size_t i = 0; i < windows.size(); ++i) {
    if (!(windows[i] >= 0.0)) throw InputError("window widths must be non-negative");
    if (i > 0 && !(windows[i] > windows[i - 1])) throw InputError("window widths must be ascending");
  }
  const auto streams = simulate_events(settings, theta1, theta2);
  std::vector<WindowRate> out;
  out.reserve(windows.size());
  for (const double w : windows) {
    const auto counts = count_coincidences(streams.a, streams.b, w, streams.duration);
    out.push_back({w, counts.total(), static_cast<double>(counts.total()) / streams.duration});
  }
  return out;
}

void write_events_csv(std::ostream& out, std::span<const EventRecord> a, std::span<const EventRecord> b) {
  out << "time,station,channel,lambda\n";
  char line[128];
  auto emit = [&](const EventRecord& e) {
    std::snprintf(line, sizeof line, "%.9f,%c,%d,%.9f\n", e.time, e.station == Station::kA ? 'A' : 'B',
                  e.channel, e.lambda_tag.primary);
    out << line;
  };
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].time <= b[j].time)) {
      emit(a[i++]);
    } else {
      emit(b[j++]);
    }
  }
}

}  // namespace eprsim::detection
