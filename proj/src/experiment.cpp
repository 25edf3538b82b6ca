#include "eprsim/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include "eprsim/analysis.hpp"
#include "eprsim/errors.hpp"
#include "eprsim/optics.hpp"
#include "eprsim/rng.hpp"
#include "eprsim/samples.hpp"
#include "eprsim/statistics.hpp"

namespace eprsim::cli {
namespace {

using nlohmann::json;
using statistics::CorrelationEstimate;

constexpr double kPi = std::numbers::pi;
constexpr const char* kCorrelationHeader = "theta,model,estimator,value,std_err,n";

const std::set<std::string> kExperiments = {"correlation-sweep", "chsh",          "window-sweep",
                                            "sica-fuzz",         "dichotomic-demo", "barut-quadrature"};

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string default_estimator(Model model) {
  switch (model) {
    case Model::kLockedMode:
    case Model::kAccidentals:
      return "four-channel";
    case Model::kFurry:
    case Model::kBarut:
      return "normalized";
    case Model::kQmOracle:
      return "analytic";
  }
  return "analytic";
}

void check_estimator(Model model, const std::string& estimator) {
  if (estimator == "analytic") {
    if (model == Model::kAccidentals) throw ConfigError("no analytic correlation for the accidentals source");
    return;
  }
  const bool ok = (estimator == "four-channel" &&
                   (model == Model::kLockedMode || model == Model::kFurry || model == Model::kAccidentals)) ||
                  (estimator == "normalized" && (model == Model::kFurry || model == Model::kBarut)) ||
                  ((estimator == "coherence" || estimator == "coherence-single") && model == Model::kLockedMode);
  if (!ok) throw ConfigError("estimator '" + estimator + "' is not available for model '" + to_string(model) + "'");
}

std::string resolved_estimator(const ExperimentConfig& config) {
  return config.estimator.empty() ? default_estimator(config.model) : config.estimator;
}

detection::RunSettings run_settings(const ExperimentConfig& config, std::uint64_t seed) {
  return {config.model, seed, config.n_events, config.mean_rate, config.detector};
}

// Correlation at analyzer angles (theta1, theta2) for sub-run `index`.
CorrelationEstimate estimate(const ExperimentConfig& config, const std::string& estimator, std::size_t index,
                             double theta1, double theta2) {
  const std::uint64_t seed = derive_seed(config.seed, index);
  if (estimator == "analytic") return {optics::analytic_correlation(config.model, theta1 - theta2), 0, 0.0};
  if (estimator == "four-channel") {
    return statistics::four_channel_correlation(
        detection::simulate_counts(run_settings(config, seed), theta1, theta2, config.window));
  }
  if (estimator == "normalized") {
    const auto s = config.model == Model::kFurry
                       ? samples::furry_intensities(seed, config.n_events, theta1, theta2)
                       : samples::barut_observables(seed, config.n_events, theta1 - theta2);
    return statistics::normalized_correlation_estimate(s.a, s.b);
  }
  // coherence / coherence-single
  const bool doubled = estimator == "coherence";
  const auto s = samples::locked_mode_intensities(seed, config.n_events, theta1, theta2);
  CorrelationEstimate est{statistics::coherence_correlation(s.coincidence, s.a, s.b, doubled), s.a.size(), 0.0};
  if (s.a.size() > 1) {
    double mean = 0.0, sq = 0.0;
    for (const double c : s.coincidence) mean += c;
    mean /= static_cast<double>(s.a.size());
    for (const double c : s.coincidence) sq += (c - mean) * (c - mean);
    const double n = static_cast<double>(s.a.size());
    est.std_err = (doubled ? 2.0 : 1.0) * std::sqrt(sq / (n - 1.0) / n);
  }
  return est;
}

std::vector<double> resolve_angles(const ExperimentConfig& config, const std::string& fallback_preset) {
  if (!config.angles.empty()) return config.angles;
  return angle_preset(config.angles_preset.empty() ? fallback_preset : config.angles_preset);
}

void write_correlation_row(std::ostringstream& csv, double theta, const ExperimentConfig& config,
                           const std::string& estimator, const CorrelationEstimate& est) {
  csv << format_number(theta) << ',' << to_string(config.model) << ',' << estimator << ','
      << format_number(est.value) << ',' << format_number(est.std_err) << ',' << est.n << '\n';
}

double z_score(double deviation, double std_err) {
  if (deviation <= 1e-12) return 0.0;
  if (std_err <= 0.0) return std::numeric_limits<double>::infinity();
  return deviation / std_err;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

ExperimentResult correlation_sweep(const ExperimentConfig& config) {
  const auto estimator = resolved_estimator(config);
  check_estimator(config.model, estimator);
  const auto angles = resolve_angles(config, "sweep-16");

  std::vector<std::future<CorrelationEstimate>> jobs;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, estimate, std::cref(config), std::cref(estimator), i, angles[i], 0.0));
  }

  std::ostringstream csv;
  csv << kCorrelationHeader << '\n';
  const bool has_oracle = config.model != Model::kAccidentals;
  double max_dev = 0.0, max_z = 0.0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const auto est = jobs[i].get();
    write_correlation_row(csv, angles[i], config, estimator, est);
    if (has_oracle) {
      const double dev = std::abs(est.value - optics::analytic_correlation(config.model, angles[i]));
      max_dev = std::max(max_dev, dev);
      max_z = std::max(max_z, z_score(dev, est.std_err));
    }
  }

  if (!config.events_output.empty() && config.model != Model::kBarut && config.model != Model::kQmOracle) {
    const auto streams = detection::simulate_events(run_settings(config, derive_seed(config.seed, 0)), angles[0], 0.0);
    std::ofstream events(config.events_output);
    if (!events) throw IoError("cannot write " + config.events_output);
    detection::write_events_csv(events, streams.a, streams.b);
  }

  json scalars{{"estimator", estimator}, {"n_points", angles.size()}};
  if (has_oracle) {
    scalars["max_abs_dev"] = max_dev;
    scalars["max_z"] = finite_or_null(max_z);
  }
  return {csv.str(), scalars};
}

ExperimentResult chsh_experiment(const ExperimentConfig& config) {
  const auto estimator = resolved_estimator(config);
  check_estimator(config.model, estimator);
  const auto settings = resolve_angles(config, "chsh-optimal");
  if (settings.size() != 4) throw ConfigError("chsh needs four angles (a, a', b, b')");
  const double a = settings[0], a_prime = settings[1], b = settings[2], b_prime = settings[3];
  // Order of the terms in |P(a,b) - P(a,b')| + |P(a',b') + P(a',b)|.
  const std::array<std::pair<double, double>, 4> pairs{{{a, b}, {a, b_prime}, {a_prime, b_prime}, {a_prime, b}}};

  std::vector<std::future<CorrelationEstimate>> jobs;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, estimate, std::cref(config), std::cref(estimator), i,
                              pairs[i].first, pairs[i].second));
  }
  std::ostringstream csv;
  csv << kCorrelationHeader << '\n';
  std::array<CorrelationEstimate, 4> est{};
  double var = 0.0;
  json correlations = json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    est[i] = jobs[i].get();
    var += est[i].std_err * est[i].std_err;
    write_correlation_row(csv, pairs[i].first - pairs[i].second, config, estimator, est[i]);
    correlations.push_back({{"a", pairs[i].first}, {"b", pairs[i].second}, {"value", est[i].value},
                            {"std_err", est[i].std_err}, {"n", est[i].n}});
  }
  json scalars{{"estimator", estimator},
               {"chsh_value", statistics::chsh(est[0].value, est[1].value, est[2].value, est[3].value)},
               {"chsh_std_err", std::sqrt(var)},
               {"settings", {{"a", a}, {"a_prime", a_prime}, {"b", b}, {"b_prime", b_prime}}},
               {"correlations", correlations}};
  if (config.model != Model::kAccidentals) {
    auto p = [&](const std::pair<double, double>& s) {
      return optics::analytic_correlation(config.model, s.first - s.second);
    };
    scalars["chsh_analytic"] = statistics::chsh(p(pairs[0]), p(pairs[1]), p(pairs[2]), p(pairs[3]));
  }
  return {csv.str(), scalars};
}

ExperimentResult window_sweep_experiment(const ExperimentConfig& config) {
  std::vector<double> windows = config.windows;
  if (windows.empty()) {
    for (const double f : {1.0, 2.0, 4.0, 8.0, 16.0}) windows.push_back(config.window * f);
  }
  const auto rates = detection::window_sweep(run_settings(config, config.seed), windows);

  std::ostringstream csv;
  csv << "window,coincidences,pair_rate\n";
  double sxy = 0.0, sxx = 0.0, mean = 0.0;
  double lo = INFINITY, hi = -INFINITY;
  for (const auto& r : rates) {
    csv << format_number(r.window) << ',' << r.coincidences << ',' << format_number(r.pair_rate) << '\n';
    sxy += r.window * r.pair_rate;
    sxx += r.window * r.window;
    mean += r.pair_rate;
    lo = std::min(lo, r.pair_rate);
    hi = std::max(hi, r.pair_rate);
  }
  mean /= static_cast<double>(rates.size());
  const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
  double ss_res = 0.0, ss_tot = 0.0;
  for (const auto& r : rates) {
    ss_res += std::pow(r.pair_rate - slope * r.window, 2);
    ss_tot += std::pow(r.pair_rate - mean, 2);
  }
  json ratios = json::array();
  for (std::size_t k = 1; k < rates.size(); ++k) {
    if (std::abs(rates[k].window - 2.0 * rates[k - 1].window) <= 1e-12 * rates[k].window &&
        rates[k - 1].pair_rate > 0.0) {
      ratios.push_back(rates[k].pair_rate / rates[k - 1].pair_rate);
    }
  }
  json scalars{{"slope", slope},
               {"r_squared", finite_or_null(ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : NAN)},
               {"doubling_ratios", ratios},
               {"rate_variation", mean > 0.0 ? (hi - lo) / mean : 0.0},
               {"rate_times_window_max", config.mean_rate * windows.back()}};
  return {csv.str(), scalars};
}

ExperimentResult sica_fuzz(const ExperimentConfig& config) {
  auto engine = make_engine(config.seed, StreamId::kFuzz);
  std::uniform_int_distribution<std::size_t> length(1, config.max_length);
  struct PerLength {
    std::size_t trials = 0;
    std::size_t violations = 0;
    double max_lhs = 0.0;
  };
  std::vector<PerLength> table(config.max_length + 1);
  auto draw = [&](std::size_t n) {
    std::vector<int> v(n);
    std::uint64_t bits = engine();
    for (std::size_t i = 0; i < n; ++i) v[i] = (bits >> i) & 1U ? 1 : -1;
    return statistics::DichotomicSequence(std::move(v));
  };
  std::size_t violations = 0;
  double max_lhs = 0.0;
  for (std::size_t t = 0; t < config.n_events; ++t) {
    const std::size_t n = length(engine);
    const auto result = statistics::sica_check(draw(n), draw(n), draw(n), draw(n));
    auto& row = table[n];
    ++row.trials;
    row.max_lhs = std::max(row.max_lhs, result.lhs);
    if (!result.holds) {
      ++row.violations;
      ++violations;
    }
    max_lhs = std::max(max_lhs, result.lhs);
  }
  std::ostringstream csv;
  csv << "length,trials,max_lhs,violations\n";
  for (std::size_t n = 1; n < table.size(); ++n) {
    csv << n << ',' << table[n].trials << ',' << format_number(table[n].max_lhs) << ',' << table[n].violations << '\n';
  }
  return {csv.str(), {{"trials", config.n_events}, {"violations", violations}, {"max_lhs", max_lhs}, {"bound", 2.0}}};
}

ExperimentResult dichotomic_demo(const ExperimentConfig& config) {
  const auto p = config.switch_points.empty() ? analysis::StepFunction::random_dichotomic(config.seed, config.n_switches)
                                              : analysis::StepFunction::dichotomic(config.switch_points);
  const auto grid = config.angles.empty() ? analysis::linspace(0.0, kPi, 181) : config.angles;
  const auto corr = analysis::shifted_autocorrelation(p, grid);
  const auto dev = analysis::harmonic_deviation(corr);
  const auto linear = analysis::check_piecewise_linear(p, 4096);

  std::ostringstream csv;
  csv << "theta,autocorr,harmonic_ref,deviation\n";
  for (const auto& point : corr) {
    const double ref = -std::cos(2.0 * point.theta);
    csv << format_number(point.theta) << ',' << format_number(point.value) << ',' << format_number(ref) << ','
        << format_number(std::abs(point.value - ref)) << '\n';
  }
  json switches(std::vector<double>(p.switch_points().begin(), p.switch_points().end()));
  return {csv.str(),
          {{"max_deviation", dev.max_abs_dev},
           {"argmax", dev.argmax},
           {"piecewise_linear", linear.piecewise_linear},
           {"max_second_difference", linear.max_second_difference},
           {"kink_stencils_excluded", linear.excluded},
           {"switch_points", switches}}};
}

ExperimentResult barut_quadrature_experiment(const ExperimentConfig& config) {
  const auto angles = config.angles.empty() ? analysis::linspace(0.0, kPi, 32) : config.angles;
  std::ostringstream csv;
  csv << kCorrelationHeader << '\n';
  double max_dev = 0.0;
  for (const double theta : angles) {
    const double value = optics::barut_quadrature(theta, config.n_nodes);
    csv << format_number(theta) << ",barut,quadrature," << format_number(value) << ",0," << config.n_nodes << '\n';
    max_dev = std::max(max_dev, std::abs(value + std::cos(theta)));
  }
  return {csv.str(), {{"max_abs_dev", max_dev}, {"n_points", angles.size()}, {"n_nodes", config.n_nodes}}};
}

template <typename T>
T get_field(const json& doc, const char* key) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << contents;
  if (!out.flush()) throw IoError("write to '" + path + "' failed");
}

void report_error(std::ostream& err, const char* kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

std::vector<double> angle_preset(const std::string& name) {
  if (name == "chsh-optimal") return {0.0, kPi / 4.0, kPi / 8.0, 3.0 * kPi / 8.0};
  if (name.rfind("sweep-", 0) == 0) {
    std::size_t n = 0;
    try {
      n = std::stoul(name.substr(6));
    } catch (const std::exception&) {
      n = 0;
    }
    if (n > 0 && n <= 100000) {
      std::vector<double> out(n);
      for (std::size_t k = 0; k < n; ++k) out[k] = kPi * static_cast<double>(k) / static_cast<double>(n);
      return out;
    }
  }
  throw ConfigError("unknown angle preset '" + name + "'");
}

void ExperimentConfig::validate() const {
  if (!kExperiments.contains(experiment)) throw ConfigError("unknown experiment '" + experiment + "'");
  detector.validate();
  const bool monte_carlo = experiment == "correlation-sweep" || experiment == "chsh" ||
                           experiment == "window-sweep" || experiment == "sica-fuzz";
  if (monte_carlo && n_events < 1) throw ConfigError("n_events must be at least 1");
  if (!(mean_rate > 0.0) || !std::isfinite(mean_rate)) throw ConfigError("mean_rate must be positive");
  if (!(window >= 0.0) || !std::isfinite(window)) throw ConfigError("window must be non-negative");
  if (!angles_preset.empty()) angle_preset(angles_preset);
  for (const double a : angles) {
    if (!std::isfinite(a)) throw ConfigError("angles must be finite");
  }
  if (experiment == "sica-fuzz" && (max_length < 1 || max_length > 64)) {
    throw ConfigError("max_length must lie in [1, 64]");
  }
  if (experiment == "barut-quadrature" && n_nodes < 16) throw ConfigError("n_nodes must be at least 16");
  if (experiment == "correlation-sweep" || experiment == "chsh") check_estimator(model, estimator.empty() ? default_estimator(model) : estimator);
  if (experiment == "window-sweep" && (model == Model::kBarut || model == Model::kQmOracle)) {
    throw ConfigError("window-sweep needs a photon source (locked-mode, furry or accidentals)");
  }
}

json ExperimentConfig::to_json() const {
  json doc{{"experiment", experiment},
           {"model", to_string(model)},
           {"seed", seed},
           {"n_events", n_events},
           {"window", window},
           {"windows", windows},
           {"mean_rate", mean_rate},
           {"efficiency", detector.efficiency},
           {"jitter_max", detector.jitter_max},
           {"dark_rate", detector.dark_rate},
           {"estimator", estimator},
           {"n_nodes", n_nodes},
           {"max_length", max_length},
           {"switch_points", switch_points},
           {"n_switches", n_switches},
           {"output", output},
           {"summary", summary},
           {"events_output", events_output}};
  if (!angles_preset.empty()) {
    doc["angles"] = angles_preset;
  } else {
    doc["angles"] = angles;
  }
  return doc;
}

ExperimentConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> kKeys = {
      "experiment", "model",  "seed",         "n_events",      "angles",     "window",  "windows",
      "mean_rate",  "efficiency", "jitter_max", "dark_rate",   "estimator",  "n_nodes", "max_length",
      "switch_points", "n_switches", "output", "summary",     "events_output"};
  for (const auto& [key, value] : doc.items()) {
    if (!kKeys.contains(key)) throw ConfigError("unknown config key '" + key + "'");
  }
  ExperimentConfig c;
  if (doc.contains("experiment")) c.experiment = get_field<std::string>(doc, "experiment");
  if (doc.contains("model")) c.model = parse_model(get_field<std::string>(doc, "model"));
  if (doc.contains("seed")) c.seed = get_field<std::uint64_t>(doc, "seed");
  if (doc.contains("n_events")) c.n_events = get_field<std::size_t>(doc, "n_events");
  if (doc.contains("angles")) {
    if (doc["angles"].is_string()) {
      c.angles_preset = doc["angles"].get<std::string>();
    } else {
      c.angles = get_field<std::vector<double>>(doc, "angles");
    }
  }
  if (doc.contains("window")) c.window = get_field<double>(doc, "window");
  if (doc.contains("windows")) c.windows = get_field<std::vector<double>>(doc, "windows");
  if (doc.contains("mean_rate")) c.mean_rate = get_field<double>(doc, "mean_rate");
  if (doc.contains("efficiency")) c.detector.efficiency = get_field<double>(doc, "efficiency");
  if (doc.contains("jitter_max")) c.detector.jitter_max = get_field<double>(doc, "jitter_max");
  if (doc.contains("dark_rate")) c.detector.dark_rate = get_field<double>(doc, "dark_rate");
  if (doc.contains("estimator")) c.estimator = get_field<std::string>(doc, "estimator");
  if (doc.contains("n_nodes")) c.n_nodes = get_field<std::size_t>(doc, "n_nodes");
  if (doc.contains("max_length")) c.max_length = get_field<std::size_t>(doc, "max_length");
  if (doc.contains("switch_points")) c.switch_points = get_field<std::vector<double>>(doc, "switch_points");
  if (doc.contains("n_switches")) c.n_switches = get_field<std::size_t>(doc, "n_switches");
  if (doc.contains("output")) c.output = get_field<std::string>(doc, "output");
  if (doc.contains("summary")) c.summary = get_field<std::string>(doc, "summary");
  if (doc.contains("events_output")) c.events_output = get_field<std::string>(doc, "events_output");
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(doc);
}

ExperimentResult execute(const ExperimentConfig& config) {
  config.validate();
  if (config.experiment == "correlation-sweep") return correlation_sweep(config);
  if (config.experiment == "chsh") return chsh_experiment(config);
  if (config.experiment == "window-sweep") return window_sweep_experiment(config);
  if (config.experiment == "sica-fuzz") return sica_fuzz(config);
  if (config.experiment == "dichotomic-demo") return dichotomic_demo(config);
  return barut_quadrature_experiment(config);
}

int run(const ExperimentConfig& config, std::ostream& err) {
  try {
    if (config.output.empty()) throw ConfigError("output path is required");
    const auto start = std::chrono::steady_clock::now();
    const auto result = execute(config);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    json summary{{"config", config.to_json()},
                 {"seed", config.seed},
                 {"version", kVersion},
                 {"wall_clock_seconds", elapsed.count()}};
    summary.update(result.scalars);

    std::string summary_path = config.summary;
    if (summary_path.empty()) {
      summary_path = std::filesystem::path(config.output).replace_extension(".json").string();
      if (summary_path == config.output) summary_path += ".summary.json";
    }
    write_file(config.output, result.csv);
    write_file(summary_path, summary.dump(2) + "\n");
    return kOk;
  } catch (const ConfigError& e) {
    report_error(err, "invalid-config", e.what());
    return kInvalidConfig;
  } catch (const InputError& e) {
    report_error(err, "invalid-config", e.what());
    return kInvalidConfig;
  } catch (const IoError& e) {
    report_error(err, "io-failure", e.what());
    return kIoFailure;
  } catch (const std::exception& e) {
    report_error(err, "failure", e.what());
    return kFailure;
  }
}

CompareReport compare(std::istream& csv, Model oracle) {
  std::string line;
  if (!std::getline(csv, line) || line != kCorrelationHeader) {
    throw InputError(std::string("expected header '") + kCorrelationHeader + "'");
  }
  CompareReport report;
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream row(line);
    for (std::string field; std::getline(row, field, ',');) fields.push_back(field);
    if (fields.size() != 6) throw InputError("row has " + std::to_string(fields.size()) + " fields: " + line);
    double theta = 0.0, value = 0.0, std_err = 0.0;
    try {
      theta = std::stod(fields[0]);
      value = std::stod(fields[3]);
      std_err = std::stod(fields[4]);
    } catch (const std::exception&) {
      throw InputError("unparseable number in row: " + line);
    }
    const double dev = std::abs(value - optics::analytic_correlation(oracle, theta));
    if (dev > report.max_abs_dev) {
      report.max_abs_dev = dev;
      report.max_abs_dev_theta = theta;
    }
    report.max_z = std::max(report.max_z, z_score(dev, std_err));
    ++report.rows;
  }
  if (report.rows == 0) throw InputError("result table has no rows");
  return report;
}

int run_compare(const std::string& path, const std::string& oracle, std::ostream& out, std::ostream& err) {
  try {
    const Model model = parse_model(oracle);
    std::ifstream in(path);
    if (!in) throw IoError("cannot read '" + path + "'");
    const auto report = compare(in, model);
    out << json{{"input", path},
                {"oracle", to_string(model)},
                {"rows", report.rows},
                {"max_abs_dev", report.max_abs_dev},
                {"max_abs_dev_theta", report.max_abs_dev_theta},
                {"max_z", finite_or_null(report.max_z)}}
               .dump(2)
        << '\n';
    return kOk;
  } catch (const ConfigError& e) {
    report_error(err, "invalid-config", e.what());
    return kInvalidConfig;
  } catch (const InputError& e) {
    report_error(err, "schema-mismatch", e.what());
    return kInvalidConfig;
  } catch (const IoError& e) {
    report_error(err, "io-failure", e.what());
    return kIoFailure;
  }
}

}  // namespace eprsim::cli
