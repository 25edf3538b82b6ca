// eprsim: configuration-driven EPR-B correlation experiments.
//
//   eprsim run --config exp.json [--model furry --seed 7 --n-events 100000 --out r.csv ...]
//   eprsim compare --input r.csv --oracle locked-mode

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "eprsim/errors.hpp"
#include "eprsim/experiment.hpp"

namespace {

struct RunOverrides {
  std::string config_path;
  std::optional<std::string> experiment, model, angles, estimator, out, summary, events_out;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> n_events, n_nodes, max_length, n_switches;
  std::optional<double> window, mean_rate, efficiency, jitter_max, dark_rate;
};

eprsim::cli::ExperimentConfig build_config(const RunOverrides& o) {
  using namespace eprsim::cli;
  ExperimentConfig c = o.config_path.empty() ? ExperimentConfig{} : load_config(o.config_path);
  if (const char* env = std::getenv("EPRSIM_SEED")) {
    try {
      c.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw eprsim::ConfigError("EPRSIM_SEED is not an unsigned integer");
    }
  }
  if (o.experiment) c.experiment = *o.experiment;
  if (o.model) c.model = eprsim::parse_model(*o.model);
  if (o.angles) {
    c.angles.clear();
    c.angles_preset = *o.angles;
  }
  if (o.estimator) c.estimator = *o.estimator;
  if (o.out) c.output = *o.out;
  if (o.summary) c.summary = *o.summary;
  if (o.events_out) c.events_output = *o.events_out;
  if (o.seed) c.seed = *o.seed;
  if (o.n_events) c.n_events = *o.n_events;
  if (o.n_nodes) c.n_nodes = *o.n_nodes;
  if (o.max_length) c.max_length = *o.max_length;
  if (o.n_switches) c.n_switches = *o.n_switches;
  if (o.window) c.window = *o.window;
  if (o.mean_rate) c.mean_rate = *o.mean_rate;
  if (o.efficiency) c.detector.efficiency = *o.efficiency;
  if (o.jitter_max) c.detector.jitter_max = *o.jitter_max;
  if (o.dark_rate) c.detector.dark_rate = *o.dark_rate;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local-realistic EPR-B correlation experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", eprsim::cli::kVersion);

  RunOverrides o;
  auto* run = app.add_subcommand("run", "Run an experiment and write CSV + JSON summary");
  run->add_option("--config", o.config_path, "JSON experiment config");
  run->add_option("--experiment", o.experiment, "Experiment name");
  run->add_option("--model", o.model, "locked-mode | furry | barut | qm-oracle | accidentals");
  run->add_option("--seed", o.seed, "Master seed");
  run->add_option("--n-events", o.n_events, "Emissions (or fuzz trials) per run");
  run->add_option("--angles", o.angles, "Angle preset (chsh-optimal, sweep-16, ...)");
  run->add_option("--window", o.window, "Coincidence window in seconds");
  run->add_option("--mean-rate", o.mean_rate, "Mean emission rate in 1/s");
  run->add_option("--efficiency", o.efficiency, "Detector efficiency in (0, 1]");
  run->add_option("--jitter", o.jitter_max, "Maximum detector latency jitter in seconds");
  run->add_option("--dark-rate", o.dark_rate, "Dark count rate per station in 1/s");
  run->add_option("--estimator", o.estimator, "four-channel | normalized | coherence | coherence-single | analytic");
  run->add_option("--n-nodes", o.n_nodes, "Quadrature nodes (barut-quadrature)");
  run->add_option("--max-length", o.max_length, "Longest fuzzed sequence (sica-fuzz)");
  run->add_option("--n-switches", o.n_switches, "Switch count of the random step function (dichotomic-demo)");
  run->add_option("--out", o.out, "Result CSV path");
  run->add_option("--summary", o.summary, "Summary JSON path");
  run->add_option("--events-out", o.events_out, "Event stream CSV path");

  std::string input, oracle;
  auto* compare = app.add_subcommand("compare", "Compare a result table with an analytic correlation");
  compare->add_option("--input", input, "Result CSV")->required();
  compare->add_option("--oracle", oracle, "Model whose closed form is the reference")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << nlohmann::json{{"error", "invalid-config"}, {"message", e.what()}}.dump() << '\n';
    return eprsim::cli::kInvalidConfig;
  }

  if (*run) {
    try {
      return eprsim::cli::run(build_config(o), std::cerr);
    } catch (const eprsim::ConfigError& e) {
      std::cerr << nlohmann::json{{"error", "invalid-config"}, {"message", e.what()}}.dump() << '\n';
      return eprsim::cli::kInvalidConfig;
    } catch (const eprsim::IoError& e) {
      std::cerr << nlohmann::json{{"error", "io-failure"}, {"message", e.what()}}.dump() << '\n';
      return eprsim::cli::kIoFailure;
    }
  }
  return eprsim::cli::run_compare(input, oracle, std::cout, std::cerr);
}
