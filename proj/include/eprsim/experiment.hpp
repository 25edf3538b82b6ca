#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eprsim/detection.hpp"
#include "eprsim/model.hpp"

namespace eprsim::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit statuses of `eprsim run` and `eprsim compare`.
enum ExitCode : int { kOk = 0, kFailure = 1, kInvalidConfig = 2, kIoFailure = 3 };

/// One named, reproducible experiment. Loaded from a JSON document whose keys
/// match the field names; command-line flags override file values.
struct ExperimentConfig {
  std::string experiment;  // correlation-sweep | chsh | window-sweep | sica-fuzz | dichotomic-demo | barut-quadrature
  Model model = Model::kLockedMode;
  std::uint64_t seed = 1;
  std::size_t n_events = 100000;
  std::vector<double> angles;    // explicit radians; empty -> preset
  std::string angles_preset;     // chsh-optimal | sweep-16 | sweep-32 | sweep-181
  double window = 1.0e-8;        // coincidence window, seconds
  std::vector<double> windows;   // window-sweep grid; empty -> window * {1, 2, 4, 8, 16}
  double mean_rate = 1.0e3;      // emissions per second
  detection::DetectorConfig detector;
  std::string estimator;         // empty -> model default
  std::size_t n_nodes = 128;     // barut-quadrature
  std::size_t max_length = 64;   // sica-fuzz sequence lengths 1..max_length
  std::vector<double> switch_points;  // dichotomic-demo; empty -> random
  std::size_t n_switches = 8;         // dichotomic-demo random function
  std::string output;            // CSV path
  std::string summary;           // JSON path; empty -> output with .json extension
  std::string events_output;     // optional event-stream CSV (photon experiments)

  /// Throws ConfigError on an unknown experiment, bad counts or a missing preset.
  void validate() const;
  [[nodiscard]] nlohmann::json to_json() const;
};

/// Parses a config document. Unknown keys are rejected with ConfigError.
ExperimentConfig parse_config(const nlohmann::json& doc);
/// Reads and parses a config file; IoError if unreadable, ConfigError if malformed.
ExperimentConfig load_config(const std::string& path);

/// Named angle sets: chsh-optimal = (a, a', b, b') = (0, pi/4, pi/8, 3 pi/8);
/// sweep-N = N uniform angles k pi / N on [0, pi). Throws ConfigError if unknown.
std::vector<double> angle_preset(const std::string& name);

struct ExperimentResult {
  std::string csv;
  nlohmann::json scalars;  // experiment-defined summary values
};

/// Runs the experiment in memory. Exceptions propagate.
ExperimentResult execute(const ExperimentConfig& config);

/// Runs, writes the CSV table and the JSON summary, and maps failures to exit
/// codes with a one-line JSON error record on `err`.
int run(const ExperimentConfig& config, std::ostream& err);

struct CompareReport {
  std::size_t rows = 0;
  double max_abs_dev = 0.0;
  double max_abs_dev_theta = 0.0;
  double max_z = 0.0;  // infinite when a nonzero deviation has zero std_err
};

/// Joins a theta,model,estimator,value,std_err,n table against
/// analytic_correlation(oracle, theta). Throws InputError on schema mismatch.
CompareReport compare(std::istream& csv, Model oracle);

/// File-level compare: prints a JSON report on `out`, returns an exit code.
int run_compare(const std::string& path, const std::string& oracle, std::ostream& out, std::ostream& err);

}  // namespace eprsim::cli
