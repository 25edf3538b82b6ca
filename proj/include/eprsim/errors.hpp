#pragma once

#include <stdexcept>
#include <string>

namespace eprsim {

/// Invalid experiment or component configuration (bad rate, unknown model id, ...).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input data (length mismatch, unsorted stream, non-finite angle).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Estimator asked to divide by a vanishing moment or an empty tally.
class DegenerateInputError : public std::runtime_error {
 public:
  explicit DegenerateInputError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem failure while reading or writing experiment artifacts.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eprsim
