#pragma once

#include <string>
#include <string_view>

namespace eprsim {

/// Source/correlation models. `kAccidentals` is the uncorrelated reference source
/// made of two independent Poisson streams.
enum class Model { kLockedMode, kFurry, kBarut, kQmOracle, kAccidentals };

/// Parses "locked-mode", "furry", "barut", "qm-oracle" or "accidentals".
/// Throws ConfigError on anything else.
Model parse_model(std::string_view id);

std::string to_string(Model model);

}  // namespace eprsim
