#include "eprsim/model.hpp"

#include "eprsim/errors.hpp"

namespace eprsim {

Model parse_model(std::string_view id) {
  if (id == "locked-mode") return Model::kLockedMode;
  if (id == "furry") return Model::kFurry;
  if (id == "barut") return Model::kBarut;
  if (id == "qm-oracle") return Model::kQmOracle;
  if (id == "accidentals") return Model::kAccidentals;
  throw ConfigError("unknown model id '" + std::string(id) + "'");
}

std::string to_string(Model model) {
  switch (model) {
    case Model::kLockedMode: return "locked-mode";
    case Model::kFurry: return "furry";
    case Model::kBarut: return "barut";
    case Model::kQmOracle: return "qm-oracle";
    case Model::kAccidentals: return "accidentals";
  }
  return "unknown";
}

}  // namespace eprsim
