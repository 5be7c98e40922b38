#pragma once

#include <json.hpp>

#include "mzv/regularization.hpp"

namespace mzv {

/// {"(index)": "p/q", ...}
nlohmann::json to_json(const MzvCombo& c);
/// {"T^j": {"(index)": "p/q"}, ...}
nlohmann::json to_json(const RegPoly& p);
MzvCombo combo_from_json(const nlohmann::json& j);
RegPoly regpoly_from_json(const nlohmann::json& j);

}  // namespace mzv
