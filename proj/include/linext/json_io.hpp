#pragma once

#include <json.hpp>

#include "linext/poset.hpp"

namespace linext::io {

/// Poset document: {"n": <int>, "relations": [[i,j], ...]} where [i,j]
/// means i precedes j. Any generating set; the closure is applied on load.
nlohmann::json poset_to_json(const Poset& p);
Poset poset_from_json(const nlohmann::json& j);

nlohmann::json mask_to_json(Mask m);
Mask mask_from_json(const nlohmann::json& j);

}  // namespace linext::io
