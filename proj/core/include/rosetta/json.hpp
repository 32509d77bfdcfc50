#pragma once

#include <nlohmann/json.hpp>

namespace rosetta {

// All wire payloads keep insertion order so serialized output is
// deterministic and diffs read like the original provider JSON.
using Json = nlohmann::ordered_json;

} // namespace rosetta
