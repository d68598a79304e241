#pragma once

#include <json.hpp>

namespace pfister {
// Insertion-ordered JSON keeps reports byte-deterministic and readable.
using Json = nlohmann::ordered_json;
}  // namespace pfister
