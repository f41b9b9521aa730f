#pragma once

#include <string>

#include <json.hpp>

namespace relgas::cli {

using Json = nlohmann::ordered_json;

/// Serializes with every double at 17 significant digits and keys in
/// insertion order. Non-finite doubles become null.
std::string dump17(const Json& value, int indent = 2);

} // namespace relgas::cli
