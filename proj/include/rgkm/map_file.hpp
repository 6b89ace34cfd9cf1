#pragma once

// JSON files holding a map F: W -> R:
//
//   { "group": "z2", "values": { "0": "x1", "1": "0" } }
//
// Keys are element indices in enumeration order; missing elements map to 0.

#include <filesystem>
#include <string_view>

#include "json.hpp"
#include "rgkm/equivariant.hpp"

namespace rgkm {

/// Throws ParseError (JSON syntax) and SchemaError.
WMap parse_map_json(std::string_view text, const ReflectionGroup& group);
WMap parse_map_file(const std::filesystem::path& path, const ReflectionGroup& group);

nlohmann::json map_to_json(const WMap& f);

}  // namespace rgkm
