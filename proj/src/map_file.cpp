#include "rgkm/map_file.hpp"

#include "rgkm/errors.hpp"
#include "rgkm/group_file.hpp"
#include "rgkm/poly_text.hpp"

namespace rgkm {

using nlohmann::json;

WMap parse_map_json(std::string_view text, const ReflectionGroup& group) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("invalid JSON: ") + e.what(), line, column);
  }
  if (!doc.is_object()) throw SchemaError("map file: top level must be an object");
  if (!doc.contains("group") || !doc["group"].is_string()) {
    throw SchemaError("map file: missing string key 'group'");
  }
  if (doc["group"].get<std::string>() != group.name()) {
    throw SchemaError("map file: written for group '" + doc["group"].get<std::string>() +
                      "', not '" + group.name() + "'");
  }
  if (!doc.contains("values") || !doc["values"].is_object()) {
    throw SchemaError("map file: 'values' must be an object");
  }
  std::vector<MultiPoly> values(group.size(), MultiPoly(group.nvars()));
  for (const auto& [key, value] : doc["values"].items()) {
    std::size_t used = 0;
    unsigned long index = 0;
    try {
      index = std::stoul(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || index >= group.size()) {
      throw SchemaError("map file: '" + key + "' is not an element index below " +
                        std::to_string(group.size()));
    }
    if (!value.is_string()) throw SchemaError("map file: value for " + key + " must be a string");
    try {
      values[index] = parse_poly(value.get<std::string>(), group.conductor(), group.variables());
    } catch (const ParseError& e) {
      throw SchemaError("map file: value for " + key + ": " + e.what());
    }
  }
  return WMap(group, std::move(values));
}

WMap parse_map_file(const std::filesystem::path& path, const ReflectionGroup& group) {
  return parse_map_json(read_text_file(path), group);
}

json map_to_json(const WMap& f) {
  json values = json::object();
  for (ElementId x = 0; x < f.size(); ++x) {
    values[std::to_string(x)] = format_poly(f[x], f.group().variables());
  }
  return json{{"group", f.group().name()}, {"values", values}};
}

}  // namespace rgkm
