#include "rgkm/group_file.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "rgkm/errors.hpp"
#include "rgkm/poly_text.hpp"

namespace rgkm {

using nlohmann::json;

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::pair<int, int> line_column(std::string_view text, std::size_t offset) {
  int line = 1;
  int column = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

bool same_cyclotomic_field(int a, int b) {
  if (a == b) return true;
  if (a > b) std::swap(a, b);
  return b == 2 * a && a % 2 == 1;
}

int required_conductor(const ReflectionGroup& group) {
  int need = 1;
  for (ElementId g : group.generator_ids()) {
    for (const auto& e : group.matrix(g).entries()) {
      need = std::lcm(need, e.with_minimal_conductor().conductor());
    }
  }
  for (const auto& s : group.reflections()) need = std::lcm(need, s.order);
  return need;
}

namespace {

[[noreturn]] void schema(const std::string& what) { throw SchemaError("group file: " + what); }

CycNum entry_value(const json& v, int conductor, std::size_t gen, std::size_t idx) {
  const std::string where =
      "generator " + std::to_string(gen) + ", entry " + std::to_string(idx);
  if (v.is_number_integer()) return CycNum(v.get<long>()).embed(conductor);
  if (!v.is_string()) schema(where + " must be a string or an integer");
  try {
    return parse_cycnum(v.get<std::string>(), conductor);
  } catch (const ParseError& e) {
    schema(where + ": " + e.what());
  }
}

}  // namespace

ReflectionGroup parse_group_json(std::string_view text, std::size_t cap) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("invalid JSON: ") + e.what(), line, column);
  }
  if (!doc.is_object()) schema("top level must be an object");
  for (const char* key : {"name", "dimension", "conductor", "generators"}) {
    if (!doc.contains(key)) schema(std::string("missing key '") + key + "'");
  }
  if (!doc["name"].is_string()) schema("'name' must be a string");
  if (!doc["dimension"].is_number_integer() || doc["dimension"].get<long>() < 1) {
    schema("'dimension' must be a positive integer");
  }
  if (!doc["conductor"].is_number_integer() || doc["conductor"].get<long>() < 1 ||
      doc["conductor"].get<long>() > 100000) {
    schema("'conductor' must be a positive integer");
  }
  const auto n = doc["dimension"].get<std::size_t>();
  const int m = doc["conductor"].get<int>();

  std::vector<std::string> variables;
  if (doc.contains("variables")) {
    if (!doc["variables"].is_array()) schema("'variables' must be an array");
    for (const auto& v : doc["variables"]) {
      if (!v.is_string()) schema("variable names must be strings");
      variables.push_back(v.get<std::string>());
    }
    if (variables.size() != n) schema("'variables' must list 'dimension' names");
  } else {
    variables = default_variable_names(n);
  }

  const json& gens = doc["generators"];
  if (!gens.is_array() || gens.empty()) schema("'generators' must be a nonempty array");
  std::vector<Matrix> generators;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const json& rows = gens[g];
    if (!rows.is_array() || rows.size() != n * n) {
      schema("generator " + std::to_string(g) + " must be a row-major list of " +
             std::to_string(n * n) + " entries");
    }
    std::vector<CycNum> entries;
    for (std::size_t k = 0; k < rows.size(); ++k) entries.push_back(entry_value(rows[k], m, g, k));
    generators.emplace_back(n, std::move(entries));
  }

  ReflectionGroup group =
      ReflectionGroup::close(generators, m, cap, doc["name"].get<std::string>(), variables);
  const int need = required_conductor(group);
  if (!same_cyclotomic_field(need, m)) {
    schema("conductor inconsistency: declared " + std::to_string(m) + ", group needs " +
           std::to_string(need));
  }
  return group;
}

ReflectionGroup parse_group_file(const std::filesystem::path& path, std::size_t cap) {
  return parse_group_json(read_text_file(path), cap);
}

}  // namespace rgkm
