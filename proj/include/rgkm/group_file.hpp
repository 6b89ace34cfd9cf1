#pragma once

// JSON group definition files:
//
//   { "name": "g312", "dimension": 2, "conductor": 3,
//     "variables": ["x1", "x2"],
//     "generators": [ ["z", "0", "0", "1"], ["0", "1", "1", "0"] ] }
//
// Each generator is a row-major list of dimension^2 scalars in text form
// (integers are accepted as JSON numbers too).

#include <filesystem>
#include <string_view>

#include "rgkm/reflection_group.hpp"

namespace rgkm {

/// Throws ParseError (JSON syntax), SchemaError, SingularGenerator,
/// CapExceeded.
ReflectionGroup parse_group_json(std::string_view text,
                                 std::size_t cap = ReflectionGroup::kDefaultCap);
ReflectionGroup parse_group_file(const std::filesystem::path& path,
                                 std::size_t cap = ReflectionGroup::kDefaultCap);

/// Smallest conductor the group needs: lcm of the minimal conductors of the
/// generator entries and of the orders of the eigenvalues lambda_s.
int required_conductor(const ReflectionGroup& group);

/// Q(zeta_a) == Q(zeta_b).
bool same_cyclotomic_field(int a, int b);

std::string read_text_file(const std::filesystem::path& path);

/// 1-based line and column of a byte offset.
std::pair<int, int> line_column(std::string_view text, std::size_t offset);

}  // namespace rgkm
