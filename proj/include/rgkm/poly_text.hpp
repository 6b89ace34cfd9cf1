#pragma once

// Text forms of scalars and polynomials.
//
//   scalar:     1/2*z^2 - 1            (z = zeta_m of the enclosing conductor)
//   polynomial: z*x1^2*x2 - 1/3*x2^3
//
// Coefficients with more than one z-term are parenthesized. Printing is
// canonical (graded-lex descending) and parse(print(p)) == p.

#include <string>
#include <string_view>
#include <vector>

#include "rgkm/cyclotomic.hpp"
#include "rgkm/multipoly.hpp"

namespace rgkm {

/// Default variable names x1..xn.
std::vector<std::string> default_variable_names(std::size_t nvars);

/// Parses an expression built from rationals, `z`, the given variables,
/// + - * ^ and parentheses; `/` is allowed only by a nonzero constant.
/// Throws ParseError.
MultiPoly parse_poly(std::string_view text, int conductor,
                     const std::vector<std::string>& variables);

/// Parses a scalar (no variables). Throws ParseError.
CycNum parse_cycnum(std::string_view text, int conductor);

std::string format_poly(const MultiPoly& p, const std::vector<std::string>& variables);
std::string format_poly(const MultiPoly& p);

}  // namespace rgkm
