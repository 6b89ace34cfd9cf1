#include "rgkm/poly_text.hpp"

#include <cctype>
#include <sstream>

#include "rgkm/errors.hpp"

namespace rgkm {

std::vector<std::string> default_variable_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < nvars; ++k) names.push_back("x" + std::to_string(k + 1));
  return names;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int conductor, const std::vector<std::string>& variables)
      : text_(text), conductor_(conductor), variables_(variables) {}

  MultiPoly parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    MultiPoly value = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    int line = 1;
    int column = 1;
    for (std::size_t k = 0; k < pos_ && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what, line, column);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc(variables_.size());
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    MultiPoly first = product();
    acc += negate ? -first : first;
    for (;;) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly product() {
    MultiPoly acc = power();
    for (;;) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        MultiPoly divisor = power();
        if (!divisor.is_constant() || divisor.is_zero()) {
          pos_ = at;
          fail("division is only allowed by a nonzero constant");
        }
        acc *= divisor.terms().begin()->second.inverse();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly power() {
    if (accept('-')) return -power();
    MultiPoly base = primary();
    if (accept('^')) {
      skip_space();
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected a nonnegative integer exponent");
      if (digits.size() > 6) fail("exponent too large");
      base = base.pow(std::stoi(digits));
    }
    return base;
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  MultiPoly primary() {
    skip_space();
    const std::size_t n = variables_.size();
    if (at_end()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string digits = read_digits();
      return MultiPoly::constant(n, CycNum(Rational(Integer(digits))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                           text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t k = 0; k < n; ++k) {
        if (variables_[k] == name) return MultiPoly::variable(n, k);
      }
      if (name == "z") return MultiPoly::constant(n, CycNum::root_of_unity(conductor_, 1));
      pos_ = start;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int conductor_;
  const std::vector<std::string>& variables_;
};

std::string monomial_string(const Monomial& m, const std::vector<std::string>& variables) {
  std::string out;
  for (std::size_t k = 0; k < m.exps.size(); ++k) {
    if (m.exps[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += variables[k];
    if (m.exps[k] > 1) out += '^' + std::to_string(m.exps[k]);
  }
  return out;
}

}  // namespace

MultiPoly parse_poly(std::string_view text, int conductor,
                     const std::vector<std::string>& variables) {
  if (conductor < 1) throw Error("conductor must be positive");
  return Parser(text, conductor, variables).parse();
}

CycNum parse_cycnum(std::string_view text, int conductor) {
  static const std::vector<std::string> none;
  const MultiPoly p = parse_poly(text, conductor, none);
  if (p.is_zero()) return CycNum().embed(conductor);
  return p.terms().begin()->second.embed(conductor);
}

std::string format_poly(const MultiPoly& p, const std::vector<std::string>& variables) {
  if (variables.size() != p.nvars()) throw DimensionMismatch("wrong number of variable names");
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const std::string mono = monomial_string(m, variables);
    bool negative = false;
    std::string coeff;
    if (c.is_single_term()) {
      const Rational* lead = nullptr;
      for (const auto& q : c.coeffs()) {
        if (q != 0) lead = &q;
      }
      negative = *lead < 0;
      coeff = (negative ? -c : c).to_string();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      out << coeff;
    } else if (coeff == "1") {
      out << mono;
    } else {
      out << coeff << '*' << mono;
    }
  }
  return out.str();
}

std::string format_poly(const MultiPoly& p) {
  return format_poly(p, default_variable_names(p.nvars()));
}

}  // namespace rgkm
