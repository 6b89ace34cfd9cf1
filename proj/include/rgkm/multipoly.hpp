#pragma once

// Sparse multivariate polynomials over Q(zeta_m).

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rgkm/cyclotomic.hpp"
#include "rgkm/linalg.hpp"

namespace rgkm {

/// Exponent tuple.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }

  int degree() const;
  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lex order, largest first: higher total degree wins, then the
/// larger exponent of the earliest variable.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of degree d in n variables in GrlexDescending order.
std::vector<Monomial> graded_monomials(std::size_t nvars, int degree);

class MultiPoly {
 public:
  using Terms = std::map<Monomial, CycNum, GrlexDescending>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const CycNum& c);
  static MultiPoly variable(std::size_t nvars, std::size_t k);
  static MultiPoly term(const Monomial& m, const CycNum& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Total degree; empty for the zero polynomial.
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  MultiPoly homogeneous_component(int d) const;
  CycNum coefficient(const Monomial& m) const;

  /// Adds c * m in place.
  void add_term(const Monomial& m, const CycNum& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const CycNum& c);
  MultiPoly operator*(const MultiPoly& other) const;
  MultiPoly& operator*=(const MultiPoly& other) { return *this = *this * other; }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const CycNum& c) { return a *= c; }
  friend MultiPoly operator*(const CycNum& c, MultiPoly a) { return a *= c; }

  MultiPoly pow(int e) const;

  /// Replaces variable k by images[k] (all images share nvars).
  MultiPoly substitute(std::span<const MultiPoly> images) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void check_nvars(const MultiPoly& other) const;

  std::size_t nvars_;
  Terms terms_;
};

/// Nonzero linear form with first nonzero coefficient equal to 1.
class LinearForm {
 public:
  /// Normalizes `coeffs`; returns {scale, form} with coeffs == scale * form.
  /// Empty when every coefficient is zero.
  static std::optional<std::pair<CycNum, LinearForm>> normalize(std::vector<CycNum> coeffs);
  /// Same, from a homogeneous degree-1 polynomial.
  static std::optional<std::pair<CycNum, LinearForm>> from_poly(const MultiPoly& p);

  std::size_t nvars() const { return coeffs_.size(); }
  const std::vector<CycNum>& coeffs() const { return coeffs_; }
  /// Index of the leading (unit) coefficient.
  std::size_t pivot() const { return pivot_; }
  MultiPoly to_poly() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b);

 private:
  LinearForm(std::vector<CycNum> coeffs, std::size_t pivot)
      : coeffs_(std::move(coeffs)), pivot_(pivot) {}

  std::vector<CycNum> coeffs_;
  std::size_t pivot_ = 0;
};

/// w . f for the left action (w.f)(v) = f(w^{-1} v). Throws SingularMatrix.
MultiPoly apply_linear(const Matrix& w, const MultiPoly& f);

/// Images of the coordinate functions under w . (-); equivalent to
/// apply_linear(w, x_k) for every k, given w^{-1}.
std::vector<MultiPoly> linear_substitution_images(const Matrix& w_inverse);

/// Outcome of an exact division; either a quotient or the low-order part
/// that prevents it.
class DivisionResult {
 public:
  static DivisionResult success(MultiPoly q) {
    const std::size_t n = q.nvars();
    return DivisionResult(std::move(q), MultiPoly(n));
  }
  static DivisionResult failure(MultiPoly witness) {
    return DivisionResult(std::nullopt, std::move(witness));
  }

  bool ok() const { return quotient_.has_value(); }
  explicit operator bool() const { return ok(); }
  /// Throws PreconditionViolation when !ok().
  const MultiPoly& quotient() const;
  const MultiPoly& witness() const { return witness_; }

 private:
  DivisionResult(std::optional<MultiPoly> q, MultiPoly w)
      : quotient_(std::move(q)), witness_(std::move(w)) {}

  std::optional<MultiPoly> quotient_;
  MultiPoly witness_;
};

/// Exact division by powers of one fixed linear form. The form is moved to
/// the first coordinate by an invertible substitution; f is divisible by
/// form^i iff every transformed monomial has first exponent >= i.
class LinearDivider {
 public:
  explicit LinearDivider(LinearForm form);

  const LinearForm& form() const { return form_; }

  /// f in adapted coordinates (y_0 = form).
  MultiPoly to_adapted(const MultiPoly& f) const;
  /// Inverse of to_adapted.
  MultiPoly from_adapted(const MultiPoly& g) const;

  /// For i <= 0 returns f * form^{-i}.
  DivisionResult divide(const MultiPoly& f, int i) const;

 private:
  LinearForm form_;
  bool coordinate_ = false;  // the form is a single variable
  std::vector<MultiPoly> forward_;
  std::vector<MultiPoly> backward_;
};

DivisionResult divide_exact_by_linear_power(const MultiPoly& f, const LinearForm& form, int i);

}  // namespace rgkm
