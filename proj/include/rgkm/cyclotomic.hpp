#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_m).
//
// A value is stored as the canonical residue of a rational polynomial in
// zeta modulo the m-th cyclotomic polynomial Phi_m, so equal values always
// have identical coefficient vectors. Values whose only nonzero coefficient
// is the constant term are rational and combine with values of any
// conductor.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace rgkm {

using Rational = mpq_class;
using Integer = mpz_class;

/// Euler's totient.
int euler_phi(int m);

/// Integer coefficients of Phi_m, lowest degree first; the result is monic of
/// degree euler_phi(m).
const std::vector<long>& cyclotomic_polynomial(int m);

class CycNum {
 public:
  /// The rational zero.
  CycNum();
  CycNum(long value);  // NOLINT(google-explicit-constructor)
  CycNum(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// Reduces sum_k coeffs[k] * zeta_m^k modulo Phi_m. Rejects m < 1 and
  /// coefficient vectors longer than m.
  static CycNum make(int m, std::span<const Rational> coeffs);
  static CycNum make(int m, std::initializer_list<Rational> coeffs);

  /// zeta_m^k for any integer k.
  static CycNum root_of_unity(int m, long k);

  int conductor() const { return conductor_; }
  /// Canonical coefficients (length euler_phi(conductor())).
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Constant coefficient; equals the value when is_rational().
  const Rational& rational_part() const { return coeffs_[0]; }

  /// Same value expressed over conductor `m`; requires conductor() | m
  /// unless the value is rational.
  CycNum embed(int m) const;

  /// Smallest conductor d | conductor() such that the value lies in
  /// Q(zeta_d), together with the value re-expressed there.
  CycNum with_minimal_conductor() const;

  CycNum inverse() const;
  CycNum pow(long e) const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& other);
  CycNum& operator-=(const CycNum& other);
  CycNum& operator*=(const CycNum& other);
  CycNum& operator/=(const CycNum& other);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

  friend bool operator==(const CycNum& a, const CycNum& b);
  /// Total order used for map keys; rational values sort first by value.
  friend std::strong_ordering operator<=>(const CycNum& a, const CycNum& b);

  /// Text form, a polynomial in `z` with rational coefficients in
  /// decreasing powers, e.g. "1/2*z^2 - 1".
  std::string to_string() const;
  /// True when to_string() is a single signed term (safe as a factor).
  bool is_single_term() const;

  std::size_t hash() const;

 private:
  CycNum(int m, std::vector<Rational> coeffs);

  // Brings *this and other to a common conductor or throws.
  void unify(CycNum& other_copy);
  int common_conductor(const CycNum& other) const;

  int conductor_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& value);

}  // namespace rgkm
