#pragma once

// The ring Maps(W, R) with the right W-action (F.w)(x) = F(x w^{-1}), the
// operators _iDelta_s on R and _iA_s on Maps(W, R), and membership in
//
//   H_W = { F : x(l_s)^{-i} sum_j lambda_s^{-ij} F(x s^j) is a polynomial
//           for every x, every s in s(W) and 1 <= i <= |s| - 1 }.

#include <optional>
#include <vector>

#include "rgkm/invariant_theory.hpp"
#include "rgkm/multipoly.hpp"
#include "rgkm/reflection_group.hpp"

namespace rgkm {

class WMap {
 public:
  /// values[x] is F(x); one value per element, all with the group's nvars.
  WMap(const ReflectionGroup& group, std::vector<MultiPoly> values);

  static WMap constant(const ReflectionGroup& group, const MultiPoly& value);
  static WMap constant(const ReflectionGroup& group, const CycNum& value);
  static WMap zero(const ReflectionGroup& group);

  const ReflectionGroup& group() const { return *group_; }
  std::size_t size() const { return values_.size(); }
  const MultiPoly& operator[](ElementId x) const { return values_[x]; }
  const std::vector<MultiPoly>& values() const { return values_; }

  bool is_zero() const;
  /// Every value homogeneous of degree d or zero; empty for the zero map or
  /// a non-homogeneous map.
  std::optional<int> homogeneous_degree() const;

  /// (F.w)(x) = F(x w^{-1})
  WMap act(ElementId w) const;

  WMap operator-() const;
  WMap& operator+=(const WMap& other);
  WMap& operator-=(const WMap& other);
  WMap& operator*=(const WMap& other);
  WMap& operator*=(const CycNum& c);
  WMap& operator*=(const MultiPoly& f);

  friend WMap operator+(WMap a, const WMap& b) { return a += b; }
  friend WMap operator-(WMap a, const WMap& b) { return a -= b; }
  friend WMap operator*(WMap a, const WMap& b) { return a *= b; }
  friend WMap operator*(WMap a, const CycNum& c) { return a *= c; }
  friend WMap operator*(const CycNum& c, WMap a) { return a *= c; }
  friend WMap operator*(const MultiPoly& f, WMap a) { return a *= f; }

  friend bool operator==(const WMap& a, const WMap& b);

 private:
  void check_group(const WMap& other) const;

  const ReflectionGroup* group_;
  std::vector<MultiPoly> values_;
};

/// L_s(x) = scale * x(l_s).
WMap coroot_map(const ReflectionGroup& group, ReflectionId r, const CycNum& scale = CycNum(1L));

/// sum_j lambda_s^{-ij} s^j(f), before division.
MultiPoly delta_numerator(const ReflectionGroup& group, ReflectionId r, int i,
                          const MultiPoly& f);

/// l_s^{-i} sum_j lambda_s^{-ij} s^j(f). A failed division for
/// 1 <= i <= |s| - 1 raises InvariantViolation; for larger i it is returned.
DivisionResult op_delta(const ReflectionGroup& group, ReflectionId r, int i, const MultiPoly& f);

/// sum_j lambda_s^{-ij} F(x s^j), before division.
MultiPoly operator_numerator(const WMap& f, ReflectionId r, int i, ElementId x);

struct MembershipFailure {
  ElementId rep = 0;
  ReflectionId reflection = 0;
  int exponent = 0;
  MultiPoly witness;
};

struct MembershipCertificate {
  bool ok = true;
  std::vector<MembershipFailure> failures;
};

struct OperatorResult {
  std::optional<WMap> value;
  std::vector<MembershipFailure> failures;

  bool ok() const { return value.has_value(); }
};

/// _iA_s(F)(x) = (scale x(l_s))^{-i} sum_j lambda_s^{-ij} F(x s^j), computed
/// on one representative per right <s>-coset and copied along the coset.
/// Negative i multiplies instead of dividing.
OperatorResult op_A(const WMap& f, ReflectionId r, int i, const CycNum& scale = CycNum(1L));

/// op_A that must succeed; throws InvariantViolation otherwise.
WMap op_A_exact(const WMap& f, ReflectionId r, int i);

/// All conditions for all s in s(W), 1 <= i <= |s| - 1. With stop_early the
/// certificate holds only the first failure.
MembershipCertificate hw_member(const WMap& f, bool stop_early = false);

/// Basis of the degree-d part of H_W, as a nullspace of the divisibility
/// conditions on the coefficients of F(x).
struct MapBasis {
  int degree = 0;
  std::vector<WMap> vectors;

  std::size_t dimension() const { return vectors.size(); }
};
MapBasis hw_graded_basis(const ReflectionGroup& group, int degree);
std::size_t hw_graded_dim(const ReflectionGroup& group, int degree);

/// [_0A_s(F), ..., _{|s|-1}A_s(F)] for a member F. Throws
/// PreconditionViolation when F is not a member.
std::vector<WMap> decompose_along_s(const WMap& f, ReflectionId r);

/// (1/|s|) sum_j components[j] L_s^j
WMap recompose_along_s(const std::vector<WMap>& components, ReflectionId r);

/// Coordinates of a homogeneous map in (element, monomial) order.
Vector map_coordinates(const WMap& f, const DegreeSpace& space);
WMap map_from_coordinates(const ReflectionGroup& group, const DegreeSpace& space,
                          const Vector& v);

}  // namespace rgkm
