#pragma once

// Finite matrix groups W in GL_n(Q(zeta_m)), enumerated from generators,
// together with their pseudo-reflections s(W).
//
// Conventions: W acts on polynomials on the left by (w.f)(v) = f(w^{-1} v).
// For a pseudo-reflection s the co-root l_s is the normalized linear form
// vanishing on ker(s - 1), and lambda_s is defined by s.l_s = lambda_s l_s.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rgkm/cyclotomic.hpp"
#include "rgkm/linalg.hpp"
#include "rgkm/multipoly.hpp"

namespace rgkm {

using ElementId = std::size_t;
using ReflectionId = std::size_t;

struct PseudoReflection {
  ElementId element = 0;
  int order = 0;
  LinearForm coroot;
  CycNum eigenvalue;
  std::size_t hyperplane_id = 0;
};

class ReflectionGroup {
 public:
  static constexpr std::size_t kDefaultCap = 10000;

  /// BFS closure from the identity, right-multiplying by generators in
  /// order. Throws SingularGenerator, DimensionMismatch, CapExceeded.
  static ReflectionGroup close(const std::vector<Matrix>& generators, int conductor,
                               std::size_t cap = kDefaultCap, std::string name = {},
                               std::vector<std::string> variables = {});

  const std::string& name() const { return name_; }
  /// Variable names used for text I/O (x1..xn unless given).
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return nvars_; }
  int conductor() const { return conductor_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t generator_count() const { return generator_ids_.size(); }
  const std::vector<ElementId>& generator_ids() const { return generator_ids_; }

  const Matrix& matrix(ElementId x) const { return elements_[x]; }
  ElementId identity() const { return 0; }
  ElementId multiply(ElementId a, ElementId b) const { return mult_[a * size() + b]; }
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  ElementId power(ElementId a, long k) const;
  int order(ElementId a) const { return orders_[a]; }
  /// Element with the given matrix, if present.
  std::optional<ElementId> find(const Matrix& m) const;

  const std::vector<PseudoReflection>& reflections() const { return reflections_; }
  const PseudoReflection& reflection(ReflectionId r) const { return reflections_[r]; }
  std::optional<ReflectionId> reflection_of(ElementId x) const { return reflection_index_[x]; }
  std::size_t hyperplane_count() const { return hyperplane_count_; }
  /// Whether s(W) generates W.
  bool generated_by_reflections() const { return generated_by_reflections_; }

  /// x . f
  MultiPoly act(ElementId x, const MultiPoly& f) const;

  /// x(l_s) == coroot_scale(x, r) * coroot_divider(x, r).form().
  const CycNum& coroot_scale(ElementId x, ReflectionId r) const;
  const LinearDivider& coroot_divider(ElementId x, ReflectionId r) const;
  /// x(l_s) as a polynomial.
  MultiPoly coroot_image(ElementId x, ReflectionId r) const;

  /// Right coset [x, x s, ..., x s^{|s|-1}].
  std::vector<ElementId> coset(ElementId x, ReflectionId r) const;
  /// Smallest-index element of each right <s>-coset, ascending.
  std::vector<ElementId> coset_representatives(ReflectionId r) const;

  /// Record for w s w^{-1} and the scalar c with w(l_s) = c * l_{wsw^{-1}}.
  std::pair<ReflectionId, CycNum> conjugate_reflection(ElementId w, ReflectionId r) const;

 private:
  ReflectionGroup() = default;

  void scan_reflections();
  void warm_coroot_cache();

  std::string name_;
  std::vector<std::string> variables_;
  std::size_t nvars_ = 0;
  int conductor_ = 1;
  std::vector<Matrix> elements_;
  std::vector<std::uint32_t> mult_;
  std::vector<ElementId> inverse_;
  std::vector<int> orders_;
  std::vector<ElementId> generator_ids_;
  std::vector<std::vector<MultiPoly>> action_images_;

  std::vector<PseudoReflection> reflections_;
  std::vector<std::optional<ReflectionId>> reflection_index_;
  std::size_t hyperplane_count_ = 0;
  bool generated_by_reflections_ = false;

  // Indexed by x * reflections_.size() + r.
  std::vector<CycNum> coroot_scales_;
  std::vector<std::size_t> coroot_divider_ids_;
  std::vector<LinearDivider> dividers_;
};

/// The pseudo-reflections of an enumerated group, and whether they generate
/// it. Equivalent to the inventory computed during close().
struct ReflectionScan {
  std::vector<PseudoReflection> reflections;
  bool generates = false;
};
ReflectionScan scan_pseudo_reflections(const ReflectionGroup& group);

/// Molien series (1/|W|) sum_w 1/det(1 - t w) written as prod_i 1/(1 - t^{d_i}).
struct MolienSeries {
  std::vector<int> degrees;            // sorted
  std::vector<Rational> coefficients;  // power series prefix used for the check
};

/// Power series coefficients of the Molien sum for t^0..t^upto.
std::vector<Rational> molien_coefficients(const ReflectionGroup& group, int upto);

/// Throws NotPolynomialInvariantRing when the series is not of product form.
MolienSeries molien_series(const ReflectionGroup& group);

/// Coefficients of prod_i (1 + t + ... + t^{d_i - 1}).
std::vector<long> coinvariant_hilbert(const std::vector<int>& degrees);

/// Coefficients t^0..t^upto of prod_i (1 + ... + t^{d_i-1}) / (1 - t)^n.
std::vector<long> equivariant_hilbert(const std::vector<int>& degrees, std::size_t nvars,
                                      int upto);

}  // namespace rgkm
