#pragma once

// Elements of R (x)_{R^W} R and the localization map
//   mu(T)(x) = mu_x(T),  mu_x(f (x) g) = f * x(g).

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "rgkm/equivariant.hpp"
#include "rgkm/invariant_theory.hpp"
#include "rgkm/parallel.hpp"

namespace rgkm {

/// Formal sum of simple tensors f (x) g. Two tensors are equal iff their
/// images under mu agree; operator== is not provided for that reason.
struct TensorElement {
  std::vector<std::pair<MultiPoly, MultiPoly>> terms;

  static TensorElement simple(MultiPoly f, MultiPoly g);

  TensorElement& operator+=(const TensorElement& other);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  /// (f (x) g)(f' (x) g') = ff' (x) gg'
  TensorElement operator*(const TensorElement& other) const;

  /// f (x) w^{-1}(g), which makes mu equivariant.
  TensorElement act(const ReflectionGroup& group, ElementId w) const;
};

MultiPoly mu_x(const ReflectionGroup& group, const TensorElement& t, ElementId x);
WMap mu(const ReflectionGroup& group, const TensorElement& t);

/// 1 (x) _iDelta_s applied to every summand.
TensorElement apply_delta(const ReflectionGroup& group, ReflectionId r, int i,
                          const TensorElement& t);

/// op_A(s, i, mu(T)) == mu((1 (x) _iDelta_s) T); requires 1 <= i <= |s|-1.
bool square_commutes(const ReflectionGroup& group, ReflectionId r, int i, const TensorElement& t);

/// Rank of { m * mu(1 (x) e_i) : deg m = d - deg e_i }.
std::size_t image_graded_dim(const ReflectionGroup& group, const CoinvariantBasis& coinv,
                             int degree);

/// Homogeneous tensor: 1..max_terms simple tensors f (x) g with
/// deg f + deg g = a random total in 0..max_degree, small-height rational
/// coefficients.
TensorElement random_tensor(std::mt19937_64& rng, const ReflectionGroup& group,
                            int max_degree = 5, int max_terms = 3);
TensorElement random_simple_tensor(std::mt19937_64& rng, const ReflectionGroup& group,
                                   int max_degree = 5);

/// Sparse random polynomial with rational coefficients.
MultiPoly random_rational_poly(std::mt19937_64& rng, std::size_t nvars, int degree,
                               int max_terms = 3, int height = 3);

/// Adds c * m at one random vertex of a member, with m a monomial of degree
/// at most the map's degree, until the result fails hw_member. Empty when
/// W has no pseudo-reflections (every map is then a member) or after 1000
/// attempts.
std::optional<WMap> random_nonmember(std::mt19937_64& rng, const WMap& member);

struct TheoremRow {
  int degree = 0;
  long expected = 0;
  long image = 0;
  long hw = 0;

  bool pass() const { return expected == image && image == hw; }
};

struct TheoremReport {
  std::vector<int> fundamental_degrees;
  std::vector<TheoremRow> rows;
  std::size_t sample_trials = 0;
  std::size_t sample_failures = 0;

  bool pass() const;
};

/// Compares, for each d <= dmax, the expected dimension from the degrees,
/// the rank of the mu-image and the dimension of (H_W)_d; then checks that
/// mu(T) is in H_W for `samples` random tensors.
TheoremReport verify_theorem(const ReflectionGroup& group, int dmax, std::size_t samples,
                             std::uint64_t seed, std::size_t threads = worker_count());

}  // namespace rgkm
