#pragma once

// Per-degree linear algebra for the invariant ring R^W, the Hilbert ideal
// J_W = (R^W)^+ R and a standard-monomial basis of the coinvariants R/J_W.

#include <map>
#include <vector>

#include "rgkm/linalg.hpp"
#include "rgkm/multipoly.hpp"
#include "rgkm/reflection_group.hpp"

namespace rgkm {

/// Coordinates of homogeneous degree-d polynomials in the monomial basis.
class DegreeSpace {
 public:
  DegreeSpace(std::size_t nvars, int degree);

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  std::size_t dimension() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t index(const Monomial& m) const { return index_.at(m); }

  /// Throws DimensionMismatch for terms of another degree.
  Vector coordinates(const MultiPoly& f) const;
  MultiPoly polynomial(const Vector& v) const;

 private:
  std::size_t nvars_;
  int degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t, GrlexDescending> index_;
};

struct GradedBasis {
  int degree = 0;
  std::vector<MultiPoly> vectors;

  std::size_t dimension() const { return vectors.size(); }
};

/// Row-reduced basis of the span of homogeneous degree-d polynomials.
GradedBasis echelon_basis(const DegreeSpace& space, const std::vector<MultiPoly>& span);

/// (1/|W|) sum_w w.f
MultiPoly reynolds(const ReflectionGroup& group, const MultiPoly& f);

GradedBasis invariant_basis(const ReflectionGroup& group, int degree);

/// Basis of sum_{0<e<=d} (R^W)_e R_{d-e}.
GradedBasis hilbert_ideal_piece(const ReflectionGroup& group, int degree);

/// The pieces (J_W)_0..(J_W)_dmax, built with J_d = R_1 J_{d-1} + (R^W)_d.
std::vector<GradedBasis> hilbert_ideal_pieces(const ReflectionGroup& group, int dmax);

struct CoinvariantBasis {
  std::vector<MultiPoly> lifts;   // e_1..e_N, monomials
  std::vector<int> degrees;       // deg e_i
  std::vector<long> histogram;    // number of lifts per degree 0..dmax
  std::vector<int> fundamental_degrees;
};

/// Greedy standard monomials in graded-lex order. Throws DegreeBoundTooSmall
/// when dmax < sum(d_i - 1) and HistogramMismatch when the per-degree counts
/// differ from prod_i (1 + ... + t^{d_i - 1}).
CoinvariantBasis coinvariant_basis(const ReflectionGroup& group, int dmax);

/// sum(d_i - 1)
int top_coinvariant_degree(const std::vector<int>& degrees);
/// sum(d_i - 1) + 4
int default_working_bound(const std::vector<int>& degrees);

}  // namespace rgkm
