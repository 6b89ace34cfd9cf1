#include "rgkm/invariant_theory.hpp"

#include "rgkm/errors.hpp"

namespace rgkm {

DegreeSpace::DegreeSpace(std::size_t nvars, int degree)
    : nvars_(nvars), degree_(degree), monomials_(graded_monomials(nvars, degree)) {
  for (std::size_t k = 0; k < monomials_.size(); ++k) index_.emplace(monomials_[k], k);
}

Vector DegreeSpace::coordinates(const MultiPoly& f) const {
  Vector v(monomials_.size());
  for (const auto& [m, c] : f.terms()) {
    auto it = index_.find(m);
    if (it == index_.end() || m.degree() != degree_) {
      throw DimensionMismatch("polynomial has a term outside degree " + std::to_string(degree_));
    }
    v[it->second] = c;
  }
  return v;
}

MultiPoly DegreeSpace::polynomial(const Vector& v) const {
  MultiPoly f(nvars_);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) f.add_term(monomials_[k], v[k]);
  }
  return f;
}

GradedBasis echelon_basis(const DegreeSpace& space, const std::vector<MultiPoly>& span) {
  std::vector<Vector> rows;
  rows.reserve(span.size());
  for (const auto& f : span) rows.push_back(space.coordinates(f));
  const RowEchelon ech = row_reduce(std::move(rows), space.dimension());
  GradedBasis basis{space.degree(), {}};
  for (const auto& r : ech.rows) basis.vectors.push_back(space.polynomial(r));
  return basis;
}

MultiPoly reynolds(const ReflectionGroup& group, const MultiPoly& f) {
  MultiPoly sum(f.nvars());
  for (ElementId w = 0; w < group.size(); ++w) sum += group.act(w, f);
  return sum * CycNum(Rational(1, static_cast<long>(group.size())));
}

GradedBasis invariant_basis(const ReflectionGroup& group, int degree) {
  const DegreeSpace space(group.nvars(), degree);
  std::vector<MultiPoly> images;
  for (const auto& m : space.monomials()) {
    MultiPoly r = reynolds(group, MultiPoly::term(m, CycNum(1L)));
    if (!r.is_zero()) images.push_back(std::move(r));
  }
  return echelon_basis(space, images);
}

std::vector<GradedBasis> hilbert_ideal_pieces(const ReflectionGroup& group, int dmax) {
  std::vector<GradedBasis> pieces;
  const std::size_t n = group.nvars();
  for (int d = 0; d <= dmax; ++d) {
    if (d == 0) {
      pieces.push_back(GradedBasis{0, {}});
      continue;
    }
    std::vector<MultiPoly> span = invariant_basis(group, d).vectors;
    for (const auto& f : pieces.back().vectors) {
      for (std::size_t k = 0; k < n; ++k) span.push_back(f * MultiPoly::variable(n, k));
    }
    pieces.push_back(echelon_basis(DegreeSpace(n, d), span));
  }
  return pieces;
}

GradedBasis hilbert_ideal_piece(const ReflectionGroup& group, int degree) {
  return hilbert_ideal_pieces(group, degree).back();
}

int top_coinvariant_degree(const std::vector<int>& degrees) {
  int top = 0;
  for (int d : degrees) top += d - 1;
  return top;
}

int default_working_bound(const std::vector<int>& degrees) {
  return top_coinvariant_degree(degrees) + 4;
}

CoinvariantBasis coinvariant_basis(const ReflectionGroup& group, int dmax) {
  CoinvariantBasis out;
  out.fundamental_degrees = molien_series(group).degrees;
  const int top = top_coinvariant_degree(out.fundamental_degrees);
  if (dmax < top) {
    throw DegreeBoundTooSmall("degree bound " + std::to_string(dmax) +
                              " is below the top coinvariant degree " + std::to_string(top));
  }
  std::vector<long> expected = coinvariant_hilbert(out.fundamental_degrees);
  expected.resize(static_cast<std::size_t>(dmax) + 1, 0);

  const auto ideal = hilbert_ideal_pieces(group, dmax);
  for (int d = 0; d <= dmax; ++d) {
    const DegreeSpace space(group.nvars(), d);
    IncrementalSpan span(space.dimension());
    for (const auto& f : ideal[static_cast<std::size_t>(d)].vectors) {
      span.add(space.coordinates(f));
    }
    long count = 0;
    for (std::size_t k = 0; k < space.dimension(); ++k) {
      Vector unit(space.dimension());
      unit[k] = CycNum(1L);
      if (span.add(std::move(unit))) {
        out.lifts.push_back(MultiPoly::term(space.monomials()[k], CycNum(1L)));
        out.degrees.push_back(d);
        ++count;
      }
    }
    out.histogram.push_back(count);
    if (count != expected[static_cast<std::size_t>(d)]) {
      throw HistogramMismatch("degree " + std::to_string(d) + ": found " +
                              std::to_string(count) + " standard monomials, expected " +
                              std::to_string(expected[static_cast<std::size_t>(d)]));
    }
  }
  return out;
}

}  // namespace rgkm
