#include "doctest.h"
#include "rgkm/errors.hpp"
#include "rgkm/invariant_theory.hpp"
#include "rgkm/poly_text.hpp"
#include "test_support.hpp"

using namespace rgkm;
using rgkm::testing::bundled;
using rgkm::testing::bundled_names;

namespace {

MultiPoly poly(const ReflectionGroup& g, std::string_view text) {
  return parse_poly(text, g.conductor(), g.variables());
}

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Span of (R^W)_e * R_{d-e} over all 0 < e <= d, straight from the
// definition.
std::size_t ideal_dim_oracle(const ReflectionGroup& g, int d) {
  const DegreeSpace space(g.nvars(), d);
  std::vector<Vector> rows;
  for (int e = 1; e <= d; ++e) {
    for (const auto& f : invariant_basis(g, e).vectors) {
      for (const auto& m : graded_monomials(g.nvars(), d - e)) {
        rows.push_back(space.coordinates(f * MultiPoly::term(m, CycNum(1L))));
      }
    }
  }
  return rank_of(rows, space.dimension());
}

}  // namespace

TEST_CASE("reynolds examples") {
  const auto& z2 = bundled("z2");
  CHECK(reynolds(z2, poly(z2, "x1")).is_zero());
  CHECK(reynolds(z2, poly(z2, "x1^2")) == poly(z2, "x1^2"));
  const auto& z3 = bundled("z3");
  CHECK(reynolds(z3, poly(z3, "x1^3")) == poly(z3, "x1^3"));
  CHECK(reynolds(z3, poly(z3, "x1^2 + x1")).is_zero());
}

TEST_CASE("reynolds is an idempotent projector onto invariants") {
  std::mt19937_64 rng(11);
  for (const auto& name : bundled_names()) {
    const auto& g = bundled(name);
    for (int t = 0; t < 10; ++t) {
      const MultiPoly f = rgkm::testing::random_poly(rng, g.nvars(), 4, g.conductor());
      const MultiPoly r = reynolds(g, f);
      CHECK(reynolds(g, r) == r);
      for (ElementId w = 0; w < g.size(); ++w) CHECK(g.act(w, r) == r);
    }
  }
}

TEST_CASE("invariant and ideal examples") {
  const auto& z2 = bundled("z2");
  const auto b2 = invariant_basis(z2, 2);
  REQUIRE(b2.dimension() == 1);
  CHECK(b2.vectors[0] == poly(z2, "x1^2"));
  CHECK(invariant_basis(z2, 1).dimension() == 0);
  CHECK(hilbert_ideal_piece(z2, 2).vectors == std::vector<MultiPoly>{poly(z2, "x1^2")});
  CHECK(hilbert_ideal_piece(z2, 1).dimension() == 0);

  const auto& z3 = bundled("z3");
  CHECK(hilbert_ideal_piece(z3, 4).vectors == std::vector<MultiPoly>{poly(z3, "x1^4")});

  const auto& s3 = bundled("s3");
  CHECK(invariant_basis(s3, 2).dimension() == 1);
  CHECK(invariant_basis(s3, 3).dimension() == 1);
}

TEST_CASE("invariant dimensions follow the Molien series") {
  for (const auto& name : bundled_names()) {
    const auto& g = bundled(name);
    const auto degrees = molien_series(g).degrees;
    const int bound = default_working_bound(degrees);
    const auto molien = molien_coefficients(g, bound);
    for (int d = 0; d <= bound; ++d) {
      CHECK(Rational(static_cast<long>(invariant_basis(g, d).dimension())) ==
            molien[static_cast<std::size_t>(d)]);
    }
  }
}

TEST_CASE("recursive ideal pieces match the defining span") {
  for (const auto& name : bundled_names()) {
    const auto& g = bundled(name);
    const auto pieces = hilbert_ideal_pieces(g, 7);
    for (int d = 0; d <= 7; ++d) {
      CHECK(pieces[static_cast<std::size_t>(d)].dimension() == ideal_dim_oracle(g, d));
    }
  }
}

TEST_CASE("coinvariant basis examples") {
  const auto& z2 = bundled("z2");
  const auto c2 = coinvariant_basis(z2, 1);
  CHECK(c2.lifts == std::vector<MultiPoly>{poly(z2, "1"), poly(z2, "x1")});

  const auto& z3 = bundled("z3");
  const auto c3 = coinvariant_basis(z3, 4);
  CHECK(c3.lifts == std::vector<MultiPoly>{poly(z3, "1"), poly(z3, "x1"), poly(z3, "x1^2")});
  CHECK(c3.histogram == std::vector<long>{1, 1, 1, 0, 0});

  const auto& s3 = bundled("s3");
  const auto c = coinvariant_basis(s3, 3);
  CHECK(c.lifts.size() == 6);
  CHECK(c.histogram == std::vector<long>{1, 2, 2, 1});
  for (std::size_t k = 0; k < c.lifts.size(); ++k) {
    CHECK(c.lifts[k].size() == 1);
    CHECK(*c.lifts[k].degree() == c.degrees[k]);
  }
}

TEST_CASE("coinvariant dimensions add up") {
  for (const auto& name : bundled_names()) {
    const auto& g = bundled(name);
    const auto degrees = molien_series(g).degrees;
    const int bound = default_working_bound(degrees);
    const auto c = coinvariant_basis(g, bound);
    CHECK(c.lifts.size() == g.size());
    const auto ideal = hilbert_ideal_pieces(g, bound);
    for (int d = 0; d <= bound; ++d) {
      const long rd = binomial(static_cast<long>(g.nvars()) + d - 1, d);
      CHECK(rd == static_cast<long>(ideal[static_cast<std::size_t>(d)].dimension()) +
                      c.histogram[static_cast<std::size_t>(d)]);
    }
  }
}

TEST_CASE("coinvariant bound errors") {
  CHECK_THROWS_AS(coinvariant_basis(bundled("s3"), 2), DegreeBoundTooSmall);
  CHECK_NOTHROW(coinvariant_basis(bundled("s3"), 3));
  CHECK(top_coinvariant_degree({3, 6}) == 7);
  CHECK(default_working_bound({2, 3}) == 7);
}

TEST_CASE("degree space round trip") {
  const DegreeSpace space(3, 4);
  CHECK(space.dimension() == 15);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const MultiPoly f =
        rgkm::testing::random_poly(rng, 3, 4, 3).homogeneous_component(4);
    CHECK(space.polynomial(space.coordinates(f)) == f);
  }
  CHECK_THROWS_AS(space.coordinates(MultiPoly::variable(3, 0)), DimensionMismatch);
}
