#include "doctest.h"
#include "rgkm/errors.hpp"
#include "rgkm/localization.hpp"
#include "rgkm/poly_text.hpp"
#include "test_support.hpp"

using namespace rgkm;
using rgkm::testing::bundled;
using rgkm::testing::bundled_names;

namespace {

MultiPoly poly(const ReflectionGroup& g, std::string_view text) {
  return parse_poly(text, g.conductor(), g.variables());
}

TensorElement simple(const ReflectionGroup& g, std::string_view f, std::string_view h) {
  return TensorElement::simple(poly(g, f), poly(g, h));
}

WMap map_of(const ReflectionGroup& g, std::initializer_list<const char*> texts) {
  std::vector<MultiPoly> values;
  for (const char* t : texts) values.push_back(poly(g, t));
  return WMap(g, values);
}

}  // namespace

TEST_CASE("twisted multiplication examples") {
  const auto& z2 = bundled("z2");
  CHECK(mu_x(z2, simple(z2, "x1 + 1", "x1^2"), z2.identity()) == poly(z2, "x1^3 + x1^2"));
  CHECK(mu_x(z2, simple(z2, "1", "x1"), 1) == poly(z2, "-x1"));
  const auto& z3 = bundled("z3");
  const ElementId s = *z3.find(Matrix(1, {CycNum::root_of_unity(3, 1)}));
  CHECK(mu_x(z3, simple(z3, "1", "x1^2"), s) == poly(z3, "z*x1^2"));
}

TEST_CASE("localization examples") {
  const auto& z2 = bundled("z2");
  CHECK(mu(z2, simple(z2, "1", "1")) == WMap::constant(z2, CycNum(1L)));
  CHECK(mu(z2, simple(z2, "1", "x1")) == map_of(z2, {"x1", "-x1"}));
  CHECK(mu(z2, simple(z2, "x1", "1") + simple(z2, "1", "x1")) == map_of(z2, {"2*x1", "0"}));
}

TEST_CASE("localization is an equivariant ring map") {
  std::mt19937_64 rng(101);
  for (const auto& name : bundled_names()) {
    const auto& g = bundled(name);
    for (int t = 0; t < 8; ++t) {
      const TensorElement a = random_tensor(rng, g, 3);
      const TensorElement b = random_tensor(rng, g, 3);
      CHECK(mu(g, a * b) == mu(g, a) * mu(g, b));
      CHECK(mu(g, a + b) == mu(g, a) + mu(g, b));
      for (ElementId w = 0; w < g.size(); ++w) CHECK(mu(g, a.act(g, w)) == mu(g, a).act(w));
    }
  }
}

TEST_CASE("invariants pass through the tensor sign") {
  std::mt19937_64 rng(111);
  for (const auto& name : bundled_names()) {
    const auto& g = bundled(name);
    const auto degrees = molien_series(g).degrees;
    std::vector<MultiPoly> invariants;
    for (int d = 1; d <= degrees.back(); ++d) {
      for (const auto& h : invariant_basis(g, d).vectors) invariants.push_back(h);
    }
    for (int t = 0; t < 6; ++t) {
      const TensorElement base = random_simple_tensor(rng, g, 3);
      const auto& [f, h2] = base.terms.front();
      const MultiPoly& h = invariants[static_cast<std::size_t>(t) % invariants.size()];
      CHECK(mu(g, TensorElement::simple(f * h, h2)) == mu(g, TensorElement::simple(f, h * h2)));
    }
  }
}

TEST_CASE("commuting square examples") {
  const auto& z2 = bundled("z2");
  const TensorElement t = simple(z2, "1", "x1^3");
  CHECK(*op_A(mu(z2, t), 0, 1).value == WMap::constant(z2, poly(z2, "2*x1^2")));
  CHECK(mu(z2, apply_delta(z2, 0, 1, t)) == WMap::constant(z2, poly(z2, "2*x1^2")));
  CHECK(square_commutes(z2, 0, 1, t));
  CHECK_THROWS_AS(square_commutes(z2, 0, 2, t), PreconditionViolation);
  for (const auto& name : bundled_names()) {
    const auto& g = bundled(name);
    for (ReflectionId r = 0; r < g.reflections().size(); ++r) {
      for (int i = 1; i < g.reflection(r).order; ++i) {
        CHECK(op_A(mu(g, simple(g, "1", "1")), r, i).value->is_zero());
        CHECK(square_commutes(g, r, i, simple(g, "1", "1")));
        CHECK(mu(g, apply_delta(g, r, i, simple(g, "x1^2 - 3", "1"))).is_zero());
        CHECK(square_commutes(g, r, i, simple(g, "x1^2 - 3", "1")));
      }
    }
  }
}

TEST_CASE("commuting square on random simple tensors") {
  std::mt19937_64 rng(121);
  for (const auto& name : bundled_names()) {
    const auto& g = bundled(name);
    for (int t = 0; t < 10; ++t) {
      const TensorElement te = random_simple_tensor(rng, g);
      for (ReflectionId r = 0; r < g.reflections().size(); ++r) {
        for (int i = 1; i < g.reflection(r).order; ++i) CHECK(square_commutes(g, r, i, te));
      }
    }
  }
}

TEST_CASE("image dimension examples") {
  const auto& z2 = bundled("z2");
  const auto c2 = coinvariant_basis(z2, 4);
  CHECK(image_graded_dim(z2, c2, 0) == 1);
  CHECK(image_graded_dim(z2, c2, 1) == 2);
  const auto& z3 = bundled("z3");
  CHECK(image_graded_dim(z3, coinvariant_basis(z3, 4), 2) == 3);
}

TEST_CASE("dimension triples agree") {
  const std::map<std::string, std::vector<long>> expected{
      {"z2", {1, 2, 2, 2, 2}},     {"z3", {1, 2, 3, 3}},        {"z4", {1, 2, 3, 4, 4}},
      {"s3", {1, 4, 9, 15, 21}},   {"b2", {1, 4, 9, 16, 24}},   {"g312", {1, 4, 10, 19, 31}}};
  for (const auto& [name, row] : expected) {
    const auto& g = bundled(name);
    const auto report = verify_theorem(g, static_cast<int>(row.size()) - 1, 20, 7);
    REQUIRE(report.rows.size() == row.size());
    for (std::size_t d = 0; d < row.size(); ++d) {
      CHECK(report.rows[d].expected == row[d]);
      CHECK(report.rows[d].image == row[d]);
      CHECK(report.rows[d].hw == row[d]);
    }
    CHECK(report.sample_failures == 0);
    CHECK(report.pass());
  }
}

TEST_CASE("random tensors are seeded and homogeneous") {
  const auto& g = bundled("s3");
  std::mt19937_64 a(5);
  std::mt19937_64 b(5);
  for (int t = 0; t < 20; ++t) {
    const TensorElement x = random_tensor(a, g);
    const TensorElement y = random_tensor(b, g);
    CHECK(mu(g, x) == mu(g, y));
    std::optional<int> total;
    for (const auto& [f, h] : x.terms) {
      const int d = *f.degree() + *h.degree();
      CHECK(d <= 5);
      if (total) CHECK(*total == d);
      total = d;
    }
  }
}
