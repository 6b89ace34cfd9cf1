#include "doctest.h"
#include "rgkm/equivariant.hpp"
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

WMap map_of(const ReflectionGroup& g, std::initializer_list<const char*> texts) {
  std::vector<MultiPoly> values;
  for (const char* t : texts) values.push_back(poly(g, t));
  return WMap(g, values);
}

CycNum zeta(int m, long k) { return CycNum::root_of_unity(m, k); }

ElementId element(const ReflectionGroup& g, const Matrix& m) { return *g.find(m); }

// Multiply-back oracle for one value of _iA_s(F): the value v at x must
// satisfy v * x(l_s)^i == sum_j lambda^{-ij} F(x s^j), with x(l_s) from the
// raw matrix action.
bool operator_value_ok(const WMap& f, ReflectionId r, int i, const WMap& value) {
  const ReflectionGroup& g = f.group();
  const PseudoReflection& s = g.reflection(r);
  for (ElementId x = 0; x < g.size(); ++x) {
    const MultiPoly lx = apply_linear(g.matrix(x), s.coroot.to_poly());
    MultiPoly numerator(g.nvars());
    ElementId p = x;
    for (int j = 0; j < s.order; ++j) {
      numerator += s.eigenvalue.pow(-static_cast<long>(i) * j) * f[p];
      p = g.multiply(p, s.element);
    }
    if (i >= 0) {
      if (value[x] * lx.pow(i) != numerator) return false;
    } else if (value[x] != numerator * lx.pow(-i)) {
      return false;
    }
  }
  return true;
}

std::vector<WMap> random_members(const ReflectionGroup& g, std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<WMap> out;
  for (int k = 0; k < count; ++k) out.push_back(mu(g, random_tensor(rng, g, 4)));
  return out;
}

}  // namespace

TEST_CASE("map action examples") {
  const auto& z2 = bundled("z2");
  const WMap f = map_of(z2, {"x1", "0"});
  CHECK(f.act(z2.identity()) == f);
  CHECK(f.act(1) == map_of(z2, {"0", "x1"}));

  std::mt19937_64 rng(5);
  for (const auto& name : bundled_names()) {
    const auto& g = bundled(name);
    std::vector<MultiPoly> values;
    for (ElementId x = 0; x < g.size(); ++x) {
      values.push_back(rgkm::testing::random_poly(rng, g.nvars(), 2, g.conductor(), 2));
    }
    const WMap m(g, values);
    for (ElementId v = 0; v < g.size(); ++v) {
      ElementId w = (v * 7 + 3) % g.size();
      CHECK(m.act(v).act(w) == m.act(g.multiply(v, w)));
      WMap p = m;
      for (int k = 0; k < g.order(v); ++k) p = p.act(v);
      CHECK(p == m);
    }
  }
}

TEST_CASE("co-root map examples") {
  const auto& z2 = bundled("z2");
  CHECK(coroot_map(z2, 0) == map_of(z2, {"x1", "-x1"}));

  const auto& z3 = bundled("z3");
  const ElementId s = element(z3, Matrix(1, {zeta(3, 1)}));
  const ReflectionId r = *z3.reflection_of(s);
  CHECK(z3.reflection(r).eigenvalue == zeta(3, 2));
  const WMap l = coroot_map(z3, r);
  for (int j = 0; j < 3; ++j) CHECK(l[z3.power(s, j)] == zeta(3, 2 * j) * poly(z3, "x1"));

  const auto& g = bundled("g312");
  const ReflectionId d = *g.reflection_of(element(g, Matrix(2, {zeta(3, 1), 0, 0, 1})));
  const ElementId swap = element(g, Matrix(2, {0, 1, 1, 0}));
  CHECK(coroot_map(g, d)[swap] == poly(g, "x2"));

  for (const auto& name : bundled_names()) {
    const auto& h = bundled(name);
    for (ReflectionId q = 0; q < h.reflections().size(); ++q) {
      const WMap lq = coroot_map(h, q);
      const auto& sq = h.reflection(q);
      for (ElementId x = 0; x < h.size(); ++x) {
        CHECK(lq[h.multiply(x, sq.element)] == sq.eigenvalue * lq[x]);
      }
    }
  }
}

TEST_CASE("generalized Delta-operator examples") {
  const auto& z2 = bundled("z2");
  CHECK(op_delta(z2, 0, 1, poly(z2, "x1^3")).quotient() == poly(z2, "2*x1^2"));
  CHECK(op_delta(z2, 0, 1, poly(z2, "x1^2")).quotient().is_zero());
  const auto above = op_delta(z2, 0, 2, poly(z2, "1"));
  CHECK(!above.ok());
  CHECK(above.witness() == poly(z2, "2"));

  const auto& z3 = bundled("z3");
  const ReflectionId r = *z3.reflection_of(element(z3, Matrix(1, {zeta(3, 1)})));
  CHECK(op_delta(z3, r, 2, poly(z3, "x1^2")).quotient() == poly(z3, "3"));
}

TEST_CASE("Delta-operators stay in R below the order") {
  std::mt19937_64 rng(21);
  for (const auto& name : bundled_names()) {
    const auto& g = bundled(name);
    for (int t = 0; t < 10; ++t) {
      const MultiPoly f = rgkm::testing::random_poly(rng, g.nvars(), 5, g.conductor());
      for (ReflectionId r = 0; r < g.reflections().size(); ++r) {
        for (int i = 1; i < g.reflection(r).order; ++i) {
          const auto d = op_delta(g, r, i, f);
          REQUIRE(d.ok());
          CHECK(d.quotient() * g.reflection(r).coroot.to_poly().pow(i) ==
                delta_numerator(g, r, i, f));
        }
      }
    }
  }
}

TEST_CASE("operator A examples") {
  for (const auto& name : bundled_names()) {
    const auto& g = bundled(name);
    const WMap one = WMap::constant(g, CycNum(1L));
    for (ReflectionId r = 0; r < g.reflections().size(); ++r) {
      for (int i = 1; i < g.reflection(r).order; ++i) {
        const auto res = op_A(one, r, i);
        REQUIRE(res.ok());
        CHECK(res.value->is_zero());
      }
      const auto zero = op_A(one, r, 0);
      CHECK(*zero.value == WMap::constant(g, CycNum(static_cast<long>(g.reflection(r).order))));
    }
  }
  const auto& z2 = bundled("z2");
  const WMap f = map_of(z2, {"x1", "0"});
  CHECK(*op_A(f, 0, 1).value == map_of(z2, {"1", "1"}));
  CHECK(*op_A(f, 0, 0).value == map_of(z2, {"x1", "x1"}));
}

TEST_CASE("membership examples") {
  const auto& z2 = bundled("z2");
  CHECK(hw_member(WMap::constant(z2, poly(z2, "3*x1^2 + 1"))).ok);
  const auto bad = hw_member(map_of(z2, {"1", "0"}));
  CHECK(!bad.ok);
  REQUIRE(bad.failures.size() == 1);
  CHECK(bad.failures[0].exponent == 1);
  CHECK(bad.failures[0].witness == poly(z2, "1"));
  CHECK(hw_member(map_of(z2, {"x1", "0"})).ok);
  for (const auto& name : bundled_names()) {
    const auto& g = bundled(name);
    CHECK(hw_member(WMap::constant(g, poly(g, "x1 + 2"))).ok);
  }
}

TEST_CASE("graded pieces of H_W") {
  const auto& z2 = bundled("z2");
  const auto& z3 = bundled("z3");
  std::vector<std::size_t> dims2;
  std::vector<std::size_t> dims3;
  for (int d = 0; d <= 4; ++d) dims2.push_back(hw_graded_dim(z2, d));
  for (int d = 0; d <= 3; ++d) dims3.push_back(hw_graded_dim(z3, d));
  CHECK(dims2 == std::vector<std::size_t>{1, 2, 2, 2, 2});
  CHECK(dims3 == std::vector<std::size_t>{1, 2, 3, 3});
  for (const auto& name : bundled_names()) {
    const auto& g = bundled(name);
    CHECK(hw_graded_dim(g, 0) == 1);
    for (int d = 0; d <= 3; ++d) {
      const auto basis = hw_graded_basis(g, d);
      CHECK(basis.dimension() == hw_graded_dim(g, d));
      for (const auto& v : basis.vectors) CHECK(hw_member(v).ok);
      if (d > 0) CHECK(basis.dimension() >= hw_graded_dim(g, d - 1));
    }
  }
}

TEST_CASE("operator A matches the multiply-back oracle") {
  for (const auto& name : bundled_names()) {
    const auto& g = bundled(name);
    for (const auto& f : random_members(g, 31, 6)) {
      for (ReflectionId r = 0; r < g.reflections().size(); ++r) {
        for (int i = -1; i < g.reflection(r).order; ++i) {
          const auto res = op_A(f, r, i);
          REQUIRE(res.ok());
          CHECK(operator_value_ok(f, r, i, *res.value));
          CHECK(res.value->act(g.reflection(r).element) == *res.value);
        }
      }
    }
  }
}

TEST_CASE("members are closed under the W-action with the conjugation identity") {
  for (const auto& name : bundled_names()) {
    const auto& g = bundled(name);
    for (const auto& f : random_members(g, 41, 4)) {
      REQUIRE(hw_member(f).ok);
      for (ElementId w = 0; w < g.size(); ++w) {
        const WMap fw = f.act(w);
        CHECK(hw_member(fw, true).ok);
        for (ReflectionId r = 0; r < g.reflections().size(); ++r) {
          const auto [t, c] = g.conjugate_reflection(w, r);
          for (int i = 1; i < g.reflection(r).order; ++i) {
            CHECK(op_A_exact(fw, r, i) == c.pow(-i) * op_A_exact(f, t, i).act(w));
          }
        }
      }
    }
  }
}

TEST_CASE("decomposition along a pseudo-reflection") {
  const auto& z2 = bundled("z2");
  const auto parts = decompose_along_s(map_of(z2, {"x1", "0"}), 0);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == map_of(z2, {"x1", "x1"}));
  CHECK(parts[1] == map_of(z2, {"1", "1"}));
  CHECK(recompose_along_s(parts, 0) == map_of(z2, {"x1", "0"}));
  CHECK_THROWS_AS(decompose_along_s(map_of(z2, {"1", "0"}), 0), PreconditionViolation);

  for (const auto& name : bundled_names()) {
    const auto& g = bundled(name);
    const WMap c = WMap::constant(g, poly(g, "x1 - 1"));
    for (ReflectionId r = 0; r < g.reflections().size(); ++r) {
      const long order = g.reflection(r).order;
      const auto cp = decompose_along_s(c, r);
      CHECK(cp[0] == CycNum(order) * c);
      for (std::size_t j = 1; j < cp.size(); ++j) CHECK(cp[j].is_zero());

      const auto lp = decompose_along_s(coroot_map(g, r), r);
      for (std::size_t j = 0; j < lp.size(); ++j) {
        CHECK(lp[j] == (j == 1 ? WMap::constant(g, CycNum(order)) : WMap::zero(g)));
      }
      CHECK(recompose_along_s(lp, r) == coroot_map(g, r));
    }
    for (const auto& f : random_members(g, 51, 5)) {
      for (ReflectionId r = 0; r < g.reflections().size(); ++r) {
        CHECK(recompose_along_s(decompose_along_s(f, r), r) == f);
      }
    }
  }
}

TEST_CASE("Leibniz rule with the 1/|s| factor") {
  const auto& z2 = bundled("z2");
  const WMap f = map_of(z2, {"x1", "0"});
  const WMap lhs = op_A_exact(f * f, 0, 1);
  CHECK(lhs == map_of(z2, {"x1", "x1"}));
  const WMap unscaled = op_A_exact(f, 0, 0) * op_A_exact(f, 0, 1) +
                        op_A_exact(f, 0, 1) * op_A_exact(f, 0, 0);
  CHECK(unscaled == map_of(z2, {"2*x1", "2*x1"}));
  CHECK(lhs == CycNum(Rational(1, 2)) * unscaled);

  for (const auto& name : bundled_names()) {
    const auto& g = bundled(name);
    const auto fs = random_members(g, 61, 4);
    const auto gs = random_members(g, 62, 4);
    for (std::size_t k = 0; k < fs.size(); ++k) {
      const WMap prod = fs[k] * gs[k];
      for (ReflectionId r = 0; r < g.reflections().size(); ++r) {
        const int order = g.reflection(r).order;
        for (int i = 0; i < order; ++i) {
          WMap rhs = WMap::zero(g);
          for (int a = 0; a < order; ++a) {
            rhs += op_A_exact(fs[k], r, a) * op_A_exact(gs[k], r, i - a);
          }
          rhs *= CycNum(Rational(1, order));
          CHECK(op_A_exact(prod, r, i) == rhs);
          // raw numerators: no division anywhere
          for (ElementId x : g.coset_representatives(r)) {
            MultiPoly raw(g.nvars());
            for (int a = 0; a < order; ++a) {
              raw += operator_numerator(fs[k], r, a, x) * operator_numerator(gs[k], r, i - a, x);
            }
            CHECK(operator_numerator(prod, r, i, x) == CycNum(Rational(1, order)) * raw);
          }
        }
      }
    }
  }
}

TEST_CASE("products and operator images stay in H_W") {
  for (const auto& name : bundled_names()) {
    const auto& g = bundled(name);
    const auto fs = random_members(g, 71, 4);
    for (std::size_t k = 0; k + 1 < fs.size(); ++k) CHECK(hw_member(fs[k] * fs[k + 1]).ok);
    for (const auto& f : fs) {
      for (ReflectionId r = 0; r < g.reflections().size(); ++r) {
        for (int i = 1; i < g.reflection(r).order; ++i) {
          CHECK(hw_member(op_A_exact(f, r, i)).ok);
        }
      }
    }
  }
}

TEST_CASE("rescaling a co-root rescales operator A") {
  std::mt19937_64 rng(81);
  for (const auto& name : bundled_names()) {
    const auto& g = bundled(name);
    const CycNum c = CycNum(3L) + CycNum::root_of_unity(g.conductor(), 1);
    for (const auto& f : random_members(g, 82, 3)) {
      for (ReflectionId r = 0; r < g.reflections().size(); ++r) {
        for (int i = 1; i < g.reflection(r).order; ++i) {
          CHECK(*op_A(f, r, i, c).value == c.pow(-i) * *op_A(f, r, i).value);
        }
      }
    }
    WMap bad = WMap::constant(g, CycNum(1L));
    std::vector<MultiPoly> values = bad.values();
    values[0] += rgkm::testing::random_poly(rng, g.nvars(), 1, g.conductor(), 1)
                     .homogeneous_component(1);
    values[1] += MultiPoly::constant(g.nvars(), CycNum(1L));
    const WMap h(g, values);
    for (ReflectionId r = 0; r < g.reflections().size(); ++r) {
      for (int i = 1; i < g.reflection(r).order; ++i) {
        CHECK(op_A(h, r, i, c).ok() == op_A(h, r, i).ok());
      }
    }
  }
}
