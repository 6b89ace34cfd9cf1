#include <numeric>
#include <random>

#include "doctest.h"
#include "rgkm/cyclotomic.hpp"
#include "rgkm/errors.hpp"
#include "rgkm/poly_text.hpp"
#include "test_support.hpp"

using namespace rgkm;

namespace {

CycNum zeta(int m, long k = 1) { return CycNum::root_of_unity(m, k); }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<long>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<long>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  for (int m = 1; m <= 30; ++m) {
    CHECK(cyclotomic_polynomial(m).size() == static_cast<std::size_t>(euler_phi(m)) + 1);
  }
}

TEST_CASE("field_make canonical forms") {
  CHECK(CycNum::make(3, {1}) == CycNum(1L));
  CHECK(CycNum::make(3, {1}).is_one());
  // 1 + zeta + zeta^2 = 0
  CHECK(CycNum::make(3, {-1, -1}) == zeta(3, 2));
  CHECK(CycNum::make(3, {0, 0, 1}).coeffs() == CycNum::make(3, {-1, -1}).coeffs());
  const CycNum i = CycNum::make(4, {0, 1});
  CHECK(i * i == CycNum(-1L));
  CHECK(CycNum::make(5, {}).is_zero());
  CHECK_THROWS_AS(CycNum::make(3, {1, 2, 3, 4}), Error);
  CHECK_THROWS_AS(CycNum::make(0, {1}), Error);
}

TEST_CASE("field arithmetic examples") {
  CHECK(zeta(3) * zeta(3, 2) == CycNum(1L));
  CHECK((zeta(4) + zeta(4, 3)).is_zero());

  // (1 + zeta_3)^{-1}: frozen value -zeta_3, confirmed by multiplying back.
  const CycNum a = CycNum(1L) + zeta(3);
  const CycNum inv = a.inverse();
  CHECK(a * inv == CycNum(1L));
  CHECK(inv == -zeta(3));

  CHECK_THROWS_AS(CycNum(1L) / CycNum(), DivisionByZero);
  CHECK_THROWS_AS(CycNum::make(3, {}).inverse(), DivisionByZero);
  CHECK_THROWS_AS(zeta(3) + zeta(4), ConductorMismatch);
  CHECK_THROWS_AS(zeta(3) * zeta(5), ConductorMismatch);
  // Rationals combine with anything.
  CHECK(zeta(3) + CycNum(Rational(1, 2)) == CycNum::make(3, {Rational(1, 2), 1}));
  CHECK(CycNum(2L) * zeta(5) == CycNum::make(5, {0, 2}));
}

TEST_CASE("root_of_unity") {
  CHECK(zeta(2, 1) == CycNum(-1L));
  CHECK(zeta(3, 3) == CycNum(1L));
  CHECK(zeta(3, -1) == zeta(3, 2));

  // zeta_6^2 lives in Q(zeta_3); compare against the direct Phi_3 value.
  const CycNum w = zeta(6, 2);
  const CycNum reduced = w.with_minimal_conductor();
  CHECK(reduced.conductor() == 3);
  CHECK(reduced.coeffs() == CycNum::make(3, {0, 1}).coeffs());
  CHECK(w == zeta(3, 1).embed(6));
  CHECK(zeta(12, 3).with_minimal_conductor().conductor() == 4);
  CHECK(zeta(12, 6).with_minimal_conductor().is_rational());

  // Multiplicative order is m / gcd(m, k).
  for (int m = 1; m <= 12; ++m) {
    for (int k = 0; k < m; ++k) {
      const CycNum r = zeta(m, k);
      int order = 1;
      CycNum acc = r;
      while (!acc.is_one()) {
        acc *= r;
        ++order;
      }
      CHECK(order == m / std::gcd(m, k));
    }
  }
}

TEST_CASE("root of unity sums cancel") {
  for (int m = 1; m <= 12; ++m) {
    for (int k = -m; k <= 2 * m; ++k) {
      CycNum sum;
      for (int j = 0; j < m; ++j) sum += zeta(m, static_cast<long>(k) * j);
      if (k % m == 0) {
        CHECK(sum == CycNum(static_cast<long>(m)));
      } else {
        CHECK(sum.is_zero());
      }
    }
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int m : {1, 3, 4, 5, 8, 12}) {
    for (int trial = 0; trial < 40; ++trial) {
      const CycNum a = testing::random_cycnum(rng, m);
      const CycNum b = testing::random_cycnum(rng, m);
      const CycNum c = testing::random_cycnum(rng, m);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == CycNum());
      if (!a.is_zero()) CHECK(a * a.inverse() == CycNum(1L));
      if (!b.is_zero()) CHECK((a / b) * b == a);
      CHECK(a.pow(3) == a * a * a);
      if (!a.is_zero()) CHECK(a.pow(-2) * a * a == CycNum(1L));
    }
  }
}

TEST_CASE("text round trip") {
  std::mt19937_64 rng(11);
  CHECK(CycNum::make(3, {-1, 0, Rational(1, 2)}).to_string() == "-1/2*z - 3/2");
  CHECK(parse_cycnum("1/2*z^2 - 1", 5) == CycNum::make(5, {-1, 0, Rational(1, 2)}));
  CHECK(CycNum().to_string() == "0");
  CHECK(zeta(4).to_string() == "z");
  CHECK((-zeta(4)).to_string() == "-z");
  for (int m : {1, 2, 3, 4, 7, 12}) {
    for (int trial = 0; trial < 30; ++trial) {
      const CycNum a = testing::random_cycnum(rng, m);
      const CycNum back = parse_cycnum(a.to_string(), m);
      CHECK(back == a);
      CHECK(back.to_string() == a.to_string());
      CHECK(CycNum::make(m, a.coeffs()) == a);
    }
  }
}

TEST_CASE("rational inputs are canonicalized") {
  CHECK(CycNum(Rational(-2, 6)) == CycNum(Rational(-1, 3)));
  CHECK(CycNum(Rational(-2, 6)).to_string() == "-1/3");
  CHECK(CycNum(Rational(4, 2)).is_rational());
  CHECK(CycNum(Rational(0, 5)).is_zero());
}
