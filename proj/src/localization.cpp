#include "rgkm/localization.hpp"

#include <algorithm>

#include "rgkm/errors.hpp"
#include "rgkm/parallel.hpp"

namespace rgkm {

TensorElement TensorElement::simple(MultiPoly f, MultiPoly g) {
  TensorElement t;
  t.terms.emplace_back(std::move(f), std::move(g));
  return t;
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  terms.insert(terms.end(), other.terms.begin(), other.terms.end());
  return *this;
}

TensorElement TensorElement::operator*(const TensorElement& other) const {
  TensorElement out;
  for (const auto& [f, g] : terms) {
    for (const auto& [f2, g2] : other.terms) out.terms.emplace_back(f * f2, g * g2);
  }
  return out;
}

TensorElement TensorElement::act(const ReflectionGroup& group, ElementId w) const {
  TensorElement out;
  const ElementId w_inv = group.inverse(w);
  for (const auto& [f, g] : terms) out.terms.emplace_back(f, group.act(w_inv, g));
  return out;
}

MultiPoly mu_x(const ReflectionGroup& group, const TensorElement& t, ElementId x) {
  MultiPoly sum(group.nvars());
  for (const auto& [f, g] : t.terms) sum += f * group.act(x, g);
  return sum;
}

WMap mu(const ReflectionGroup& group, const TensorElement& t) {
  std::vector<MultiPoly> values;
  values.reserve(group.size());
  for (ElementId x = 0; x < group.size(); ++x) values.push_back(mu_x(group, t, x));
  return WMap(group, std::move(values));
}

TensorElement apply_delta(const ReflectionGroup& group, ReflectionId r, int i,
                          const TensorElement& t) {
  TensorElement out;
  for (const auto& [f, g] : t.terms) {
    DivisionResult d = op_delta(group, r, i, g);
    if (!d.ok()) throw PreconditionViolation("Delta-operator is not polynomial on this tensor");
    out.terms.emplace_back(f, d.quotient());
  }
  return out;
}

bool square_commutes(const ReflectionGroup& group, ReflectionId r, int i, const TensorElement& t) {
  if (i < 1 || i > group.reflection(r).order - 1) {
    throw PreconditionViolation("square_commutes needs 1 <= i <= |s| - 1");
  }
  const OperatorResult lhs = op_A(mu(group, t), r, i);
  if (!lhs.ok()) return false;
  return *lhs.value == mu(group, apply_delta(group, r, i, t));
}

std::size_t image_graded_dim(const ReflectionGroup& group, const CoinvariantBasis& coinv,
                             int degree) {
  const DegreeSpace space(group.nvars(), degree);
  const MultiPoly one = MultiPoly::constant(group.nvars(), CycNum(1L));
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < coinv.lifts.size(); ++k) {
    const int rest = degree - coinv.degrees[k];
    if (rest < 0) continue;
    const WMap image = mu(group, TensorElement::simple(one, coinv.lifts[k]));
    for (const auto& m : graded_monomials(group.nvars(), rest)) {
      rows.push_back(map_coordinates(MultiPoly::term(m, CycNum(1L)) * image, space));
    }
  }
  return rank_of(std::move(rows), group.size() * space.dimension());
}

MultiPoly random_rational_poly(std::mt19937_64& rng, std::size_t nvars, int degree,
                               int max_terms, int height) {
  auto monos = graded_monomials(nvars, degree);
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<int> num(-height, height);
  std::uniform_int_distribution<int> den(1, height);
  const auto terms = std::min(static_cast<std::size_t>(count(rng)), monos.size());
  // distinct monomials, so the result is nonzero and homogeneous
  for (std::size_t t = 0; t < terms; ++t) {
    std::uniform_int_distribution<std::size_t> pick(t, monos.size() - 1);
    std::swap(monos[t], monos[pick(rng)]);
  }
  MultiPoly p(nvars);
  for (std::size_t t = 0; t < terms; ++t) {
    const int a = num(rng);
    const int b = den(rng);
    p.add_term(monos[t], CycNum(Rational(a == 0 ? 1 : a, b)));
  }
  return p;
}

TensorElement random_simple_tensor(std::mt19937_64& rng, const ReflectionGroup& group,
                                   int max_degree) {
  std::uniform_int_distribution<int> total(0, max_degree);
  const int d = total(rng);
  std::uniform_int_distribution<int> split(0, d);
  const int df = split(rng);
  const std::size_t n = group.nvars();
  return TensorElement::simple(random_rational_poly(rng, n, df),
                               random_rational_poly(rng, n, d - df));
}

TensorElement random_tensor(std::mt19937_64& rng, const ReflectionGroup& group, int max_degree,
                            int max_terms) {
  std::uniform_int_distribution<int> total(0, max_degree);
  std::uniform_int_distribution<int> count(1, max_terms);
  const int d = total(rng);
  const int terms = count(rng);
  const std::size_t n = group.nvars();
  TensorElement t;
  for (int k = 0; k < terms; ++k) {
    std::uniform_int_distribution<int> split(0, d);
    const int df = split(rng);
    t += TensorElement::simple(random_rational_poly(rng, n, df),
                               random_rational_poly(rng, n, d - df));
  }
  return t;
}

std::optional<WMap> random_nonmember(std::mt19937_64& rng, const WMap& member) {
  const ReflectionGroup& group = member.group();
  if (group.reflections().empty()) return std::nullopt;
  std::uniform_int_distribution<ElementId> vertex(0, group.size() - 1);
  // In high degrees every map may be a member, so the perturbation degree
  // is drawn from 0..deg F; degree 0 at a single vertex always fails.
  const int top = member.homogeneous_degree().value_or(3);
  std::uniform_int_distribution<int> degree(0, top);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<MultiPoly> values = member.values();
    values[vertex(rng)] += random_rational_poly(rng, group.nvars(), degree(rng), 1);
    WMap candidate(group, std::move(values));
    if (!hw_member(candidate, true).ok) return candidate;
  }
  return std::nullopt;
}

bool TheoremReport::pass() const {
  if (sample_failures != 0) return false;
  for (const auto& row : rows) {
    if (!row.pass()) return false;
  }
  return true;
}

TheoremReport verify_theorem(const ReflectionGroup& group, int dmax, std::size_t samples,
                             std::uint64_t seed, std::size_t threads) {
  TheoremReport report;
  report.fundamental_degrees = molien_series(group).degrees;
  const auto expected = equivariant_hilbert(report.fundamental_degrees, group.nvars(), dmax);
  const auto coinv = coinvariant_basis(
      group, std::max(dmax, top_coinvariant_degree(report.fundamental_degrees)));

  report.rows.resize(static_cast<std::size_t>(dmax) + 1);
  parallel_for(report.rows.size(), [&](std::size_t k) {
    const int d = static_cast<int>(k);
    report.rows[k] = TheoremRow{d, expected[k], static_cast<long>(image_graded_dim(group, coinv, d)),
                                static_cast<long>(hw_graded_dim(group, d))};
  }, threads);

  std::mt19937_64 rng(seed);
  std::vector<TensorElement> tensors;
  for (std::size_t t = 0; t < samples; ++t) tensors.push_back(random_tensor(rng, group));
  std::vector<char> failed(samples, 0);
  parallel_for(samples, [&](std::size_t t) {
    failed[t] = hw_member(mu(group, tensors[t]), true).ok ? 0 : 1;
  }, threads);
  report.sample_trials = samples;
  for (char f : failed) report.sample_failures += static_cast<std::size_t>(f);
  return report;
}

}  // namespace rgkm
