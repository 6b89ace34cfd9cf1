#include "rgkm/reflection_group.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "rgkm/errors.hpp"

namespace rgkm {

namespace {

// Coefficients of det(1 - t A) for t^0..t^n (Faddeev-LeVerrier).
std::vector<CycNum> det_one_minus_t(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<CycNum> out(n + 1);
  out[0] = CycNum(1L);
  Matrix m = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const Matrix am = a * m;
    const CycNum coeff = -am.trace() / CycNum(static_cast<long>(k));
    out[k] = coeff;
    m = am;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += coeff;
  }
  return out;
}

std::vector<CycNum> invert_series(const std::vector<CycNum>& d, int upto) {
  std::vector<CycNum> s(static_cast<std::size_t>(upto) + 1);
  s[0] = CycNum(1L);
  for (int j = 1; j <= upto; ++j) {
    CycNum acc;
    for (std::size_t k = 1; k < d.size() && k <= static_cast<std::size_t>(j); ++k) {
      if (!d[k].is_zero()) acc -= d[k] * s[static_cast<std::size_t>(j) - k];
    }
    s[static_cast<std::size_t>(j)] = acc;
  }
  return s;
}

}  // namespace

ReflectionGroup ReflectionGroup::close(const std::vector<Matrix>& generators, int conductor,
                                       std::size_t cap, std::string name,
                                       std::vector<std::string> variables) {
  if (generators.empty()) throw Error("at least one generator is required");
  if (conductor < 1) throw Error("conductor must be positive");
  const std::size_t n = generators[0].size();
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].size() != n) {
      throw DimensionMismatch("generator " + std::to_string(g) + " has the wrong dimension");
    }
    if (generators[g].determinant().is_zero()) {
      throw SingularGenerator("generator " + std::to_string(g) + " is singular");
    }
  }

  ReflectionGroup group;
  group.name_ = std::move(name);
  group.nvars_ = n;
  if (variables.empty()) {
    for (std::size_t k = 0; k < n; ++k) variables.push_back("x" + std::to_string(k + 1));
  }
  if (variables.size() != n) throw DimensionMismatch("variable count differs from dimension");
  group.variables_ = std::move(variables);
  group.conductor_ = conductor;

  std::map<Matrix, ElementId> index;
  std::vector<std::vector<ElementId>> right_gen;  // right_gen[a][g] = a * gen_g
  std::vector<std::pair<ElementId, std::size_t>> parent;  // a = parent * gen
  auto insert = [&](Matrix m, ElementId from, std::size_t gen) {
    auto [it, inserted] = index.try_emplace(m, group.elements_.size());
    if (inserted) {
      if (group.elements_.size() >= cap) {
        throw CapExceeded("group closure exceeded the cap of " + std::to_string(cap) +
                          " elements");
      }
      group.elements_.push_back(std::move(m));
      parent.emplace_back(from, gen);
    }
    return it->second;
  };
  insert(Matrix::identity(n), 0, 0);
  for (ElementId a = 0; a < group.elements_.size(); ++a) {
    std::vector<ElementId> row;
    for (std::size_t g = 0; g < generators.size(); ++g) {
      row.push_back(insert(group.elements_[a] * generators[g], a, g));
    }
    right_gen.push_back(std::move(row));
  }

  const std::size_t size = group.elements_.size();
  for (const auto& g : generators) group.generator_ids_.push_back(index.at(g));

  // a * b = (a * parent(b)) * gen(b), filled in BFS order of b.
  group.mult_.assign(size * size, 0);
  for (ElementId a = 0; a < size; ++a) {
    group.mult_[a * size] = static_cast<std::uint32_t>(a);
    for (ElementId b = 1; b < size; ++b) {
      const auto [pb, gb] = parent[b];
      group.mult_[a * size + b] =
          static_cast<std::uint32_t>(right_gen[group.mult_[a * size + pb]][gb]);
    }
  }
  group.inverse_.assign(size, 0);
  for (ElementId a = 0; a < size; ++a) {
    for (ElementId b = 0; b < size; ++b) {
      if (group.mult_[a * size + b] == 0) {
        group.inverse_[a] = b;
        break;
      }
    }
  }
  group.orders_.assign(size, 1);
  for (ElementId a = 0; a < size; ++a) {
    ElementId p = a;
    int k = 1;
    while (p != 0) {
      p = group.multiply(p, a);
      ++k;
    }
    group.orders_[a] = k;
  }
  group.action_images_.reserve(size);
  for (ElementId a = 0; a < size; ++a) {
    group.action_images_.push_back(linear_substitution_images(group.elements_[group.inverse_[a]]));
  }

  group.scan_reflections();
  group.warm_coroot_cache();
  return group;
}

ElementId ReflectionGroup::power(ElementId a, long k) const {
  const long ord = orders_[a];
  long r = k % ord;
  if (r < 0) r += ord;
  ElementId p = identity();
  for (long i = 0; i < r; ++i) p = multiply(p, a);
  return p;
}

std::optional<ElementId> ReflectionGroup::find(const Matrix& m) const {
  for (ElementId a = 0; a < size(); ++a) {
    if (elements_[a] == m) return a;
  }
  return std::nullopt;
}

ReflectionScan scan_pseudo_reflections(const ReflectionGroup& group) {
  ReflectionScan scan;
  const std::size_t n = group.nvars();
  const Matrix id = Matrix::identity(n);
  std::map<LinearForm, std::size_t> hyperplanes;
  for (ElementId x = 0; x < group.size(); ++x) {
    const Matrix& s = group.matrix(x);
    const Matrix diff = s - id;
    if (diff.rank() != 1) continue;
    std::vector<CycNum> row;
    for (std::size_t i = 0; i < n && row.empty(); ++i) {
      bool nonzero = false;
      for (std::size_t j = 0; j < n; ++j) nonzero = nonzero || !diff(i, j).is_zero();
      if (nonzero) {
        for (std::size_t j = 0; j < n; ++j) row.push_back(diff(i, j));
      }
    }
    auto coroot = LinearForm::normalize(row)->second;
    // s . l has coefficient row c * s^{-1}.
    const Vector moved = group.matrix(group.inverse(x)).left_apply(coroot.coeffs());
    const CycNum lambda = moved[coroot.pivot()];
    for (std::size_t j = 0; j < n; ++j) {
      if (moved[j] != lambda * coroot.coeffs()[j]) {
        throw Error("co-root is not an eigenvector of its pseudo-reflection");
      }
    }
    auto [it, inserted] = hyperplanes.try_emplace(coroot, hyperplanes.size());
    scan.reflections.push_back(
        PseudoReflection{x, group.order(x), std::move(coroot), lambda, it->second});
  }

  // Subgroup generated by s(W), by closing under right multiplication.
  std::vector<bool> seen(group.size(), false);
  std::deque<ElementId> queue{group.identity()};
  seen[group.identity()] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const ElementId a = queue.front();
    queue.pop_front();
    for (const auto& s : scan.reflections) {
      const ElementId b = group.multiply(a, s.element);
      if (!seen[b]) {
        seen[b] = true;
        ++reached;
        queue.push_back(b);
      }
    }
  }
  scan.generates = reached == group.size();
  return scan;
}

void ReflectionGroup::scan_reflections() {
  ReflectionScan scan = scan_pseudo_reflections(*this);
  reflections_ = std::move(scan.reflections);
  generated_by_reflections_ = scan.generates;
  reflection_index_.assign(size(), std::nullopt);
  hyperplane_count_ = 0;
  for (ReflectionId r = 0; r < reflections_.size(); ++r) {
    reflection_index_[reflections_[r].element] = r;
    hyperplane_count_ = std::max(hyperplane_count_, reflections_[r].hyperplane_id + 1);
  }
  for (const auto& s : reflections_) {
    CycNum acc(1L);
    for (int k = 1; k <= s.order; ++k) {
      acc *= s.eigenvalue;
      if (acc.is_one() != (k == s.order)) {
        throw Error("eigenvalue order differs from the pseudo-reflection order");
      }
    }
  }
}

void ReflectionGroup::warm_coroot_cache() {
  const std::size_t nr = reflections_.size();
  coroot_scales_.assign(size() * nr, CycNum());
  coroot_divider_ids_.assign(size() * nr, 0);
  std::map<LinearForm, std::size_t> known;
  for (ElementId x = 0; x < size(); ++x) {
    for (ReflectionId r = 0; r < nr; ++r) {
      const MultiPoly image = act(x, reflections_[r].coroot.to_poly());
      auto [scale, form] = *LinearForm::from_poly(image);
      auto [it, inserted] = known.try_emplace(form, dividers_.size());
      if (inserted) dividers_.emplace_back(form);
      coroot_scales_[x * nr + r] = scale;
      coroot_divider_ids_[x * nr + r] = it->second;
    }
  }
}

MultiPoly ReflectionGroup::act(ElementId x, const MultiPoly& f) const {
  if (f.nvars() != nvars_) throw DimensionMismatch("polynomial nvars does not match the group");
  if (x == identity()) return f;
  return f.substitute(action_images_[x]);
}

const CycNum& ReflectionGroup::coroot_scale(ElementId x, ReflectionId r) const {
  return coroot_scales_[x * reflections_.size() + r];
}

const LinearDivider& ReflectionGroup::coroot_divider(ElementId x, ReflectionId r) const {
  return dividers_[coroot_divider_ids_[x * reflections_.size() + r]];
}

MultiPoly ReflectionGroup::coroot_image(ElementId x, ReflectionId r) const {
  return coroot_scale(x, r) * coroot_divider(x, r).form().to_poly();
}

std::vector<ElementId> ReflectionGroup::coset(ElementId x, ReflectionId r) const {
  const PseudoReflection& s = reflections_[r];
  std::vector<ElementId> out;
  ElementId p = x;
  for (int j = 0; j < s.order; ++j) {
    out.push_back(p);
    p = multiply(p, s.element);
  }
  return out;
}

std::vector<ElementId> ReflectionGroup::coset_representatives(ReflectionId r) const {
  std::vector<bool> covered(size(), false);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < size(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (ElementId y : coset(x, r)) covered[y] = true;
  }
  return reps;
}

std::pair<ReflectionId, CycNum> ReflectionGroup::conjugate_reflection(ElementId w,
                                                                      ReflectionId r) const {
  const ElementId t = multiply(multiply(w, reflections_[r].element), inverse(w));
  const auto tr = reflection_index_[t];
  if (!tr) throw Error("conjugate of a pseudo-reflection is not a pseudo-reflection");
  if (!(coroot_divider(w, r).form() == reflections_[*tr].coroot)) {
    throw Error("w(l_s) is not proportional to the conjugate co-root");
  }
  return {*tr, coroot_scale(w, r)};
}

std::vector<Rational> molien_coefficients(const ReflectionGroup& group, int upto) {
  // det(1 - t w) is a class function; sum equal polynomials once.
  std::map<std::vector<CycNum>, long> dets;
  for (ElementId x = 0; x < group.size(); ++x) ++dets[det_one_minus_t(group.matrix(x))];
  std::vector<CycNum> sum(static_cast<std::size_t>(upto) + 1);
  for (const auto& [d, count] : dets) {
    const auto s = invert_series(d, upto);
    for (std::size_t k = 0; k < s.size(); ++k) sum[k] += CycNum(count) * s[k];
  }
  std::vector<Rational> out;
  const Rational inv_order(1, static_cast<long>(group.size()));
  for (const auto& c : sum) {
    if (!c.is_rational()) throw Error("Molien coefficient is not rational");
    out.push_back(c.rational_part() * inv_order);
  }
  return out;
}

MolienSeries molien_series(const ReflectionGroup& group) {
  const long order = static_cast<long>(group.size());
  const long n = static_cast<long>(group.nvars());
  // sum d_i <= |W| + n - 1, so this prefix decides equality of the two
  // rational functions.
  const int bound = static_cast<int>(n * order + order + n);
  MolienSeries result;
  result.coefficients = molien_coefficients(group, bound);
  std::vector<Rational> rest = result.coefficients;
  for (long factor = 0; factor < n; ++factor) {
    std::size_t k = 1;
    while (k < rest.size() && rest[k] == 0) ++k;
    if (k == rest.size() || rest[k] < 0 || rest[k].get_den() != 1) {
      throw NotPolynomialInvariantRing("Molien series is not a product of 1/(1 - t^d) factors");
    }
    result.degrees.push_back(static_cast<int>(k));
    for (std::size_t j = rest.size(); j-- > k;) rest[j] -= rest[j - k];
  }
  for (std::size_t j = 1; j < rest.size(); ++j) {
    if (rest[j] != 0) {
      throw NotPolynomialInvariantRing("Molien series is not a product of 1/(1 - t^d) factors");
    }
  }
  std::sort(result.degrees.begin(), result.degrees.end());
  long product = 1;
  for (int d : result.degrees) product *= d;
  if (group.generated_by_reflections() && product != order) {
    throw NotPolynomialInvariantRing("product of degrees differs from |W|");
  }
  return result;
}

std::vector<long> coinvariant_hilbert(const std::vector<int>& degrees) {
  std::vector<long> poly{1};
  for (int d : degrees) {
    std::vector<long> next(poly.size() + static_cast<std::size_t>(d) - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      for (int j = 0; j < d; ++j) next[i + static_cast<std::size_t>(j)] += poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

std::vector<long> equivariant_hilbert(const std::vector<int>& degrees, std::size_t nvars,
                                      int upto) {
  std::vector<long> series = coinvariant_hilbert(degrees);
  series.resize(static_cast<std::size_t>(upto) + 1, 0);
  for (std::size_t v = 0; v < nvars; ++v) {
    // multiply by 1/(1 - t): prefix sums
    for (std::size_t k = 1; k < series.size(); ++k) series[k] += series[k - 1];
  }
  return series;
}

}  // namespace rgkm
