#include "rgkm/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "rgkm/errors.hpp"

namespace rgkm {

int Monomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t k = 0; k < exps.size(); ++k) r.exps[k] += other.exps[k];
  return r;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db;
  return b.exps < a.exps;
}

namespace {

void enumerate(std::size_t nvars, std::size_t k, int remaining, std::vector<int>& cur,
               std::vector<Monomial>& out) {
  if (k + 1 == nvars) {
    cur[k] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[k] = e;
    enumerate(nvars, k + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<Monomial> graded_monomials(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(nvars, 0);
  enumerate(nvars, 0, degree, cur, out);
  return out;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const CycNum& c) {
  MultiPoly p(nvars);
  p.add_term(Monomial::one(nvars), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t k) {
  if (k >= nvars) throw DimensionMismatch("variable index out of range");
  Monomial m = Monomial::one(nvars);
  m.exps[k] = 1;
  return term(m, CycNum(1L));
}

MultiPoly MultiPoly::term(const Monomial& m, const CycNum& c) {
  MultiPoly p(m.exps.size());
  p.add_term(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

std::optional<int> MultiPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.degree();
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

MultiPoly MultiPoly::homogeneous_component(int d) const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == d) r.terms_.emplace_hint(r.terms_.end(), m, c);
  }
  return r;
}

CycNum MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CycNum() : it->second;
}

void MultiPoly::add_term(const Monomial& m, const CycNum& c) {
  if (m.exps.size() != nvars_) throw DimensionMismatch("monomial has wrong number of variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void MultiPoly::check_nvars(const MultiPoly& other) const {
  if (other.nvars_ != nvars_) {
    throw DimensionMismatch("polynomials have different numbers of variables (" +
                            std::to_string(nvars_) + " vs " + std::to_string(other.nvars_) +
                            ")");
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_nvars(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_nvars(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const CycNum& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  check_nvars(other);
  MultiPoly r(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw Error("negative polynomial power");
  MultiPoly result = constant(nvars_, CycNum(1L));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != nvars_) throw DimensionMismatch("substitution needs one image per variable");
  const std::size_t out_vars = images.empty() ? 0 : images[0].nvars();
  for (const auto& img : images) {
    if (img.nvars() != out_vars) throw DimensionMismatch("substitution images disagree on nvars");
  }
  MultiPoly r(out_vars);
  if (terms_.empty()) return r;

  const bool monomial_map = std::all_of(images.begin(), images.end(), [](const MultiPoly& p) {
    return p.size() == 1;
  });
  if (monomial_map) {
    for (const auto& [m, c] : terms_) {
      Monomial out = Monomial::one(out_vars);
      CycNum coeff = c;
      for (std::size_t k = 0; k < nvars_; ++k) {
        const int e = m.exps[k];
        if (e == 0) continue;
        const auto& [im, ic] = *images[k].terms().begin();
        for (std::size_t v = 0; v < out_vars; ++v) out.exps[v] += e * im.exps[v];
        coeff *= ic.pow(e);
      }
      r.add_term(out, coeff);
    }
    return r;
  }

  // powers[k][e] = images[k]^e, filled lazily.
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  auto power = [&](std::size_t k, int e) -> const MultiPoly& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(constant(out_vars, CycNum(1L)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[k]);
    return cache[static_cast<std::size_t>(e)];
  };
  for (const auto& [m, c] : terms_) {
    MultiPoly prod = constant(out_vars, c);
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (m.exps[k] > 0) prod = prod * power(k, m.exps[k]);
    }
    r += prod;
  }
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::optional<std::pair<CycNum, LinearForm>> LinearForm::normalize(std::vector<CycNum> coeffs) {
  std::size_t pivot = 0;
  while (pivot < coeffs.size() && coeffs[pivot].is_zero()) ++pivot;
  if (pivot == coeffs.size()) return std::nullopt;
  const CycNum scale = coeffs[pivot];
  const CycNum inv = scale.inverse();
  for (auto& c : coeffs) c *= inv;
  return std::make_pair(scale, LinearForm(std::move(coeffs), pivot));
}

std::optional<std::pair<CycNum, LinearForm>> LinearForm::from_poly(const MultiPoly& p) {
  if (p.is_zero() || p.degree() != 1 || !p.is_homogeneous()) return std::nullopt;
  std::vector<CycNum> coeffs(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t k = 0; k < m.exps.size(); ++k) {
      if (m.exps[k] == 1) coeffs[k] = c;
    }
  }
  return normalize(std::move(coeffs));
}

MultiPoly LinearForm::to_poly() const {
  MultiPoly p(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    Monomial m = Monomial::one(coeffs_.size());
    m.exps[k] = 1;
    p.add_term(m, coeffs_[k]);
  }
  return p;
}

std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b) {
  return std::lexicographical_compare_three_way(a.coeffs_.begin(), a.coeffs_.end(),
                                                b.coeffs_.begin(), b.coeffs_.end());
}

std::vector<MultiPoly> linear_substitution_images(const Matrix& w_inverse) {
  const std::size_t n = w_inverse.size();
  std::vector<MultiPoly> images;
  images.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    MultiPoly img(n);
    for (std::size_t j = 0; j < n; ++j) {
      Monomial m = Monomial::one(n);
      m.exps[j] = 1;
      img.add_term(m, w_inverse(k, j));
    }
    images.push_back(std::move(img));
  }
  return images;
}

MultiPoly apply_linear(const Matrix& w, const MultiPoly& f) {
  if (w.size() != f.nvars()) throw DimensionMismatch("matrix size does not match nvars");
  const auto images = linear_substitution_images(w.inverse());
  return f.substitute(images);
}

const MultiPoly& DivisionResult::quotient() const {
  if (!quotient_) throw PreconditionViolation("division was not exact");
  return *quotient_;
}

LinearDivider::LinearDivider(LinearForm form) : form_(std::move(form)) {
  const std::size_t n = form_.nvars();
  const std::size_t p = form_.pivot();
  coordinate_ = true;
  for (std::size_t k = 0; k < n; ++k) {
    if (k != p && !form_.coeffs()[k].is_zero()) coordinate_ = false;
  }
  // Adapted coordinates: y_0 = form, then the x_k with k != pivot in order.
  std::vector<std::size_t> slot(n, 0);
  for (std::size_t k = 0, next = 1; k < n; ++k) {
    if (k != p) slot[k] = next++;
  }
  forward_.assign(n, MultiPoly(n));
  backward_.assign(n, MultiPoly(n));
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p) continue;
    forward_[k] = MultiPoly::variable(n, slot[k]);
    backward_[slot[k]] = MultiPoly::variable(n, k);
  }
  // x_p = y_0 - sum_{k != p} c_k y_slot(k)
  MultiPoly xp = MultiPoly::variable(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || form_.coeffs()[k].is_zero()) continue;
    xp -= form_.coeffs()[k] * MultiPoly::variable(n, slot[k]);
  }
  forward_[p] = std::move(xp);
  backward_[0] = form_.to_poly();
}

MultiPoly LinearDivider::to_adapted(const MultiPoly& f) const { return f.substitute(forward_); }

MultiPoly LinearDivider::from_adapted(const MultiPoly& g) const { return g.substitute(backward_); }

DivisionResult LinearDivider::divide(const MultiPoly& f, int i) const {
  if (f.nvars() != form_.nvars()) throw DimensionMismatch("divisor and dividend nvars differ");
  if (i <= 0) return DivisionResult::success(f * form_.to_poly().pow(-i));
  const std::size_t n = form_.nvars();
  if (coordinate_) {
    const std::size_t p = form_.pivot();
    MultiPoly q(n);
    MultiPoly low(n);
    for (const auto& [m, c] : f.terms()) {
      if (m.exps[p] >= i) {
        Monomial shifted = m;
        shifted.exps[p] -= i;
        q.add_term(shifted, c);
      } else {
        low.add_term(m, c);
      }
    }
    if (!low.is_zero()) return DivisionResult::failure(std::move(low));
    return DivisionResult::success(std::move(q));
  }
  const MultiPoly g = to_adapted(f);
  MultiPoly q(n);
  MultiPoly low(n);
  for (const auto& [m, c] : g.terms()) {
    if (m.exps[0] >= i) {
      Monomial shifted = m;
      shifted.exps[0] -= i;
      q.add_term(shifted, c);
    } else {
      low.add_term(m, c);
    }
  }
  if (!low.is_zero()) return DivisionResult::failure(from_adapted(low));
  return DivisionResult::success(from_adapted(q));
}

DivisionResult divide_exact_by_linear_power(const MultiPoly& f, const LinearForm& form, int i) {
  return LinearDivider(form).divide(f, i);
}

}  // namespace rgkm
