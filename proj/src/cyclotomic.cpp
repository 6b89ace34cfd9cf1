#include "rgkm/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <shared_mutex>
#include <sstream>

#include "rgkm/errors.hpp"

namespace rgkm {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo the monic integer polynomial `mod`.
void reduce_in_place(RatPoly& p, const std::vector<long>& mod) {
  const std::size_t deg = mod.size() - 1;
  for (std::size_t top = p.size(); top-- > deg;) {
    if (p[top] == 0) continue;
    const Rational c = p[top];
    const std::size_t shift = top - deg;
    for (std::size_t k = 0; k < deg; ++k) {
      if (mod[k] != 0) p[shift + k] -= c * mod[k];
    }
    p[top] = 0;
  }
  p.resize(deg);
}

// Rational polynomial division; returns quotient, leaves remainder in a.
RatPoly divmod(RatPoly& a, const RatPoly& b) {
  trim(a);
  RatPoly q;
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return q;
  q.assign(a.size() - db, 0);
  for (std::size_t top = a.size(); top-- > db;) {
    if (a[top] == 0) continue;
    const Rational c = a[top] / b[db];
    q[top - db] = c;
    for (std::size_t k = 0; k <= db; ++k) a[top - db + k] -= c * b[k];
  }
  a.resize(db);
  trim(a);
  return q;
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
  }
  trim(r);
  return r;
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

std::vector<long> compute_cyclotomic(int m) {
  // x^m - 1 divided by Phi_d for every proper divisor d of m.
  std::vector<long> num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<long> q(num.size() - dd, 0);
    for (std::size_t top = num.size(); top-- > dd;) {
      const long c = num[top];
      if (c == 0) continue;
      q[top - dd] = c;
      for (std::size_t k = 0; k <= dd; ++k) num[top - dd + k] -= c * den[k];
    }
    num = std::move(q);
  }
  return num;
}

std::string rational_string(const Rational& q) { return q.get_str(); }

}  // namespace

int euler_phi(int m) {
  if (m < 1) throw Error("euler_phi: conductor must be positive");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long>& cyclotomic_polynomial(int m) {
  if (m < 1) throw Error("cyclotomic_polynomial: conductor must be positive");
  static std::shared_mutex mutex;
  static std::map<int, std::unique_ptr<std::vector<long>>> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
  }
  auto value = std::make_unique<std::vector<long>>(compute_cyclotomic(m));
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.try_emplace(m, std::move(value));
  return *it->second;
}

CycNum::CycNum() : conductor_(1), coeffs_{Rational(0)} {}

CycNum::CycNum(long value) : conductor_(1), coeffs_{Rational(value)} {}

CycNum::CycNum(const Rational& value) : conductor_(1), coeffs_{value} {
  coeffs_[0].canonicalize();
}

CycNum::CycNum(int m, std::vector<Rational> coeffs)
    : conductor_(m), coeffs_(std::move(coeffs)) {}

CycNum CycNum::make(int m, std::span<const Rational> coeffs) {
  if (m < 1) throw Error("CycNum: conductor must be positive");
  if (coeffs.size() > static_cast<std::size_t>(m)) {
    throw Error("CycNum: coefficient vector longer than the conductor");
  }
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  RatPoly p(coeffs.begin(), coeffs.end());
  if (p.size() < deg) p.resize(deg, 0);
  reduce_in_place(p, phi);
  for (auto& c : p) c.canonicalize();
  return CycNum(m, std::move(p));
}

CycNum CycNum::make(int m, std::initializer_list<Rational> coeffs) {
  return make(m, std::span<const Rational>(coeffs.begin(), coeffs.size()));
}

CycNum CycNum::root_of_unity(int m, long k) {
  if (m < 1) throw Error("root_of_unity: conductor must be positive");
  long r = k % m;
  if (r < 0) r += m;
  RatPoly p(static_cast<std::size_t>(r) + 1, 0);
  p[static_cast<std::size_t>(r)] = 1;
  return make(m, p);
}

bool CycNum::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool CycNum::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool CycNum::is_one() const { return is_rational() && coeffs_[0] == 1; }

CycNum CycNum::embed(int m) const {
  if (m == conductor_) return *this;
  if (is_rational()) {
    RatPoly p(static_cast<std::size_t>(euler_phi(m)), 0);
    p[0] = coeffs_[0];
    return CycNum(m, std::move(p));
  }
  if (m % conductor_ != 0) {
    throw ConductorMismatch("cannot embed Q(zeta_" + std::to_string(conductor_) +
                            ") into Q(zeta_" + std::to_string(m) + ")");
  }
  const std::size_t step = static_cast<std::size_t>(m / conductor_);
  RatPoly p(coeffs_.size() * step, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) p[k * step] = coeffs_[k];
  if (p.size() > static_cast<std::size_t>(m)) p.resize(static_cast<std::size_t>(m));
  return make(m, p);
}

CycNum CycNum::with_minimal_conductor() const {
  if (is_rational()) return CycNum(coeffs_[0]);
  std::vector<int> divisors;
  for (int d = 1; d <= conductor_; ++d) {
    if (conductor_ % d == 0) divisors.push_back(d);
  }
  const std::size_t dim = coeffs_.size();
  for (int d : divisors) {
    if (d == conductor_) break;
    // Solve sum_k a_k * embed(zeta_d^k) = *this for a in Q^phi(d).
    const std::size_t unknowns = static_cast<std::size_t>(euler_phi(d));
    std::vector<std::vector<Rational>> rows(dim, std::vector<Rational>(unknowns + 1));
    for (std::size_t k = 0; k < unknowns; ++k) {
      const CycNum basis = root_of_unity(d, static_cast<long>(k)).embed(conductor_);
      for (std::size_t r = 0; r < dim; ++r) rows[r][k] = basis.coeffs_[r];
    }
    for (std::size_t r = 0; r < dim; ++r) rows[r][unknowns] = coeffs_[r];
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < unknowns && pivot_row < dim; ++col) {
      std::size_t sel = pivot_row;
      while (sel < dim && rows[sel][col] == 0) ++sel;
      if (sel == dim) continue;
      std::swap(rows[sel], rows[pivot_row]);
      const Rational inv = 1 / rows[pivot_row][col];
      for (auto& v : rows[pivot_row]) v *= inv;
      for (std::size_t r = 0; r < dim; ++r) {
        if (r == pivot_row || rows[r][col] == 0) continue;
        const Rational f = rows[r][col];
        for (std::size_t c = 0; c <= unknowns; ++c) rows[r][c] -= f * rows[pivot_row][c];
      }
      pivots.push_back(col);
      ++pivot_row;
    }
    bool consistent = true;
    for (std::size_t r = pivot_row; r < dim; ++r) {
      if (rows[r][unknowns] != 0) consistent = false;
    }
    if (!consistent) continue;
    RatPoly sol(unknowns, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) sol[pivots[r]] = rows[r][unknowns];
    return make(d, sol);
  }
  return *this;
}

int CycNum::common_conductor(const CycNum& other) const {
  if (conductor_ == other.conductor_) return conductor_;
  if (other.is_rational()) return conductor_;
  if (is_rational()) return other.conductor_;
  throw ConductorMismatch("conductor mismatch: " + std::to_string(conductor_) +
                          " vs " + std::to_string(other.conductor_));
}

void CycNum::unify(CycNum& other_copy) {
  const int m = common_conductor(other_copy);
  if (conductor_ != m) *this = embed(m);
  if (other_copy.conductor_ != m) other_copy = other_copy.embed(m);
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& other) {
  if (other.conductor_ == conductor_ || other.is_rational()) {
    if (other.conductor_ == conductor_) {
      for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    } else {
      coeffs_[0] += other.coeffs_[0];
    }
    return *this;
  }
  CycNum b = other;
  unify(b);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += b.coeffs_[k];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) { return *this += -other; }

CycNum& CycNum::operator*=(const CycNum& other) {
  if (other.is_rational()) {
    const Rational f = other.coeffs_[0];
    for (auto& c : coeffs_) c *= f;
    return *this;
  }
  if (is_rational()) {
    const Rational f = coeffs_[0];
    *this = other;
    for (auto& c : coeffs_) c *= f;
    return *this;
  }
  if (conductor_ != other.conductor_) common_conductor(other);  // throws
  const auto& phi = cyclotomic_polynomial(conductor_);
  RatPoly p = mul(coeffs_, other.coeffs_);
  const std::size_t deg = phi.size() - 1;
  if (p.size() < deg) p.resize(deg, 0);
  reduce_in_place(p, phi);
  coeffs_ = std::move(p);
  return *this;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero in Q(zeta_m)");
  if (is_rational()) {
    CycNum r = *this;
    r.coeffs_[0] = 1 / coeffs_[0];
    return r;
  }
  // Extended Euclid: find u with u * a == 1 mod Phi_m.
  const auto& phi_int = cyclotomic_polynomial(conductor_);
  RatPoly r0(phi_int.begin(), phi_int.end());
  RatPoly r1 = coeffs_;
  trim(r1);
  RatPoly s0;         // coefficient of a for r0
  RatPoly s1{1};      // coefficient of a for r1
  while (r1.size() > 1) {
    RatPoly rem = r0;
    RatPoly q = divmod(rem, r1);
    RatPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant because Phi_m is irreducible.
  const Rational c = 1 / r1[0];
  for (auto& v : s1) v *= c;
  return make(conductor_, s1);
}

CycNum& CycNum::operator/=(const CycNum& other) { return *this *= other.inverse(); }

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result(1L);
  result = result.embed(conductor_);
  CycNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const bool ra = a.is_rational();
  const bool rb = b.is_rational();
  if (ra && rb) return a.coeffs_[0] == b.coeffs_[0];
  if (ra || rb) return false;
  // Both irrational over different conductors: compare in a common field.
  const int m = std::lcm(a.conductor_, b.conductor_);
  return a.embed(m).coeffs_ == b.embed(m).coeffs_;
}

std::strong_ordering operator<=>(const CycNum& a, const CycNum& b) {
  const bool ra = a.is_rational();
  const bool rb = b.is_rational();
  if (ra && rb) {
    const int c = cmp(a.coeffs_[0], b.coeffs_[0]);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  if (ra != rb) return ra ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.conductor_ != b.conductor_) return a.conductor_ <=> b.conductor_;
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    const int c = cmp(a.coeffs_[k], b.coeffs_[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool CycNum::is_single_term() const {
  int nonzero = 0;
  for (const auto& c : coeffs_) {
    if (c != 0) ++nonzero;
  }
  return nonzero <= 1;
}

std::string CycNum::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << rational_string(mag);
      continue;
    }
    if (mag != 1) out << rational_string(mag) << '*';
    out << 'z';
    if (k > 1) out << '^' << k;
  }
  if (first) out << '0';
  return out.str();
}

std::size_t CycNum::hash() const {
  std::size_t h = is_rational() ? 0 : static_cast<std::size_t>(conductor_);
  const std::size_t upto = is_rational() ? 1 : coeffs_.size();
  for (std::size_t k = 0; k < upto; ++k) {
    const auto& q = coeffs_[k];
    h = h * 1000003u ^ std::hash<std::string>{}(q.get_str());
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const CycNum& value) {
  return os << value.to_string();
}

}  // namespace rgkm
