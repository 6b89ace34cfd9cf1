#include "rgkm/equivariant.hpp"

#include <map>

#include "rgkm/errors.hpp"
#include "rgkm/poly_text.hpp"

namespace rgkm {

WMap::WMap(const ReflectionGroup& group, std::vector<MultiPoly> values)
    : group_(&group), values_(std::move(values)) {
  if (values_.size() != group.size()) throw DimensionMismatch("a map needs one value per element");
  for (const auto& v : values_) {
    if (v.nvars() != group.nvars()) throw DimensionMismatch("map value has the wrong nvars");
  }
}

WMap WMap::constant(const ReflectionGroup& group, const MultiPoly& value) {
  return WMap(group, std::vector<MultiPoly>(group.size(), value));
}

WMap WMap::constant(const ReflectionGroup& group, const CycNum& value) {
  return constant(group, MultiPoly::constant(group.nvars(), value));
}

WMap WMap::zero(const ReflectionGroup& group) { return constant(group, MultiPoly(group.nvars())); }

bool WMap::is_zero() const {
  for (const auto& v : values_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

std::optional<int> WMap::homogeneous_degree() const {
  std::optional<int> degree;
  for (const auto& v : values_) {
    if (v.is_zero()) continue;
    if (!v.is_homogeneous()) return std::nullopt;
    if (degree && *degree != *v.degree()) return std::nullopt;
    degree = v.degree();
  }
  return degree;
}

WMap WMap::act(ElementId w) const {
  const ElementId w_inv = group_->inverse(w);
  std::vector<MultiPoly> out;
  out.reserve(values_.size());
  for (ElementId x = 0; x < values_.size(); ++x) out.push_back(values_[group_->multiply(x, w_inv)]);
  return WMap(*group_, std::move(out));
}

void WMap::check_group(const WMap& other) const {
  if (group_ != other.group_) throw DimensionMismatch("maps belong to different groups");
}

WMap WMap::operator-() const {
  WMap out = *this;
  for (auto& v : out.values_) v = -v;
  return out;
}

WMap& WMap::operator+=(const WMap& other) {
  check_group(other);
  for (std::size_t x = 0; x < values_.size(); ++x) values_[x] += other.values_[x];
  return *this;
}

WMap& WMap::operator-=(const WMap& other) {
  check_group(other);
  for (std::size_t x = 0; x < values_.size(); ++x) values_[x] -= other.values_[x];
  return *this;
}

WMap& WMap::operator*=(const WMap& other) {
  check_group(other);
  for (std::size_t x = 0; x < values_.size(); ++x) values_[x] *= other.values_[x];
  return *this;
}

WMap& WMap::operator*=(const CycNum& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

WMap& WMap::operator*=(const MultiPoly& f) {
  for (auto& v : values_) v *= f;
  return *this;
}

bool operator==(const WMap& a, const WMap& b) {
  return a.group_ == b.group_ && a.values_ == b.values_;
}

WMap coroot_map(const ReflectionGroup& group, ReflectionId r, const CycNum& scale) {
  std::vector<MultiPoly> values;
  values.reserve(group.size());
  for (ElementId x = 0; x < group.size(); ++x) values.push_back(scale * group.coroot_image(x, r));
  return WMap(group, std::move(values));
}

MultiPoly delta_numerator(const ReflectionGroup& group, ReflectionId r, int i,
                          const MultiPoly& f) {
  const PseudoReflection& s = group.reflection(r);
  const CycNum step = s.eigenvalue.pow(-static_cast<long>(i));
  MultiPoly sum(f.nvars());
  CycNum weight(1L);
  ElementId p = group.identity();
  for (int j = 0; j < s.order; ++j) {
    sum += weight * group.act(p, f);
    weight *= step;
    p = group.multiply(p, s.element);
  }
  return sum;
}

DivisionResult op_delta(const ReflectionGroup& group, ReflectionId r, int i, const MultiPoly& f) {
  DivisionResult out =
      group.coroot_divider(group.identity(), r).divide(delta_numerator(group, r, i, f), i);
  if (!out.ok() && i <= group.reflection(r).order - 1) {
    throw InvariantViolation("generalized Delta-operator left R for i = " + std::to_string(i) +
                             ", witness " + format_poly(out.witness(), group.variables()));
  }
  return out;
}

MultiPoly operator_numerator(const WMap& f, ReflectionId r, int i, ElementId x) {
  const ReflectionGroup& group = f.group();
  const PseudoReflection& s = group.reflection(r);
  const CycNum step = s.eigenvalue.pow(-static_cast<long>(i));
  MultiPoly sum(group.nvars());
  CycNum weight(1L);
  ElementId p = x;
  for (int j = 0; j < s.order; ++j) {
    sum += weight * f[p];
    weight *= step;
    p = group.multiply(p, s.element);
  }
  return sum;
}

OperatorResult op_A(const WMap& f, ReflectionId r, int i, const CycNum& scale) {
  const ReflectionGroup& group = f.group();
  OperatorResult out;
  std::vector<MultiPoly> values(group.size(), MultiPoly(group.nvars()));
  for (ElementId x : group.coset_representatives(r)) {
    DivisionResult d =
        group.coroot_divider(x, r).divide(operator_numerator(f, r, i, x), i);
    if (!d.ok()) {
      out.failures.push_back(MembershipFailure{x, r, i, d.witness()});
      continue;
    }
    const MultiPoly value = d.quotient() * (scale * group.coroot_scale(x, r)).pow(-i);
    for (ElementId y : group.coset(x, r)) values[y] = value;
  }
  if (out.failures.empty()) out.value = WMap(group, std::move(values));
  return out;
}

WMap op_A_exact(const WMap& f, ReflectionId r, int i) {
  OperatorResult res = op_A(f, r, i);
  if (!res.ok()) {
    throw InvariantViolation("operator A_s left Maps(W, R) for i = " + std::to_string(i));
  }
  return std::move(*res.value);
}

MembershipCertificate hw_member(const WMap& f, bool stop_early) {
  const ReflectionGroup& group = f.group();
  MembershipCertificate cert;
  for (ReflectionId r = 0; r < group.reflections().size(); ++r) {
    const auto reps = group.coset_representatives(r);
    for (int i = 1; i < group.reflection(r).order; ++i) {
      for (ElementId x : reps) {
        DivisionResult d = group.coroot_divider(x, r).divide(operator_numerator(f, r, i, x), i);
        if (d.ok()) continue;
        cert.ok = false;
        cert.failures.push_back(MembershipFailure{x, r, i, d.witness()});
        if (stop_early) return cert;
      }
    }
  }
  return cert;
}

Vector map_coordinates(const WMap& f, const DegreeSpace& space) {
  Vector v;
  v.reserve(f.size() * space.dimension());
  for (const auto& value : f.values()) {
    const Vector c = space.coordinates(value);
    v.insert(v.end(), c.begin(), c.end());
  }
  return v;
}

WMap map_from_coordinates(const ReflectionGroup& group, const DegreeSpace& space,
                          const Vector& v) {
  const std::size_t m = space.dimension();
  std::vector<MultiPoly> values;
  for (ElementId x = 0; x < group.size(); ++x) {
    values.push_back(space.polynomial(Vector(v.begin() + static_cast<long>(x * m),
                                             v.begin() + static_cast<long>((x + 1) * m))));
  }
  return WMap(group, std::move(values));
}

namespace {

// Rows of the homogeneous system cutting out (H_W)_d.
std::vector<Vector> hw_conditions(const ReflectionGroup& group, const DegreeSpace& space) {
  const std::size_t m = space.dimension();
  const std::size_t ncols = group.size() * m;
  std::map<const LinearDivider*, std::vector<MultiPoly>> adapted;
  auto adapted_monomials = [&](const LinearDivider& d) -> const std::vector<MultiPoly>& {
    auto [it, inserted] = adapted.try_emplace(&d);
    if (inserted) {
      for (const auto& mono : space.monomials()) {
        it->second.push_back(d.to_adapted(MultiPoly::term(mono, CycNum(1L))));
      }
    }
    return it->second;
  };

  std::vector<Vector> rows;
  for (ReflectionId r = 0; r < group.reflections().size(); ++r) {
    const PseudoReflection& s = group.reflection(r);
    const auto reps = group.coset_representatives(r);
    for (int i = 1; i < s.order; ++i) {
      if (space.degree() < 0) break;
      const CycNum step = s.eigenvalue.pow(-static_cast<long>(i));
      for (ElementId x : reps) {
        const auto& images = adapted_monomials(group.coroot_divider(x, r));
        std::map<Monomial, Vector, GrlexDescending> low;
        CycNum weight(1L);
        ElementId p = x;
        for (int j = 0; j < s.order; ++j) {
          for (std::size_t k = 0; k < m; ++k) {
            for (const auto& [mono, c] : images[k].terms()) {
              if (mono.exps[0] >= i) continue;
              auto [it, inserted] = low.try_emplace(mono);
              if (inserted) it->second.assign(ncols, CycNum());
              it->second[p * m + k] += weight * c;
            }
          }
          weight *= step;
          p = group.multiply(p, s.element);
        }
        for (auto& [mono, row] : low) rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace

MapBasis hw_graded_basis(const ReflectionGroup& group, int degree) {
  const DegreeSpace space(group.nvars(), degree);
  MapBasis basis{degree, {}};
  for (const auto& v : nullspace(hw_conditions(group, space), group.size() * space.dimension())) {
    basis.vectors.push_back(map_from_coordinates(group, space, v));
  }
  return basis;
}

std::size_t hw_graded_dim(const ReflectionGroup& group, int degree) {
  const DegreeSpace space(group.nvars(), degree);
  const std::size_t ncols = group.size() * space.dimension();
  return ncols - rank_of(hw_conditions(group, space), ncols);
}

std::vector<WMap> decompose_along_s(const WMap& f, ReflectionId r) {
  const MembershipCertificate cert = hw_member(f, true);
  if (!cert.ok) {
    const auto& bad = cert.failures.front();
    throw PreconditionViolation(
        "map is not in H_W: condition (element " + std::to_string(bad.rep) + ", reflection " +
        std::to_string(bad.reflection) + ", i = " + std::to_string(bad.exponent) +
        ") fails with witness " + format_poly(bad.witness, f.group().variables()));
  }
  std::vector<WMap> out;
  for (int j = 0; j < f.group().reflection(r).order; ++j) out.push_back(op_A_exact(f, r, j));
  return out;
}

WMap recompose_along_s(const std::vector<WMap>& components, ReflectionId r) {
  if (components.empty()) throw PreconditionViolation("no components");
  const ReflectionGroup& group = components.front().group();
  const WMap l = coroot_map(group, r);
  WMap sum = WMap::zero(group);
  WMap power = WMap::constant(group, CycNum(1L));
  for (const auto& c : components) {
    sum += c * power;
    power *= l;
  }
  return sum * CycNum(Rational(1, static_cast<long>(components.size())));
}

}  // namespace rgkm
