#include "rgkm/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "rgkm/errors.hpp"
#include "rgkm/poly_text.hpp"

namespace rgkm {

Hypergraph build_hypergraph(const ReflectionGroup& group) {
  Hypergraph graph;
  graph.by_vertex.assign(group.size(), {});
  std::set<std::pair<std::vector<ElementId>, std::size_t>> seen;
  for (ReflectionId r = 0; r < group.reflections().size(); ++r) {
    const PseudoReflection& s = group.reflection(r);
    for (ElementId x : group.coset_representatives(r)) {
      std::vector<ElementId> members = group.coset(x, r);
      std::vector<ElementId> key = members;
      std::sort(key.begin(), key.end());
      if (!seen.emplace(std::move(key), s.hyperplane_id).second) continue;
      HyperEdge edge{r, x, members, s.hyperplane_id, group.coroot_divider(x, r).form(), {}};
      CycNum t = group.coroot_scale(x, r);
      for (int j = 0; j < s.order; ++j) {
        edge.tau.push_back(t);
        t *= s.eigenvalue;
      }
      for (ElementId y : members) graph.by_vertex[y].push_back(graph.edges.size());
      graph.edges.push_back(std::move(edge));
    }
  }
  return graph;
}

EdgeSolution edge_member_vandermonde(const ReflectionGroup& group, const HyperEdge& edge,
                                     const std::vector<MultiPoly>& values) {
  const std::size_t m = edge.members.size();
  if (values.size() != m) throw DimensionMismatch("one value per hyperedge vertex is required");
  Matrix v(m);
  for (std::size_t j = 0; j < m; ++j) {
    CycNum p(1L);
    for (std::size_t i = 0; i < m; ++i) {
      v(j, i) = p;
      p *= edge.tau[j];
    }
  }
  const Matrix inv = v.inverse();
  const LinearDivider& divider = group.coroot_divider(edge.rep, edge.reflection);
  EdgeSolution out;
  for (std::size_t i = 0; i < m; ++i) {
    MultiPoly h(group.nvars());
    for (std::size_t j = 0; j < m; ++j) {
      if (!inv(i, j).is_zero()) h += inv(i, j) * values[j];
    }
    DivisionResult d = divider.divide(h, static_cast<int>(i));
    if (!d.ok()) {
      out.failing_index = i;
      out.witness = d.witness();
      out.coefficients.clear();
      return out;
    }
    out.coefficients.push_back(d.quotient());
  }
  out.ok = true;
  return out;
}

namespace {

MultiPoly times_form_power(const MultiPoly& f, const LinearForm& form, int e) {
  return e == 0 ? f : f * form.to_poly().pow(e);
}

}  // namespace

EdgeIntegral edge_integral(const WMap& f, const HyperEdge& edge, int k) {
  const ReflectionGroup& group = f.group();
  const std::size_t m = edge.members.size();
  const int order = static_cast<int>(m);
  const LinearForm& form = edge.axial;
  EdgeIntegral out;

  // tau(p) - tau(q) = (t_p - t_q) l, so each summand is
  // G(p) t_p^k / prod (t_p - t_q) times l^{k - (m - 1)}.
  MultiPoly direct(group.nvars());
  for (std::size_t p = 0; p < m; ++p) {
    CycNum denom(1L);
    for (std::size_t q = 0; q < m; ++q) {
      if (q != p) denom *= edge.tau[p] - edge.tau[q];
    }
    direct += (edge.tau[p].pow(k) / denom) * f[edge.members[p]];
  }
  out.direct = LinearPowerFraction{direct, k - (order - 1)};

  const int i = order - 1 - k;
  const CycNum scale = group.coroot_scale(edge.rep, edge.reflection).pow(-i) *
                       CycNum(Rational(1, order));
  out.operator_side =
      LinearPowerFraction{scale * operator_numerator(f, edge.reflection, i, edge.rep), -i};

  // Bring both to a common exponent before comparing.
  const int low = std::min(out.direct.exponent, out.operator_side.exponent);
  out.agree = times_form_power(out.direct.numerator, form, out.direct.exponent - low) ==
              times_form_power(out.operator_side.numerator, form,
                               out.operator_side.exponent - low);

  if (out.direct.exponent >= 0) {
    out.polynomial = true;
  } else {
    out.polynomial = group.coroot_divider(edge.rep, edge.reflection)
                         .divide(out.direct.numerator, -out.direct.exponent)
                         .ok();
  }
  return out;
}

HypergraphCertificate hypergraph_member(const WMap& f, const Hypergraph& graph, bool stop_early) {
  HypergraphCertificate cert;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const HyperEdge& edge = graph.edges[e];
    std::vector<MultiPoly> values;
    for (ElementId y : edge.members) values.push_back(f[y]);
    const EdgeSolution sol = edge_member_vandermonde(f.group(), edge, values);
    if (sol.ok) continue;
    cert.ok = false;
    cert.failures.push_back(EdgeFailure{e, *sol.failing_index, sol.witness});
    if (stop_early) break;
  }
  return cert;
}

NaiveResult naive_pairwise_member(const WMap& f, const Hypergraph& graph) {
  const ReflectionGroup& group = f.group();
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const HyperEdge& edge = graph.edges[e];
    const LinearDivider& divider = group.coroot_divider(edge.rep, edge.reflection);
    for (std::size_t p = 0; p < edge.members.size(); ++p) {
      for (std::size_t q = p + 1; q < edge.members.size(); ++q) {
        if (!divider.divide(f[edge.members[q]] - f[edge.members[p]], 1).ok()) {
          return NaiveResult{false, e};
        }
      }
    }
  }
  return NaiveResult{};
}

std::size_t naive_graded_dim(const ReflectionGroup& group, const Hypergraph& graph, int degree) {
  const DegreeSpace space(group.nvars(), degree);
  const std::size_t m = space.dimension();
  const std::size_t ncols = group.size() * m;
  std::vector<Vector> rows;
  for (const auto& edge : graph.edges) {
    const LinearDivider& divider = group.coroot_divider(edge.rep, edge.reflection);
    std::vector<MultiPoly> adapted;
    for (const auto& mono : space.monomials()) {
      adapted.push_back(divider.to_adapted(MultiPoly::term(mono, CycNum(1L))));
    }
    // differences against the first vertex generate all pairwise ones
    const ElementId p = edge.members.front();
    for (std::size_t q = 1; q < edge.members.size(); ++q) {
      std::map<Monomial, Vector, GrlexDescending> low;
      for (std::size_t k = 0; k < m; ++k) {
        for (const auto& [mono, c] : adapted[k].terms()) {
          if (mono.exps[0] >= 1) continue;
          auto [it, inserted] = low.try_emplace(mono);
          if (inserted) it->second.assign(ncols, CycNum());
          it->second[edge.members[q] * m + k] += c;
          it->second[p * m + k] -= c;
        }
      }
      for (auto& [mono, row] : low) rows.push_back(std::move(row));
    }
  }
  return ncols - rank_of(std::move(rows), ncols);
}

nlohmann::json hypergraph_to_json(const ReflectionGroup& group, const Hypergraph& graph) {
  using nlohmann::json;
  json vertices = json::array();
  for (ElementId x = 0; x < group.size(); ++x) {
    json entries = json::array();
    for (const auto& c : group.matrix(x).entries()) entries.push_back(c.to_string());
    vertices.push_back({{"id", x}, {"matrix", entries}});
  }
  json edges = json::array();
  for (const auto& edge : graph.edges) {
    const PseudoReflection& s = group.reflection(edge.reflection);
    json tau = json::array();
    for (const auto& t : edge.tau) tau.push_back(t.to_string());
    edges.push_back({{"reflection", s.element},
                     {"order", s.order},
                     {"rep", edge.rep},
                     {"members", edge.members},
                     {"hyperplane", edge.hyperplane_id},
                     {"axial", format_poly(edge.axial.to_poly(), group.variables())},
                     {"tau", tau}});
  }
  return json{{"group", group.name()},
              {"order", group.size()},
              {"vertices", vertices},
              {"hyperedges", edges}};
}

std::string hypergraph_to_dot(const ReflectionGroup& group, const Hypergraph& graph) {
  std::ostringstream out;
  out << "graph \"" << group.name() << "\" {\n";
  for (ElementId x = 0; x < group.size(); ++x) out << "  v" << x << ";\n";
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const HyperEdge& edge = graph.edges[e];
    const std::string label = format_poly(edge.axial.to_poly(), group.variables());
    for (std::size_t p = 0; p < edge.members.size(); ++p) {
      for (std::size_t q = p + 1; q < edge.members.size(); ++q) {
        out << "  v" << edge.members[p] << " -- v" << edge.members[q] << " [label=\"e" << e
            << ": " << label << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace rgkm
