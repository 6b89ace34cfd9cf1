#pragma once

// The linear hypergraph of W: vertices are the elements, hyperedges the
// right <s>-cosets x<s>, the axial line of x<s> is spanned by x(l_s), and the
// generating class is tau(x s^j) = lambda_s^j x(l_s).

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rgkm/equivariant.hpp"

namespace rgkm {

struct HyperEdge {
  ReflectionId reflection = 0;
  ElementId rep = 0;
  std::vector<ElementId> members;  // x, x s, ..., x s^{|s|-1}
  std::size_t hyperplane_id = 0;
  LinearForm axial;                // normalized x(l_s)
  std::vector<CycNum> tau;         // tau(members[j]) = tau[j] * axial
};

struct Hypergraph {
  std::vector<HyperEdge> edges;
  std::vector<std::vector<std::size_t>> by_vertex;  // edge indices per element
};

/// One edge per (coset, hyperplane); the first pseudo-reflection in
/// inventory order that produces it is kept.
Hypergraph build_hypergraph(const ReflectionGroup& group);

/// Result of writing the values on an edge as sum_i g_i tau^i.
struct EdgeSolution {
  bool ok = false;
  std::vector<MultiPoly> coefficients;  // g_0..g_{|e|-1} when ok
  std::optional<std::size_t> failing_index;
  MultiPoly witness;                    // low-order part blocking g_i
};

/// Inverts the scalar Vandermonde matrix (tau[j]^i) and divides the i-th
/// solved entry by axial^i.
EdgeSolution edge_member_vandermonde(const ReflectionGroup& group, const HyperEdge& edge,
                                     const std::vector<MultiPoly>& values);

/// numerator * form^exponent
struct LinearPowerFraction {
  MultiPoly numerator;
  int exponent = 0;
};

struct EdgeIntegral {
  LinearPowerFraction direct;         // sum_p G(p) tau(p)^k / prod_{q != p} (tau(p) - tau(q))
  LinearPowerFraction operator_side;  // (1/|s|) _{|s|-1-k}A_s(F)(x) before division
  bool agree = false;                 // equal as rational functions
  bool polynomial = false;            // direct value lies in R
};

EdgeIntegral edge_integral(const WMap& f, const HyperEdge& edge, int k);

struct EdgeFailure {
  std::size_t edge = 0;
  std::size_t coefficient = 0;
  MultiPoly witness;
};

struct HypergraphCertificate {
  bool ok = true;
  std::vector<EdgeFailure> failures;
};

HypergraphCertificate hypergraph_member(const WMap& f, const Hypergraph& graph,
                                        bool stop_early = false);

/// Pairwise test: every difference along an edge divisible by the axial
/// form once.
struct NaiveResult {
  bool ok = true;
  std::optional<std::size_t> failing_edge;
};
NaiveResult naive_pairwise_member(const WMap& f, const Hypergraph& graph);

/// Dimension of the degree-d maps passing the pairwise test.
std::size_t naive_graded_dim(const ReflectionGroup& group, const Hypergraph& graph, int degree);

nlohmann::json hypergraph_to_json(const ReflectionGroup& group, const Hypergraph& graph);
std::string hypergraph_to_dot(const ReflectionGroup& group, const Hypergraph& graph);

}  // namespace rgkm
