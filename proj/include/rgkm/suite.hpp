#pragma once

// Orchestration of all verification checks for one group, with a
// deterministic JSON report.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rgkm/localization.hpp"
#include "rgkm/parallel.hpp"

namespace rgkm {

struct SuiteOptions {
  std::optional<int> dmax;  // default sum(d_i - 1) + 3
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  bool theorem = true;
  bool lemmas = true;
  bool naive_control = false;
  bool force = false;
  std::size_t threads = worker_count();
};

struct LemmaResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool pass() const { return failures == 0; }
};

struct NaiveControlResult {
  bool all_order_two = false;
  std::vector<long> naive_dims;  // degrees 0..dmax
  std::vector<long> hw_dims;
  /// First degree where the pairwise module is strictly larger.
  std::optional<int> separating_degree;
  std::size_t trials = 0;
  std::size_t disagreements = 0;
  bool pass = false;
};

struct VerificationReport {
  std::string group;
  std::size_t order = 0;
  std::size_t reflections = 0;
  bool generated_by_reflections = false;
  std::vector<int> degrees;
  int dmax = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;

  std::optional<TheoremReport> theorem;
  bool theorem_refused = false;
  std::vector<LemmaResult> lemmas;
  std::optional<NaiveControlResult> naive_control;

  /// Wall-clock seconds per stage; kept out of the JSON so reports are
  /// byte-identical across runs.
  std::map<std::string, double> timings;

  bool pass() const;
  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
};

/// Throws PreconditionViolation when s(W) does not generate W and
/// options.force is not set.
VerificationReport run_suite(const ReflectionGroup& group, const SuiteOptions& options);

/// Individual suites; each draws its inputs from `seed` before checking in
/// parallel.
LemmaResult check_constant_map(const ReflectionGroup& group);
LemmaResult check_w_closed(const ReflectionGroup& group, std::size_t trials, std::uint64_t seed,
                           std::size_t threads);
LemmaResult check_decomposition(const ReflectionGroup& group, std::size_t trials,
                                std::uint64_t seed, std::size_t threads);
LemmaResult check_leibniz(const ReflectionGroup& group, std::size_t trials, std::uint64_t seed,
                          std::size_t threads);
LemmaResult check_commuting_square(const ReflectionGroup& group, std::size_t trials,
                                   std::uint64_t seed, std::size_t threads);
LemmaResult check_operator_closure(const ReflectionGroup& group, std::size_t trials,
                                   std::uint64_t seed, std::size_t threads);
LemmaResult check_product_closure(const ReflectionGroup& group, std::size_t trials,
                                  std::uint64_t seed, std::size_t threads);
/// hw_member <=> hypergraph_member on members and perturbed non-members,
/// the edge integral identity for k <= |e|-1, and agreement of the
/// Vandermonde and integral tests.
LemmaResult check_equality(const ReflectionGroup& group, std::size_t trials, std::uint64_t seed,
                           std::size_t threads);
/// Pairwise edge test against H_W. Members must always pass it. With all
/// |s| = 2 it must agree with hypergraph membership on members and
/// perturbed non-members and have equal graded dimensions up to dmax;
/// otherwise it must be strictly larger in some degree <= dmax.
NaiveControlResult check_naive_control(const ReflectionGroup& group, int dmax,
                                       std::size_t trials, std::uint64_t seed,
                                       std::size_t threads);

/// Random members mu(T) of H_W from a seed.
std::vector<WMap> random_members(const ReflectionGroup& group, std::size_t count,
                                 std::uint64_t seed);

}  // namespace rgkm
