#include "rgkm/suite.hpp"

#include <chrono>
#include <functional>

#include "rgkm/errors.hpp"
#include "rgkm/hypergraph.hpp"

namespace rgkm {

namespace {

enum Stream : std::uint32_t {
  kMembers = 1,
  kSecondMembers,
  kSimpleTensors,
  kPerturb,
  kNaive,
};

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint32_t stream, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    stream, static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

WMap member_for(const ReflectionGroup& group, std::uint64_t seed, std::uint32_t stream,
                std::size_t trial) {
  auto rng = trial_rng(seed, stream, trial);
  return mu(group, random_tensor(rng, group));
}

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    if (failures == 0) first = what();
    ++failures;
  }
};

std::string where(std::size_t trial, ReflectionId r, int i) {
  return "trial " + std::to_string(trial) + ", reflection " + std::to_string(r) + ", i = " +
         std::to_string(i);
}

// Runs body for every trial in parallel and merges tallies in trial order.
LemmaResult run_trials(std::string name, std::size_t trials, std::size_t threads,
                       const std::function<void(std::size_t, Tally&)>& body) {
  std::vector<Tally> tallies(trials);
  parallel_for(trials, [&](std::size_t t) {
    try {
      body(t, tallies[t]);
    } catch (const Error& e) {
      tallies[t].expect(false, [&] { return "trial " + std::to_string(t) + ": " + e.what(); });
    }
  }, threads);
  LemmaResult out{std::move(name), trials, 0, 0, {}};
  for (const auto& tally : tallies) {
    out.checks += tally.checks;
    if (tally.failures != 0 && out.failures == 0) out.first_failure = tally.first;
    out.failures += tally.failures;
  }
  return out;
}

}  // namespace

std::vector<WMap> random_members(const ReflectionGroup& group, std::size_t count,
                                 std::uint64_t seed) {
  std::vector<WMap> out;
  for (std::size_t t = 0; t < count; ++t) out.push_back(member_for(group, seed, kMembers, t));
  return out;
}

LemmaResult check_constant_map(const ReflectionGroup& group) {
  return run_trials("constant-map", 1, 1, [&](std::size_t, Tally& tally) {
    const WMap one = WMap::constant(group, CycNum(1L));
    for (ReflectionId r = 0; r < group.reflections().size(); ++r) {
      for (int i = 1; i < group.reflection(r).order; ++i) {
        const OperatorResult res = op_A(one, r, i);
        tally.expect(res.ok() && res.value->is_zero(), [&] { return where(0, r, i); });
      }
    }
  });
}

LemmaResult check_w_closed(const ReflectionGroup& group, std::size_t trials, std::uint64_t seed,
                           std::size_t threads) {
  return run_trials("w-closed", trials, threads, [&](std::size_t t, Tally& tally) {
    const WMap f = member_for(group, seed, kMembers, t);
    const std::size_t nr = group.reflections().size();
    std::vector<std::vector<WMap>> a(nr);
    for (ReflectionId r = 0; r < nr; ++r) {
      for (int i = 0; i < group.reflection(r).order; ++i) a[r].push_back(op_A_exact(f, r, i));
    }
    for (ElementId w = 0; w < group.size(); ++w) {
      const WMap fw = f.act(w);
      tally.expect(hw_member(fw, true).ok, [&] {
        return "trial " + std::to_string(t) + ": F.w left H_W for w = " + std::to_string(w);
      });
      for (ReflectionId r = 0; r < nr; ++r) {
        const auto [conj, c] = group.conjugate_reflection(w, r);
        for (int i = 1; i < group.reflection(r).order; ++i) {
          const OperatorResult lhs = op_A(fw, r, i);
          tally.expect(lhs.ok() && *lhs.value == c.pow(-i) * a[conj][static_cast<std::size_t>(i)].act(w),
                       [&] { return where(t, r, i) + ", w = " + std::to_string(w); });
        }
      }
    }
  });
}

LemmaResult check_decomposition(const ReflectionGroup& group, std::size_t trials,
                                std::uint64_t seed, std::size_t threads) {
  return run_trials("decomposition", trials, threads, [&](std::size_t t, Tally& tally) {
    const WMap f = member_for(group, seed, kMembers, t);
    for (ReflectionId r = 0; r < group.reflections().size(); ++r) {
      tally.expect(recompose_along_s(decompose_along_s(f, r), r) == f,
                   [&] { return where(t, r, 0); });
    }
  });
}

LemmaResult check_leibniz(const ReflectionGroup& group, std::size_t trials, std::uint64_t seed,
                          std::size_t threads) {
  return run_trials("leibniz", trials, threads, [&](std::size_t t, Tally& tally) {
    const WMap f = member_for(group, seed, kMembers, t);
    const WMap g = member_for(group, seed, kSecondMembers, t);
    const WMap fg = f * g;
    for (ReflectionId r = 0; r < group.reflections().size(); ++r) {
      const int order = group.reflection(r).order;
      std::vector<WMap> af;
      for (int a = 0; a < order; ++a) af.push_back(op_A_exact(f, r, a));
      for (int i = 0; i < order; ++i) {
        WMap rhs = WMap::zero(group);
        for (int a = 0; a < order; ++a) {
          rhs += af[static_cast<std::size_t>(a)] * op_A_exact(g, r, i - a);
        }
        rhs *= CycNum(Rational(1, order));
        tally.expect(op_A_exact(fg, r, i) == rhs, [&] { return where(t, r, i); });
      }
    }
  });
}

LemmaResult check_commuting_square(const ReflectionGroup& group, std::size_t trials,
                                   std::uint64_t seed, std::size_t threads) {
  return run_trials("commuting-square", trials, threads, [&](std::size_t t, Tally& tally) {
    auto rng = trial_rng(seed, kSimpleTensors, t);
    const TensorElement te = random_simple_tensor(rng, group);
    for (ReflectionId r = 0; r < group.reflections().size(); ++r) {
      for (int i = 1; i < group.reflection(r).order; ++i) {
        tally.expect(square_commutes(group, r, i, te), [&] { return where(t, r, i); });
      }
    }
  });
}

LemmaResult check_operator_closure(const ReflectionGroup& group, std::size_t trials,
                                   std::uint64_t seed, std::size_t threads) {
  return run_trials("operator-closure", trials, threads, [&](std::size_t t, Tally& tally) {
    const WMap f = member_for(group, seed, kMembers, t);
    for (ReflectionId r = 0; r < group.reflections().size(); ++r) {
      for (int i = 1; i < group.reflection(r).order; ++i) {
        const OperatorResult a = op_A(f, r, i);
        tally.expect(a.ok() && hw_member(*a.value, true).ok, [&] { return where(t, r, i); });
      }
    }
  });
}

LemmaResult check_product_closure(const ReflectionGroup& group, std::size_t trials,
                                  std::uint64_t seed, std::size_t threads) {
  return run_trials("product-closure", trials, threads, [&](std::size_t t, Tally& tally) {
    const WMap f = member_for(group, seed, kMembers, t);
    const WMap g = member_for(group, seed, kSecondMembers, t);
    tally.expect(hw_member(f * g, true).ok, [&] { return "trial " + std::to_string(t); });
  });
}

LemmaResult check_equality(const ReflectionGroup& group, std::size_t trials, std::uint64_t seed,
                           std::size_t threads) {
  const Hypergraph graph = build_hypergraph(group);
  return run_trials("hypergraph-equality", trials, threads, [&](std::size_t t, Tally& tally) {
    const WMap member = member_for(group, seed, kMembers, t);
    auto rng = trial_rng(seed, kPerturb, t);
    const auto other = random_nonmember(rng, member);
    tally.expect(other || group.reflections().empty(),
                 [&] { return "trial " + std::to_string(t) + ": no non-member found"; });
    std::vector<const WMap*> maps{&member};
    if (other) maps.push_back(&*other);
    for (const WMap* f : maps) {
      const std::string label = "trial " + std::to_string(t) +
                                (f == &member ? " (member)" : " (non-member)");
      const bool hw = hw_member(*f, true).ok;
      tally.expect(hw == (f == &member), [&] { return label + ": unexpected H_W status"; });
      tally.expect(hypergraph_member(*f, graph, true).ok == hw,
                   [&] { return label + ": hypergraph and H_W membership differ"; });
      for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        const HyperEdge& edge = graph.edges[e];
        std::vector<MultiPoly> values;
        for (ElementId y : edge.members) values.push_back((*f)[y]);
        const bool solved = edge_member_vandermonde(group, edge, values).ok;
        bool flags = true;
        const int size = static_cast<int>(edge.members.size());
        for (int k = 0; k < size; ++k) {
          const EdgeIntegral in = edge_integral(*f, edge, k);
          tally.expect(in.agree, [&] {
            return label + ": integral identity fails on edge " + std::to_string(e) +
                   ", k = " + std::to_string(k);
          });
          if (k + 1 < size) flags = flags && in.polynomial;
        }
        tally.expect(solved == flags, [&] {
          return label + ": Vandermonde and integral tests differ on edge " + std::to_string(e);
        });
      }
    }
  });
}

NaiveControlResult check_naive_control(const ReflectionGroup& group, int dmax,
                                       std::size_t trials, std::uint64_t seed,
                                       std::size_t threads) {
  const Hypergraph graph = build_hypergraph(group);
  NaiveControlResult out;
  out.all_order_two = true;
  for (const auto& s : group.reflections()) out.all_order_two = out.all_order_two && s.order == 2;
  out.naive_dims.resize(static_cast<std::size_t>(dmax) + 1);
  out.hw_dims.resize(static_cast<std::size_t>(dmax) + 1);
  parallel_for(out.naive_dims.size(), [&](std::size_t d) {
    out.naive_dims[d] = static_cast<long>(naive_graded_dim(group, graph, static_cast<int>(d)));
    out.hw_dims[d] = static_cast<long>(hw_graded_dim(group, static_cast<int>(d)));
  }, threads);
  bool dims_equal = true;
  for (std::size_t d = 0; d < out.naive_dims.size(); ++d) {
    if (out.naive_dims[d] != out.hw_dims[d]) dims_equal = false;
    if (!out.separating_degree && out.naive_dims[d] > out.hw_dims[d]) {
      out.separating_degree = static_cast<int>(d);
    }
  }
  out.trials = trials;
  std::vector<char> differ(trials, 0);
  parallel_for(trials, [&](std::size_t t) {
    const WMap member = member_for(group, seed, kMembers, t);
    auto rng = trial_rng(seed, kNaive, t);
    const auto other = random_nonmember(rng, member);
    bool same = naive_pairwise_member(member, graph).ok;
    if (out.all_order_two && other) {
      same = same && naive_pairwise_member(*other, graph).ok == hypergraph_member(*other, graph).ok;
    }
    differ[t] = same ? 0 : 1;
  }, threads);
  for (char d : differ) out.disagreements += static_cast<std::size_t>(d);
  if (out.all_order_two) {
    out.pass = out.disagreements == 0 && dims_equal;
  } else {
    out.pass = out.disagreements == 0 && out.separating_degree.has_value();
  }
  return out;
}

bool VerificationReport::pass() const {
  if (theorem_refused) return false;
  if (theorem && !theorem->pass()) return false;
  for (const auto& l : lemmas) {
    if (!l.pass()) return false;
  }
  if (naive_control && !naive_control->pass) return false;
  return true;
}

nlohmann::json VerificationReport::to_json() const {
  using nlohmann::json;
  json j;
  j["group"] = group;
  j["order"] = order;
  j["reflections"] = reflections;
  j["generated_by_reflections"] = generated_by_reflections;
  j["degrees"] = degrees;
  j["dmax"] = dmax;
  j["trials"] = trials;
  j["seed"] = seed;
  j["warnings"] = warnings;
  if (theorem_refused) {
    j["theorem"] = json{{"refused", true}};
  } else if (theorem) {
    json rows = json::array();
    for (const auto& r : theorem->rows) {
      rows.push_back({{"degree", r.degree},
                      {"expected", r.expected},
                      {"image", r.image},
                      {"hw", r.hw},
                      {"pass", r.pass()}});
    }
    j["theorem"] = json{{"refused", false},
                        {"rows", rows},
                        {"sample_trials", theorem->sample_trials},
                        {"sample_failures", theorem->sample_failures},
                        {"pass", theorem->pass()}};
  } else {
    j["theorem"] = nullptr;
  }
  json ls = json::array();
  for (const auto& l : lemmas) {
    ls.push_back({{"name", l.name},
                  {"trials", l.trials},
                  {"checks", l.checks},
                  {"failures", l.failures},
                  {"first_failure", l.first_failure},
                  {"pass", l.pass()}});
  }
  j["lemmas"] = ls;
  if (naive_control) {
    const auto& n = *naive_control;
    j["naive_control"] = {{"all_order_two", n.all_order_two},
                          {"naive_dims", n.naive_dims},
                          {"hw_dims", n.hw_dims},
                          {"separating_degree", n.separating_degree
                                                    ? json(*n.separating_degree)
                                                    : json(nullptr)},
                          {"trials", n.trials},
                          {"disagreements", n.disagreements},
                          {"pass", n.pass}};
  } else {
    j["naive_control"] = nullptr;
  }
  j["pass"] = pass();
  return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.group = j.at("group").get<std::string>();
  r.order = j.at("order").get<std::size_t>();
  r.reflections = j.at("reflections").get<std::size_t>();
  r.generated_by_reflections = j.at("generated_by_reflections").get<bool>();
  r.degrees = j.at("degrees").get<std::vector<int>>();
  r.dmax = j.at("dmax").get<int>();
  r.trials = j.at("trials").get<std::size_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  const auto& th = j.at("theorem");
  if (!th.is_null()) {
    if (th.at("refused").get<bool>()) {
      r.theorem_refused = true;
    } else {
      TheoremReport t;
      t.fundamental_degrees = r.degrees;
      for (const auto& row : th.at("rows")) {
        t.rows.push_back(TheoremRow{row.at("degree").get<int>(), row.at("expected").get<long>(),
                                    row.at("image").get<long>(), row.at("hw").get<long>()});
      }
      t.sample_trials = th.at("sample_trials").get<std::size_t>();
      t.sample_failures = th.at("sample_failures").get<std::size_t>();
      r.theorem = std::move(t);
    }
  }
  for (const auto& l : j.at("lemmas")) {
    r.lemmas.push_back(LemmaResult{l.at("name").get<std::string>(),
                                   l.at("trials").get<std::size_t>(),
                                   l.at("checks").get<std::size_t>(),
                                   l.at("failures").get<std::size_t>(),
                                   l.at("first_failure").get<std::string>()});
  }
  const auto& nc = j.at("naive_control");
  if (!nc.is_null()) {
    const auto& sep = nc.at("separating_degree");
    r.naive_control = NaiveControlResult{nc.at("all_order_two").get<bool>(),
                                         nc.at("naive_dims").get<std::vector<long>>(),
                                         nc.at("hw_dims").get<std::vector<long>>(),
                                         sep.is_null() ? std::nullopt
                                                       : std::optional<int>(sep.get<int>()),
                                         nc.at("trials").get<std::size_t>(),
                                         nc.at("disagreements").get<std::size_t>(),
                                         nc.at("pass").get<bool>()};
  }
  return r;
}

VerificationReport run_suite(const ReflectionGroup& group, const SuiteOptions& options) {
  using clock = std::chrono::steady_clock;
  VerificationReport report;
  report.group = group.name();
  report.order = group.size();
  report.reflections = group.reflections().size();
  report.generated_by_reflections = group.generated_by_reflections();
  report.trials = options.trials;
  report.seed = options.seed;

  if (!group.generated_by_reflections()) {
    if (!options.force) {
      throw PreconditionViolation("the pseudo-reflections of " + group.name() +
                                  " do not generate the group; rerun with --force");
    }
    report.warnings.push_back("pseudo-reflections do not generate the group");
  }

  std::optional<std::vector<int>> degrees;
  try {
    degrees = molien_series(group).degrees;
    report.degrees = *degrees;
  } catch (const NotPolynomialInvariantRing& e) {
    report.warnings.push_back(std::string("Molien series: ") + e.what());
  }
  report.dmax = options.dmax.value_or(degrees ? top_coinvariant_degree(*degrees) + 3 : 3);

  auto timed = [&](const std::string& stage, const std::function<void()>& body) {
    const auto start = clock::now();
    body();
    report.timings[stage] = std::chrono::duration<double>(clock::now() - start).count();
  };

  if (options.theorem) {
    if (!degrees) {
      report.theorem_refused = true;
    } else {
      timed("theorem", [&] {
        report.theorem =
            verify_theorem(group, report.dmax, options.trials, options.seed, options.threads);
      });
    }
  }
  if (options.lemmas) {
    const auto n = options.trials;
    const auto s = options.seed;
    const auto th = options.threads;
    timed("constant-map", [&] { report.lemmas.push_back(check_constant_map(group)); });
    timed("w-closed", [&] { report.lemmas.push_back(check_w_closed(group, n, s, th)); });
    timed("decomposition", [&] { report.lemmas.push_back(check_decomposition(group, n, s, th)); });
    timed("leibniz", [&] { report.lemmas.push_back(check_leibniz(group, n, s, th)); });
    timed("commuting-square",
          [&] { report.lemmas.push_back(check_commuting_square(group, n, s, th)); });
    timed("operator-closure",
          [&] { report.lemmas.push_back(check_operator_closure(group, n, s, th)); });
    timed("product-closure",
          [&] { report.lemmas.push_back(check_product_closure(group, n, s, th)); });
    timed("hypergraph-equality",
          [&] { report.lemmas.push_back(check_equality(group, n, s, th)); });
  }
  if (options.naive_control) {
    timed("naive-control", [&] {
      report.naive_control = check_naive_control(group, report.dmax, options.trials,
                                                 options.seed, options.threads);
    });
  }
  return report;
}

}  // namespace rgkm
