// reflect-gkm: command-line front end.
//
// Exit status: 0 success, 1 verification failure or non-member, 2 bad input,
// 3 internal error.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rgkm/errors.hpp"
#include "rgkm/group_file.hpp"
#include "rgkm/hypergraph.hpp"
#include "rgkm/invariant_theory.hpp"
#include "rgkm/map_file.hpp"
#include "rgkm/poly_text.hpp"
#include "rgkm/suite.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace rgkm;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;
constexpr int kInternal = 3;

struct Args {
  std::string group;
  std::optional<int> max_degree;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::optional<std::string> json_out;
  bool force = false;
  bool naive_control = false;
  std::string input;
  bool naive = false;
  std::string format = "json";
  std::string out = "-";
};

class InputError : public Error {
 public:
  using Error::Error;
};

// A path, or the stem of a bundled group file.
ReflectionGroup load_group(const std::string& name_or_path) {
  fs::path path(name_or_path);
  if (!fs::exists(path)) {
    const fs::path bundled = fs::path(RGKM_DATA_DIR) / (name_or_path + ".json");
    if (name_or_path.find('/') == std::string::npos && fs::exists(bundled)) {
      path = bundled;
    } else {
      throw InputError("no such group file: " + name_or_path);
    }
  }
  return parse_group_file(path);
}

void write_output(const std::string& target, const std::string& text) {
  if (target.empty() || target == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(target, std::ios::binary);
  if (!out) throw InputError("cannot write " + target);
  out << text;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
  return s;
}

std::optional<std::vector<int>> try_degrees(const ReflectionGroup& g) {
  try {
    return molien_series(g).degrees;
  } catch (const NotPolynomialInvariantRing&) {
    return std::nullopt;
  }
}

std::string element_label(const ReflectionGroup& g, ElementId x) {
  std::string s = "[";
  const Matrix& m = g.matrix(x);
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r) s += "; ";
    for (std::size_t c = 0; c < m.size(); ++c) {
      if (c) s += ", ";
      s += m(r, c).to_string();
    }
  }
  return s + "]";
}

void report_timing(const std::string& stage, double seconds) {
  std::fprintf(stderr, "timing %s: %.3fs\n", stage.c_str(), seconds);
}

int cmd_group_info(const Args& a) {
  const auto g = load_group(a.group);
  const auto degrees = try_degrees(g);
  long product = 1;
  if (degrees) {
    for (int d : *degrees) product *= d;
  }
  if (a.json_out) {
    json j{{"name", g.name()},
           {"dimension", g.nvars()},
           {"conductor", g.conductor()},
           {"order", g.size()},
           {"reflections", g.reflections().size()},
           {"hyperplanes", g.hyperplane_count()},
           {"generated_by_reflections", g.generated_by_reflections()},
           {"degrees", degrees ? json(*degrees) : json(nullptr)}};
    write_output(*a.json_out, j.dump(2) + "\n");
    return kOk;
  }
  std::cout << "group " << g.name() << "\n"
            << "dimension " << g.nvars() << ", conductor " << g.conductor() << "\n"
            << "|W| = " << g.size() << "\n"
            << "|s(W)| = " << g.reflections().size() << " (" << g.hyperplane_count()
            << " hyperplanes)\n"
            << "generated by pseudo-reflections: " << (g.generated_by_reflections() ? "yes" : "no")
            << "\n";
  if (degrees) {
    std::cout << "degrees [" << join(*degrees) << "], product " << product << "\n";
  } else {
    std::cout << "degrees: invariant ring is not polynomial\n";
  }
  if (!g.generated_by_reflections()) {
    std::cerr << "warning: the pseudo-reflections do not generate the group\n";
  }
  return kOk;
}

int cmd_group_reflections(const Args& a) {
  const auto g = load_group(a.group);
  json list = json::array();
  for (std::size_t r = 0; r < g.reflections().size(); ++r) {
    const auto& s = g.reflection(r);
    list.push_back({{"index", r},
                    {"element", s.element},
                    {"matrix", element_label(g, s.element)},
                    {"order", s.order},
                    {"eigenvalue", s.eigenvalue.to_string()},
                    {"coroot", format_poly(s.coroot.to_poly(), g.variables())},
                    {"hyperplane", s.hyperplane_id}});
  }
  if (a.json_out) {
    write_output(*a.json_out, json{{"group", g.name()}, {"reflections", list}}.dump(2) + "\n");
    return kOk;
  }
  for (const auto& r : list) {
    std::cout << "s" << r["index"].get<std::size_t>() << "  element "
              << r["element"].get<std::size_t>() << " " << r["matrix"].get<std::string>()
              << "  order " << r["order"].get<int>() << "  lambda "
              << r["eigenvalue"].get<std::string>() << "  coroot "
              << r["coroot"].get<std::string>() << "  hyperplane "
              << r["hyperplane"].get<std::size_t>() << "\n";
  }
  return kOk;
}

int cmd_molien(const Args& a) {
  const auto g = load_group(a.group);
  const int upto = a.max_degree.value_or(8);
  if (upto < 0) throw InputError("--max-degree must be nonnegative");
  const auto coeffs = molien_coefficients(g, upto);
  const auto degrees = try_degrees(g);
  if (a.json_out) {
    json c = json::array();
    for (const auto& q : coeffs) c.push_back(q.get_str());
    write_output(*a.json_out,
                 json{{"group", g.name()},
                      {"coefficients", c},
                      {"degrees", degrees ? json(*degrees) : json(nullptr)}}
                         .dump(2) +
                     "\n");
  } else {
    for (int d = 0; d <= upto; ++d) std::cout << "t^" << d << ": " << coeffs[d].get_str() << "\n";
    if (degrees) {
      std::cout << "product form, degrees [" << join(*degrees) << "]\n";
    } else {
      std::cout << "not of product form\n";
    }
  }
  return degrees ? kOk : kFail;
}

int cmd_coinvariants(const Args& a) {
  const auto g = load_group(a.group);
  const auto degrees = molien_series(g).degrees;
  const int dmax = a.max_degree.value_or(top_coinvariant_degree(degrees));
  const auto basis = coinvariant_basis(g, dmax);
  if (a.json_out) {
    json lifts = json::array();
    for (std::size_t k = 0; k < basis.lifts.size(); ++k) {
      lifts.push_back({{"degree", basis.degrees[k]},
                       {"monomial", format_poly(basis.lifts[k], g.variables())}});
    }
    write_output(*a.json_out, json{{"group", g.name()},
                                   {"fundamental_degrees", basis.fundamental_degrees},
                                   {"histogram", basis.histogram},
                                   {"basis", lifts}}
                                      .dump(2) +
                                  "\n");
    return kOk;
  }
  std::cout << "fundamental degrees [" << join(basis.fundamental_degrees) << "]\n";
  for (int d = 0; d <= dmax; ++d) {
    std::cout << "degree " << d << " (" << basis.histogram[d] << "):";
    for (std::size_t k = 0; k < basis.lifts.size(); ++k) {
      if (basis.degrees[k] == d) std::cout << " " << format_poly(basis.lifts[k], g.variables());
    }
    std::cout << "\n";
  }
  return kOk;
}

int cmd_member(const Args& a) {
  const auto g = load_group(a.group);
  const auto f = parse_map_file(a.input, g);
  const auto cert = hw_member(f);
  if (a.json_out) {
    json failures = json::array();
    for (const auto& e : cert.failures) {
      failures.push_back({{"rep", e.rep},
                          {"reflection", e.reflection},
                          {"exponent", e.exponent},
                          {"witness", format_poly(e.witness, g.variables())}});
    }
    write_output(*a.json_out,
                 json{{"group", g.name()}, {"member", cert.ok}, {"failures", failures}}.dump(2) +
                     "\n");
  } else if (cert.ok) {
    std::cout << "member: yes\n";
  } else {
    std::cout << "member: no\n";
    for (const auto& e : cert.failures) {
      std::cout << "  coset of " << e.rep << ", s" << e.reflection << ", i = " << e.exponent
                << ": not divisible, low part " << format_poly(e.witness, g.variables())
                << "\n";
    }
  }
  return cert.ok ? kOk : kFail;
}

void print_report(const VerificationReport& r) {
  std::cout << "group " << r.group << ": |W| = " << r.order << ", |s(W)| = " << r.reflections
            << ", degrees [" << join(r.degrees) << "], dmax " << r.dmax << ", trials "
            << r.trials << ", seed " << r.seed << "\n";
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  if (r.theorem_refused) {
    std::cout << "theorem: refused (invariant ring is not polynomial)\n";
  } else if (r.theorem) {
    std::cout << "degree  expected  image  H_W\n";
    for (const auto& row : r.theorem->rows) {
      std::printf("%-7d %-9ld %-6ld %-5ld %s\n", row.degree, row.expected, row.image, row.hw,
                  row.pass() ? "ok" : "MISMATCH");
    }
    std::cout << "sampled images: " << r.theorem->sample_trials << " tensors, "
              << r.theorem->sample_failures << " outside H_W\n";
    std::cout << "theorem: " << (r.theorem->pass() ? "PASS" : "FAIL") << "\n";
  }
  for (const auto& l : r.lemmas) {
    std::cout << l.name << ": " << (l.pass() ? "PASS" : "FAIL") << " (" << l.trials
              << " trials, " << l.checks << " checks, " << l.failures << " failures)\n";
    if (!l.pass()) std::cout << "  first failure: " << l.first_failure << "\n";
  }
  if (r.naive_control) {
    const auto& n = *r.naive_control;
    std::cout << "naive control: degree  pairwise  H_W\n";
    for (std::size_t d = 0; d < n.naive_dims.size(); ++d) {
      std::cout << "               " << d << "       " << n.naive_dims[d] << "         "
                << n.hw_dims[d] << "\n";
    }
    if (n.separating_degree) {
      std::cout << "  pairwise test is strictly weaker from degree " << *n.separating_degree
                << "\n";
    }
    std::cout << "  membership disagreements: " << n.disagreements << " of " << n.trials << "\n";
    std::cout << "naive control: " << (n.pass ? "PASS" : "FAIL") << "\n";
  }
  std::cout << "overall: " << (r.pass() ? "PASS" : "FAIL") << "\n";
}

int cmd_verify(const Args& a, bool theorem, bool lemmas) {
  const auto g = load_group(a.group);
  SuiteOptions o;
  o.dmax = a.max_degree;
  o.trials = a.trials;
  o.seed = a.seed;
  o.theorem = theorem;
  o.lemmas = lemmas;
  o.naive_control = a.naive_control;
  o.force = a.force;
  const auto report = run_suite(g, o);
  for (const auto& [stage, seconds] : report.timings) report_timing(stage, seconds);
  if (a.json_out) {
    const bool to_stdout = a.json_out->empty() || *a.json_out == "-";
    write_output(*a.json_out, report.to_json().dump(2) + "\n");
    if (!to_stdout) print_report(report);
  } else {
    print_report(report);
  }
  return report.pass() ? kOk : kFail;
}

int cmd_hypergraph_export(const Args& a) {
  const auto g = load_group(a.group);
  const auto graph = build_hypergraph(g);
  if (a.format == "dot") {
    write_output(a.out, hypergraph_to_dot(g, graph));
  } else {
    write_output(a.out, hypergraph_to_json(g, graph).dump(2) + "\n");
  }
  return kOk;
}

int cmd_hypergraph_member(const Args& a) {
  const auto g = load_group(a.group);
  const auto f = parse_map_file(a.input, g);
  const auto graph = build_hypergraph(g);
  const auto cert = hypergraph_member(f, graph);
  std::optional<NaiveResult> naive;
  if (a.naive) naive = naive_pairwise_member(f, graph);
  if (a.json_out) {
    json failures = json::array();
    for (const auto& e : cert.failures) {
      failures.push_back({{"edge", e.edge},
                          {"coefficient", e.coefficient},
                          {"witness", format_poly(e.witness, g.variables())}});
    }
    json j{{"group", g.name()}, {"member", cert.ok}, {"failures", failures}};
    if (naive) {
      j["naive"] = {{"member", naive->ok},
                    {"failing_edge", naive->failing_edge ? json(*naive->failing_edge)
                                                         : json(nullptr)}};
    }
    write_output(*a.json_out, j.dump(2) + "\n");
  } else {
    std::cout << "hyperedges: " << graph.edges.size() << "\n";
    std::cout << "member: " << (cert.ok ? "yes" : "no") << "\n";
    for (const auto& e : cert.failures) {
      const auto& edge = graph.edges[e.edge];
      std::cout << "  edge " << e.edge << " (s" << edge.reflection << " at " << edge.rep
                << ", axial " << format_poly(edge.axial.to_poly(), g.variables())
                << "): g_" << e.coefficient << " has low part "
                << format_poly(e.witness, g.variables()) << "\n";
    }
    if (naive) {
      std::cout << "pairwise test: " << (naive->ok ? "passes" : "fails");
      if (naive->failing_edge) std::cout << " at edge " << *naive->failing_edge;
      std::cout << "\n";
    }
  }
  return cert.ok ? kOk : kFail;
}

void add_group(CLI::App* cmd, Args& a) {
  cmd->add_option("--group", a.group, "group file, or the name of a bundled group")->required();
}

void add_json(CLI::App* cmd, Args& a, const std::string& help) {
  cmd->add_option("--json", a.json_out, help)->expected(0, 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of equivariant coinvariant rings of pseudo-reflection groups",
               "reflect-gkm"};
  app.require_subcommand(1);
  Args a;
  int (*handler)(const Args&) = nullptr;
  std::optional<std::pair<bool, bool>> verify_mode;

  auto* group = app.add_subcommand("group", "inspect a group file");
  group->require_subcommand(1);
  auto* info = group->add_subcommand("info", "order, pseudo-reflections and degrees");
  add_group(info, a);
  add_json(info, a, "emit JSON (to a path, or stdout)");
  info->callback([&] { handler = cmd_group_info; });
  auto* refl = group->add_subcommand("reflections", "list the pseudo-reflections");
  add_group(refl, a);
  add_json(refl, a, "emit JSON (to a path, or stdout)");
  refl->callback([&] { handler = cmd_group_reflections; });

  auto* molien = app.add_subcommand("molien", "Molien series and fundamental degrees");
  add_group(molien, a);
  molien->add_option("--max-degree", a.max_degree, "last coefficient printed (default 8)");
  add_json(molien, a, "emit JSON (to a path, or stdout)");
  molien->callback([&] { handler = cmd_molien; });

  auto* coinv = app.add_subcommand("coinvariants", "standard monomial basis of R_W");
  add_group(coinv, a);
  coinv->add_option("--max-degree", a.max_degree, "degree bound (default sum(d_i - 1))");
  add_json(coinv, a, "emit JSON (to a path, or stdout)");
  coinv->callback([&] { handler = cmd_coinvariants; });

  auto* member = app.add_subcommand("member", "test a map file for membership in H_W");
  add_group(member, a);
  member->add_option("--input", a.input, "map file")->required()->check(CLI::ExistingFile);
  add_json(member, a, "emit the certificate as JSON (to a path, or stdout)");
  member->callback([&] { handler = cmd_member; });

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->require_subcommand(1);
  struct Mode {
    const char* name;
    const char* help;
    bool theorem;
    bool lemmas;
  };
  for (const Mode m : {Mode{"theorem", "dimension equality and sampled images", true, false},
                       Mode{"lemmas", "operator identities and hypergraph equality", false, true},
                       Mode{"all", "theorem and lemmas", true, true}}) {
    auto* sub = verify->add_subcommand(m.name, m.help);
    add_group(sub, a);
    sub->add_option("--max-degree", a.max_degree, "degree bound (default sum(d_i - 1) + 3)");
    sub->add_option("--trials", a.trials, "random trials per suite")->capture_default_str();
    sub->add_option("--seed", a.seed, "random seed")->capture_default_str();
    add_json(sub, a, "write the report as JSON (to a path, or stdout)");
    sub->add_flag("--force", a.force, "run even if s(W) does not generate W");
    sub->add_flag("--naive-control", a.naive_control, "compare with the pairwise edge test");
    sub->callback([&, m] { verify_mode = std::pair{m.theorem, m.lemmas}; });
  }

  auto* hyper = app.add_subcommand("hypergraph", "the linear hypergraph of W");
  hyper->require_subcommand(1);
  auto* exp = hyper->add_subcommand("export", "write the hypergraph");
  add_group(exp, a);
  exp->add_option("--format", a.format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}))
      ->capture_default_str();
  exp->add_option("--out", a.out, "output path (default stdout)");
  exp->callback([&] { handler = cmd_hypergraph_export; });
  auto* hmember = hyper->add_subcommand("member", "test a map file edge by edge");
  add_group(hmember, a);
  hmember->add_option("--input", a.input, "map file")->required()->check(CLI::ExistingFile);
  hmember->add_flag("--naive", a.naive, "also run the pairwise edge test");
  add_json(hmember, a, "emit JSON (to a path, or stdout)");
  hmember->callback([&] { handler = cmd_hypergraph_member; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const int code =
        verify_mode ? cmd_verify(a, verify_mode->first, verify_mode->second) : handler(a);
    report_timing("total",
                  std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    return code;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const SingularGenerator& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const PreconditionViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const NotPolynomialInvariantRing& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
