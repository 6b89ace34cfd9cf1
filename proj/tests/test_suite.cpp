#include <thread>

#include "doctest.h"
#include "rgkm/errors.hpp"
#include "rgkm/map_file.hpp"
#include "rgkm/poly_text.hpp"
#include "rgkm/suite.hpp"
#include "test_support.hpp"

using namespace rgkm;
using rgkm::testing::bundled;

namespace {

const char* kMinusIdentity = R"({
  "name": "minus-identity",
  "dimension": 2,
  "conductor": 2,
  "generators": [["-1", "0", "0", "-1"]]
})";

SuiteOptions quick(std::size_t trials, std::uint64_t seed) {
  SuiteOptions o;
  o.trials = trials;
  o.seed = seed;
  o.dmax = 3;
  return o;
}

}  // namespace

TEST_CASE("report round-trips through JSON") {
  auto options = quick(6, 11);
  options.naive_control = true;
  const auto report = run_suite(bundled("s3"), options);
  CHECK(report.pass());
  const auto j = report.to_json();
  const auto back = VerificationReport::from_json(j);
  CHECK(back.to_json() == j);
  CHECK(back.pass() == report.pass());
  CHECK(j["lemmas"].size() == 8);
  CHECK(!j.contains("timings"));
}

TEST_CASE("reports are byte-identical for identical inputs") {
  auto a = quick(5, 42);
  auto b = a;
  a.threads = 1;
  b.threads = 3;
  const auto first = run_suite(bundled("z3"), a).to_json().dump(2);
  const auto second = run_suite(bundled("z3"), b).to_json().dump(2);
  CHECK(first == second);
  const auto other = run_suite(bundled("z3"), quick(5, 43)).to_json().dump(2);
  CHECK(other.find("\"seed\": 43") != std::string::npos);
}

TEST_CASE("groups not generated by reflections need force") {
  const auto g = parse_group_json(kMinusIdentity);
  CHECK(!g.generated_by_reflections());
  CHECK(g.reflections().empty());
  CHECK_THROWS_AS(run_suite(g, quick(3, 0)), PreconditionViolation);
  auto forced = quick(3, 0);
  forced.force = true;
  const auto report = run_suite(g, forced);
  CHECK(report.theorem_refused);
  CHECK(!report.pass());
  CHECK(report.warnings.size() == 2);
  CHECK(report.to_json()["theorem"]["refused"] == true);
}

TEST_CASE("naive control separates order three and agrees for order two") {
  const auto z3 = check_naive_control(bundled("z3"), 3, 10, 5, 1);
  CHECK(!z3.all_order_two);
  CHECK(z3.naive_dims == std::vector<long>{1, 3, 3, 3});
  CHECK(z3.hw_dims == std::vector<long>{1, 2, 3, 3});
  CHECK(z3.separating_degree == 1);
  CHECK(z3.pass);

  const auto b2 = check_naive_control(bundled("b2"), 3, 10, 5, 1);
  CHECK(b2.all_order_two);
  CHECK(b2.naive_dims == b2.hw_dims);
  CHECK(!b2.separating_degree);
  CHECK(b2.disagreements == 0);
  CHECK(b2.pass);
}

TEST_CASE("map files") {
  const auto& s3 = bundled("s3");
  const auto f = parse_map_json(R"({"group": "s3", "values": {"0": "x1", "4": "z*x2^2 - 1/2"}})",
                                s3);
  CHECK(f[0] == parse_poly("x1", 2, s3.variables()));
  CHECK(f[4] == parse_poly("-x2^2 - 1/2", 2, s3.variables()));
  CHECK(f[1].is_zero());
  CHECK(parse_map_json(map_to_json(f).dump(), s3) == f);

  CHECK_THROWS_AS(parse_map_json(R"({"group": "b2", "values": {}})", s3), SchemaError);
  CHECK_THROWS_AS(parse_map_json(R"({"group": "s3", "values": {"6": "1"}})", s3), SchemaError);
  CHECK_THROWS_AS(parse_map_json(R"({"group": "s3", "values": {"a": "1"}})", s3), SchemaError);
  CHECK_THROWS_AS(parse_map_json(R"({"group": "s3", "values": {"0": "y"}})", s3), SchemaError);
  CHECK_THROWS_AS(parse_map_json(R"({"group": "s3", "values": {"0": 3}})", s3), SchemaError);
  CHECK_THROWS_AS(parse_map_json(R"({"group": "s3", "values": [)", s3), ParseError);
}

TEST_CASE("random members are members and deterministic") {
  const auto& g = bundled("g312");
  const auto a = random_members(g, 4, 9);
  const auto b = random_members(g, 4, 9);
  REQUIRE(a.size() == 4);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k] == b[k]);
    CHECK(hw_member(a[k]).ok);
  }
}
