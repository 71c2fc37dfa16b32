#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "camb/verify.hpp"
#include "helpers.hpp"

using namespace camb;
using camb::testing::cw;
using camb::testing::load;

namespace {

void expect_pass(const Report& r) {
  INFO(r.suite);
  for (const auto& v : r.violations) {
    const std::string msg = v.kind + ": " + v.detail;
    INFO(msg);
  }
  CHECK(r.pass());
  CHECK(r.checks > 0);
}

}  // namespace

TEST_CASE("all suites pass on B2 (entire group)") {
  const CoxGroup b2 = load("b2");
  for (const Report& r : verify_suites(b2, cw(b2, "p,q"), "all", 4)) expect_pass(r);
}

TEST_CASE("forms suite on every example group") {
  for (const char* name : {"a3", "a2tilde", "g2tilde", "h542"}) {
    const CoxGroup g = load(name);
    expect_pass(verify_forms(g, all_generators(g), 5));
  }
  // exhaustive over inversion-pair subgroups of B3
  const CoxGroup b3 = load("b3");
  expect_pass(verify_forms(b3, cw(b3, "r,s,t"), 9));
}

TEST_CASE("sortable suite on B3 (entire group) and bounded affine groups") {
  const CoxGroup b3 = load("b3");
  expect_pass(verify_sortable(b3, cw(b3, "s,r,t"), 9));
  const CoxGroup a2t = load("a2tilde");
  expect_pass(verify_sortable(a2t, cw(a2t, "p,q,r"), 8));
  const CoxGroup g2 = load("g2tilde");
  expect_pass(verify_sortable(g2, cw(g2, "s,r,t"), 6));
}

TEST_CASE("lattice suite at desk caps") {
  const CoxGroup b3 = load("b3");
  expect_pass(verify_lattice(b3, cw(b3, "r,s,t"), 4));
}

TEST_CASE("fan suite: B3 complete, bounded affine and hyperbolic groups") {
  const CoxGroup b3 = load("b3");
  expect_pass(verify_fan(b3, cw(b3, "t,r,s"), 9, 0));
  const CoxGroup g2 = load("g2tilde");
  expect_pass(verify_fan(g2, cw(g2, "s,r,t"), 4, 2));
  const CoxGroup a2t = load("a2tilde");
  expect_pass(verify_fan(a2t, cw(a2t, "p,q,r"), 4, 2));
  const CoxGroup h = load("h542");
  expect_pass(verify_fan(h, cw(h, "r,s,t"), 4, 2));
}

TEST_CASE("unknown suite name is rejected") {
  const CoxGroup b2 = load("b2");
  CHECK_THROWS_AS(verify_suites(b2, cw(b2, "p,q"), "nonsense", 3), std::invalid_argument);
}

TEST_CASE("a corrupted Cartan matrix is rejected up front") {
  // flipping the sign of a_pq violates condition (ii)
  Json j;
  j["generators"] = {"p", "q"};
  j["coxeter_matrix"] = {{1, 4}, {4, 1}};
  j["cartan"] = Json::array();
  j["cartan"].push_back({2, 2});
  j["cartan"].push_back({-1, 2});
  CHECK_THROWS_AS(group_from_json(j), CartanError);
}
