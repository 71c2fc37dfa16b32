#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "camb/fan.hpp"
#include "helpers.hpp"

using namespace camb;
using camb::testing::cw;
using camb::testing::elt;
using camb::testing::load;

TEST_CASE("cone_of") {
  const CoxGroup a2t = load("a2tilde");
  const CoxWord c = cw(a2t, "p,q,r");
  SUBCASE("Cone_c(e) = D") {
    const Cone cone = cone_of(a2t, c, a2t.identity());
    std::set<Vec, VecLess> normals(cone.normals.begin(), cone.normals.end());
    for (int i = 0; i < 3; ++i) CHECK(normals.count(a2t.simple_root(i)));
  }
  SUBCASE("normals of the skip-example cone") {
    const Elt v = elt(a2t, "p,q,r,p,r");
    const Cone cone = cone_of(a2t, c, v);
    std::set<Vec, VecLess> normals(cone.normals.begin(), cone.normals.end());
    CHECK(normals.count(a2t.act(elt(a2t, "p,q,r,p"), a2t.simple_root(1))));
    CHECK(normals.count(a2t.act(v, a2t.simple_root(0))));
    CHECK(normals.count(a2t.act(v, a2t.simple_root(2))));
  }
  SUBCASE("cone of w0 in B2 faces -D with cover-reflection walls") {
    const CoxGroup b2 = load("b2");
    const CoxWord c2 = cw(b2, "p,q");
    const Elt w0 = b2.longest_element(all_generators(b2));
    const Cone cone = cone_of(b2, c2, w0);
    const auto covs = b2.cover_reflection_roots(w0);
    std::set<Vec, VecLess> want;
    for (const Vec& r : covs) want.insert(-r);
    CHECK(std::set<Vec, VecLess>(cone.normals.begin(), cone.normals.end()) == want);
  }
}

TEST_CASE("chamber_in_cone") {
  const CoxGroup a2t = load("a2tilde");
  const CoxWord c = cw(a2t, "p,q,r");
  CHECK(chamber_in_cone(a2t, c, a2t.identity(), a2t.identity()));
  SUBCASE("the walls-example membership condition") {
    const Elt v = elt(a2t, "p,q,r,p,r");
    const ConeCtx ctx = make_cone_ctx(a2t, c, v);
    const Vec q_root = a2t.simple_root(1);
    const Vec pqrqp_root = a2t.act(elt(a2t, "p,q"), a2t.simple_root(2));
    const Vec big_root = a2t.act(elt(a2t, "p,q,r,p"), a2t.simple_root(1));
    for (const Elt& w : a2t.elements_up_to(7)) {
      const auto inv = a2t.inversion_set(w);
      const bool expect = inv.count(q_root) && inv.count(pqrqp_root) && !inv.count(big_root);
      CHECK(chamber_in_cone(a2t, ctx, w) == expect);
    }
  }
  SUBCASE("exhaustive agreement with pidown on B3") {
    const CoxGroup b3 = load("b3");
    const CoxWord c3 = cw(b3, "t,s,r");
    const auto sortables = enumerate_sortables(b3, c3, 9);
    std::vector<ConeCtx> ctxs;
    for (const Elt& v : sortables) ctxs.push_back(make_cone_ctx(b3, c3, v));
    const auto all_of_b3 = *b3.full_enumeration();
    for (const Elt& w : all_of_b3) {
      const Elt p = pidown(b3, c3, w);
      for (const ConeCtx& ctx : ctxs) CHECK(chamber_in_cone(b3, ctx, w) == (ctx.v == p));
    }
  }
}

TEST_CASE("tits_membership") {
  const CoxGroup a2t = load("a2tilde");
  SUBCASE("interior of D") {
    const auto res = tits_membership(a2t, Vec{Scalar(1), Scalar(1), Scalar(1)});
    CHECK(res.kind == TitsResult::InTits);
    CHECK(res.w.is_identity());
  }
  SUBCASE("boundary of D") {
    const auto res = tits_membership(a2t, Vec{Scalar(0), Scalar(1), Scalar(1)});
    CHECK(res.kind == TitsResult::Boundary);
  }
  SUBCASE("negative interior point is outside the affine Tits cone") {
    const auto res = tits_membership(a2t, Vec{Scalar(-1), Scalar(-1), Scalar(-1)}, 300);
    CHECK(res.kind == TitsResult::NotInTits);
  }
  SUBCASE("deep chamber points are found with the right chamber") {
    const Elt w = elt(a2t, "p,q,r,p,r,q");
    const Vec x = a2t.act_dual(w, Vec{Scalar(1), Scalar(2), Scalar(3)});
    const auto res = tits_membership(a2t, x);
    CHECK(res.kind == TitsResult::InTits);
    CHECK(res.w == w);
  }
  SUBCASE("finite groups: everything lands") {
    const CoxGroup b2 = load("b2");
    const auto res = tits_membership(b2, Vec{Scalar(-3), Scalar(-7)});
    CHECK(res.kind == TitsResult::InTits);
  }
}

TEST_CASE("fan_check_in_tits") {
  SUBCASE("single cone passes") {
    const CoxGroup a2t = load("a2tilde");
    const auto rep = fan_check_in_tits(a2t, cw(a2t, "p,q,r"), 0, 1);
    CHECK(rep.pass());
  }
  SUBCASE("B2 complete fan") {
    const CoxGroup b2 = load("b2");
    const auto rep = fan_check_in_tits(b2, cw(b2, "p,q"), 4, 0);
    CHECK(rep.pass());
    CHECK(rep.cones_checked == 6);  // B2 Catalan-type count
  }
  SUBCASE("A2 tilde to length 5") {
    const CoxGroup a2t = load("a2tilde");
    const auto rep = fan_check_in_tits(a2t, cw(a2t, "p,q,r"), 5, 2);
    CHECK(rep.pass());
  }
}

TEST_CASE("star_of_face on the explicit G2-tilde faces") {
  const CoxGroup g = load("g2tilde");
  const CoxWord c = cw(g, "s,r,t");
  const Elt v = elt(g, "s,r,t,s,r,s,r,s");
  REQUIRE(is_sortable(g, c, v));
  SUBCASE("J = {} gives w = v and the empty Coxeter element") {
    const auto [w, cox] = star_of_face(g, c, {v, {}});
    CHECK(w == v);
    CHECK(cox.empty());
  }
  SUBCASE("J = {r}: the element below is stsrsrs") {
    const auto [w, cox] = star_of_face(g, c, {v, {0}});
    CHECK(w == elt(g, "s,t,s,r,s,r,s"));
    CHECK(cox == CoxWord{0});
  }
  SUBCASE("J = {r,s}: the element below is st and Cox = rs, not sr") {
    const auto [w, cox] = star_of_face(g, c, {v, {0, 1}});
    CHECK(w == elt(g, "s,t"));
    CHECK(cox == CoxWord{0, 1});  // r before s
  }
  SUBCASE("a non-face is rejected") {
    CHECK_THROWS_AS(star_of_face(g, c, {elt(g, "s"), {2}}), NotAFace);
  }
}

TEST_CASE("verify_star") {
  const CoxGroup g = load("g2tilde");
  const CoxWord c = cw(g, "s,r,t");
  const Elt v = elt(g, "s,r,t,s,r,s,r,s");
  CHECK(verify_star(g, c, {v, {0}}).pass());
  CHECK(verify_star(g, c, {v, {0, 1}}).pass());
  CHECK(verify_star(g, c, {v, {}}).pass());
  SUBCASE("random B3 faces") {
    const CoxGroup b3 = load("b3");
    const CoxWord c3 = cw(b3, "r,s,t");
    int done = 0;
    for (const Elt& u : enumerate_sortables(b3, c3, 9)) {
      const auto ds = b3.right_descents(u);
      for (unsigned mask = 1; mask < (1u << ds.size()); ++mask) {
        std::vector<int> J;
        for (size_t i = 0; i < ds.size(); ++i)
          if (mask & (1u << i)) J.push_back(ds[i]);
        CHECK(verify_star(b3, c3, {u, J}).pass());
        if (++done >= 12) break;
      }
      if (done >= 12) break;
    }
    CHECK(done >= 12);
  }
}
