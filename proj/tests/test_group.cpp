#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "camb/weak_order.hpp"
#include "helpers.hpp"

using namespace camb;
using camb::testing::cw;
using camb::testing::elt;
using camb::testing::load;

TEST_CASE("simple reflection action") {
  const CoxGroup b2 = load("b2");
  // s alpha_s = -alpha_s
  CHECK(b2.act(b2.gen(0), b2.simple_root(0)) == -b2.simple_root(0));
  // p(alpha_q) = alpha_q - a_pq alpha_p = alpha_q + 2 alpha_p in the B2 example
  Vec want(2);
  want[0] = 2;
  want[1] = 1;
  CHECK(b2.act(b2.gen(0), b2.simple_root(1)) == want);
}

TEST_CASE("s beta_t = beta_{sts} for t != s") {
  const CoxGroup b3 = load("b3");
  const Elt w0 = b3.longest_element(all_generators(b3));
  for (const Vec& beta : b3.inversion_roots(w0)) {
    const Elt t = b3.reflection(beta);
    for (int s = 0; s < 3; ++s) {
      if (beta == b3.simple_root(s)) continue;
      const Vec img = b3.act(b3.gen(s), beta);
      CHECK(root_is_positive(img));
      const Elt sts = b3.mul(b3.mul_gen_left(s, t), b3.gen(s));
      CHECK(b3.reflection(img) == sts);
    }
  }
}

TEST_CASE("matrices preserve K") {
  const CoxGroup g = load("h542");
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<int> word;
    for (int i = 0; i < 7; ++i) word.push_back(pick(rng));
    const Elt w = g.from_word(word);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Vec a = g.act(w, g.simple_root(i));
        const Vec b = g.act(w, g.simple_root(j));
        CHECK(g.form(a, b) == g.cartan().K.at(i, j));
      }
  }
}

TEST_CASE("length, inversions, reflection sequence") {
  const CoxGroup b2 = load("b2");
  SUBCASE("identity") {
    const Elt e = b2.identity();
    CHECK(e.length() == 0);
    CHECK(b2.inversion_roots(e).empty());
  }
  SUBCASE("inversions of pq are p and pqp") {
    const Elt pq = elt(b2, "p,q");
    const auto inv = b2.inversion_set(pq);
    REQUIRE(inv.size() == 2);
    CHECK(inv.count(b2.simple_root(0)));
    CHECK(inv.count(b2.act(b2.gen(0), b2.simple_root(1))));  // beta_pqp = p(alpha_q)
  }
  SUBCASE("distinctness and count on every element of B2") {
    const auto all_of_b2 = *b2.full_enumeration();
    for (const Elt& w : all_of_b2) {
      const auto roots = b2.inversion_roots(w);
      const std::set<Vec, VecLess> dedup(roots.begin(), roots.end());
      CHECK(static_cast<int>(dedup.size()) == w.length());
    }
  }
}

TEST_CASE("inversions of qp in A2 are q and qpq") {
  const CoxGroup a2 = load("a2");
  const Elt qp = elt(a2, "q,p");
  const auto inv = a2.inversion_set(qp);
  REQUIRE(inv.size() == 2);
  CHECK(inv.count(a2.simple_root(1)));
  CHECK(inv.count(a2.act(a2.gen(1), a2.simple_root(0))));
}

TEST_CASE("multiplication, inversion, from_word") {
  const CoxGroup a2 = load("a2");
  const CoxGroup b2 = load("b2");
  // pqpq reduces to qp in A2 (braid pqp=qpq), but is reduced in B2.
  CHECK(a2.from_names("p,q,p,q") == elt(a2, "q,p"));
  CHECK(a2.from_names("p,q,p,q").length() == 2);
  CHECK(b2.from_names("p,q,p,q").length() == 4);
  const Elt g1 = elt(a2, "p,q");
  CHECK(a2.mul(g1, a2.inv(g1)) == a2.identity());
  CHECK_THROWS_AS(a2.from_names("p,z"), std::invalid_argument);
}

TEST_CASE("canonical word is deterministic and matrix-driven") {
  const CoxGroup a3 = load("a3");
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> word;
    for (int i = 0; i < 9; ++i) word.push_back(pick(rng));
    const Elt w = a3.from_word(word);
    // rebuilding from the canonical word gives the same element and word
    const Elt again = a3.from_word(w.word);
    CHECK(again.word == w.word);
    CHECK(again.m == w.m);
    CHECK(static_cast<int>(w.word.size()) == w.length());
  }
}

TEST_CASE("cover reflections") {
  const CoxGroup a2 = load("a2");
  CHECK(a2.cover_reflection_roots(a2.identity()).empty());
  SUBCASE("cov(pq) = {pqp}") {
    const auto cov = a2.cover_reflection_roots(elt(a2, "p,q"));
    REQUIRE(cov.size() == 1);
    CHECK(a2.reflection(cov[0]) == elt(a2, "p,q,p"));
  }
  SUBCASE("cov(pqp) = {p, q}") {
    const auto cov = a2.cover_reflection_roots(elt(a2, "p,q,p"));
    const std::set<Vec, VecLess> cov_set(cov.begin(), cov.end());
    REQUIRE(cov_set.size() == 2);
    CHECK(cov_set.count(a2.simple_root(0)));
    CHECK(cov_set.count(a2.simple_root(1)));
  }
}

TEST_CASE("AboveBelow: left descent, weak order above s, inversion membership") {
  for (const char* name : {"b3", "a2tilde"}) {
    const CoxGroup g = load(name);
    const auto elements = std::string(name) == "b3" ? *g.full_enumeration() : g.elements_up_to(8);
    for (const Elt& w : elements) {
      for (int s = 0; s < g.rank(); ++s) {
        const bool above = weak_leq(g, g.gen(s), w);
        CHECK(above == g.left_descent(w, s));
        CHECK(above == (g.inversion_set(w).count(g.simple_root(s)) > 0));
      }
      // inv(w) = {s} cup s inv(sw) s when l(sw) < l(w)
      for (int s : g.left_descents(w)) {
        const Elt sw = g.mul_gen_left(s, w);
        std::set<Vec, VecLess> expect{g.simple_root(s)};
        for (const Vec& r : g.inversion_roots(sw)) {
          Vec img = g.act(g.gen(s), r);
          if (root_is_negative(img)) img = -img;
          expect.insert(img);
        }
        CHECK(expect == g.inversion_set(w));
      }
    }
  }
}

TEST_CASE("parabolic projection and minimal coset representatives") {
  const CoxGroup a2 = load("a2");
  const CoxGroup a3 = load("a3");
  SUBCASE("w in W_J projects to itself") {
    const Elt w = elt(a3, "p,q,p");
    CHECK(a3.parabolic_project(w, {0, 1}) == w);
  }
  SUBCASE("(qp)_{p} = e") { CHECK(a2.parabolic_project(elt(a2, "q,p"), {0}) == a2.identity()); }
  SUBCASE("order preservation of projection on all pairs of B2") {
    const CoxGroup b2 = load("b2");
    const auto all = *b2.full_enumeration();
    for (const Elt& x : all)
      for (const Elt& y : all)
        if (weak_leq(b2, x, y))
          for (int s = 0; s < 2; ++s)
            CHECK(weak_leq(b2, b2.parabolic_project(x, {s}), b2.parabolic_project(y, {s})));
  }
  SUBCASE("min coset representative of (pq)W_{q} is p") {
    CHECK(a2.min_coset_rep_right(elt(a2, "p,q"), {1}) == elt(a2, "p"));
    CHECK(a2.min_coset_rep_right(a2.identity(), {1}) == a2.identity());
  }
  SUBCASE("factorization w = w_J <J>w with additive lengths; inv(w_J) = inv(w) cap W_J") {
    const CoxGroup b3 = load("b3");
    const auto all_of_b3 = *b3.full_enumeration();
    for (const Elt& w : all_of_b3)
      for (unsigned mask = 0; mask < 8; ++mask) {
        std::vector<int> J;
        for (int i = 0; i < 3; ++i)
          if (mask & (1u << i)) J.push_back(i);
        const Elt rest = b3.min_coset_rep_left(w, J);
        const Elt wj = b3.parabolic_project(w, J);
        CHECK(b3.mul(wj, rest) == w);
        CHECK(wj.length() + rest.length() == w.length());
        CHECK(b3.in_parabolic(wj, J));
        std::set<Vec, VecLess> expect;
        for (const Vec& r : b3.inversion_roots(w))
          if (b3.in_parabolic(b3.reflection(r), J)) expect.insert(r);
        CHECK(expect == b3.inversion_set(wj));
      }
  }
}

TEST_CASE("Lemma span inv s: beta_{wsw^-1} in the positive span of alpha_s and inv(w)") {
  const CoxGroup a3 = load("a3");
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int s = 0; s < 3; ++s) {
    const std::vector<int> J = without(all_generators(a3), s);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<int> word;
      for (int i = 0; i < 6; ++i) {
        int x = pick(rng);
        if (x != s) word.push_back(x);
      }
      const Elt w = a3.from_word(word);
      REQUIRE(a3.in_parabolic(w, J));
      Vec target = a3.act(w, a3.simple_root(s));
      if (root_is_negative(target)) target = -target;
      std::vector<Vec> gens{a3.simple_root(s)};
      for (const Vec& r : a3.inversion_roots(w)) gens.push_back(r);
      CHECK(camb::testing::in_positive_cone(a3, target, gens));
    }
  }
}

TEST_CASE("minimal right coset representatives map J into positive roots") {
  const CoxGroup b3 = load("b3");
  for (const Elt& w : b3.elements_up_to(4))
    for (unsigned mask = 1; mask < 8; ++mask) {
      std::vector<int> J;
      for (int i = 0; i < 3; ++i)
        if (mask & (1u << i)) J.push_back(i);
      if (b3.min_coset_rep_right(w, J) != w) continue;
      for (int s : J) CHECK(root_is_positive(b3.act(w, b3.simple_root(s))));
    }
}

TEST_CASE("dual action pairs correctly with the root action") {
  const CoxGroup g = load("g2tilde");
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, 2), coord(-3, 3);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<int> word;
    for (int i = 0; i < 6; ++i) word.push_back(pick(rng));
    const Elt w = g.from_word(word);
    Vec x(3), y(3);
    for (int i = 0; i < 3; ++i) {
      x[i] = coord(rng);
      y[i] = coord(rng);
    }
    // <w x, w y> = <x, y>: the pairing is the coordinate dot product
    const Vec wx = g.act_dual(w, x);
    const Vec wy = g.act(w, y);
    Scalar lhs, rhs;
    for (int i = 0; i < 3; ++i) {
      lhs += wx[i] * wy[i];
      rhs += x[i] * y[i];
    }
    CHECK(lhs == rhs);
  }
}
