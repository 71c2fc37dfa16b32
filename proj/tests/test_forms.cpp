#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "camb/forms.hpp"
#include "helpers.hpp"

using namespace camb;
using camb::testing::cw;
using camb::testing::elt;
using camb::testing::load;

TEST_CASE("Euler form defining table") {
  const CoxGroup b3 = load("b3");
  const CoxWord c = cw(b3, "r,s,t");
  for (int i = 0; i < 3; ++i) {
    Vec cor(3);
    cor[i] = 1;
    CHECK(euler_form(b3, c, cor, b3.simple_root(i)) == Scalar(1));
    for (int j = 0; j < 3; ++j) {
      if (i < j) CHECK(euler_form(b3, c, cor, b3.simple_root(j)).is_zero());
      if (i > j) CHECK(euler_form(b3, c, cor, b3.simple_root(j)) == b3.cartan().A.at(i, j));
    }
  }
}

TEST_CASE("symmetrization of E_c equals K on random root pairs in B3") {
  const CoxGroup b3 = load("b3");
  const CoxWord c = cw(b3, "s,t,r");
  const Elt w0 = b3.longest_element(all_generators(b3));
  const auto roots = b3.inversion_roots(w0);
  std::mt19937 rng(11);
  std::uniform_int_distribution<size_t> pick(0, roots.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const Vec& x = roots[pick(rng)];
    const Vec& y = roots[pick(rng)];
    CHECK(euler_form_roots(b3, c, x, y) + euler_form_roots(b3, c, y, x) == b3.form(x, y));
  }
}

TEST_CASE("Euler form independent of the reduced word for c") {
  const CoxGroup a3 = load("a3");
  // p and r commute: p,q,r vs r,q,p is NOT commutation-equivalent, but
  // p,r swaps are: compare p,r-admissible words of the same Coxeter element.
  const FormsContext f1 = build_forms(a3, cw(a3, "p,r,q"));
  const FormsContext f2 = build_forms(a3, cw(a3, "r,p,q"));
  CHECK(f1.Ev == f2.Ev);
  CHECK(f1.Omega == f2.Omega);
}

TEST_CASE("omega examples") {
  SUBCASE("skew symmetry") {
    const CoxGroup b3 = load("b3");
    const CoxWord c = cw(b3, "r,s,t");
    const Elt w0 = b3.longest_element(all_generators(b3));
    for (const Vec& beta : b3.inversion_roots(w0)) CHECK(omega(b3, c, beta, beta).is_zero());
  }
  SUBCASE("B2 with the example Cartan and delta: omega_pq(alpha_p, alpha_q) = -K(alpha_p, alpha_q) = 1") {
    const CoxGroup b2 = load("b2");
    const CoxWord c = cw(b2, "p,q");
    // the group file carries the figure's delta = (1/2, 1)
    CHECK(b2.cartan().delta[0] == Scalar(Rat(1, 2)));
    CHECK(omega(b2, c, b2.simple_root(0), b2.simple_root(1)) == -b2.cartan().K.at(0, 1));
    CHECK(omega(b2, c, b2.simple_root(0), b2.simple_root(1)) == Scalar(1));
  }
  SUBCASE("type A: omega_c(beta_(ij), beta_(jk)) = omega_c(alpha_{j-1}, alpha_j)") {
    const CoxGroup a3 = load("a3");
    for (const std::string& cword : {std::string("p,q,r"), std::string("r,q,p"), std::string("q,p,r")}) {
      const CoxWord c = cw(a3, cword);
      // beta_(13) = alpha_1 + alpha_2 (j = 3 has j-1 = 2): pairs ((13),(34))
      // correspond to alpha_2-vs-alpha_3 and so on; spot-check (12),(23) and
      // (13),(34) patterns realized by root sums.
      Vec b12 = a3.simple_root(0);
      Vec b23 = a3.simple_root(1);
      CHECK(omega(a3, c, b12, b23) == omega(a3, c, a3.simple_root(0), a3.simple_root(1)));
      Vec b13 = a3.simple_root(0) + a3.simple_root(1);
      Vec b34 = a3.simple_root(2);
      CHECK(omega(a3, c, b13, b34) == omega(a3, c, a3.simple_root(1), a3.simple_root(2)));
      Vec b24 = a3.simple_root(1) + a3.simple_root(2);
      CHECK(omega(a3, c, b12, b24) == omega(a3, c, a3.simple_root(0), a3.simple_root(1)));
    }
  }
}

TEST_CASE("compatible_reflection_sequence") {
  const CoxGroup h = load("h542");
  const CoxWord c = cw(h, "r,s,t");
  SUBCASE("empty word") { CHECK(compatible_reflection_sequence(h, c, {})); }
  SUBCASE("the rst-sorting word rstrsts in the (5,4,2) group") {
    const std::vector<int> word{0, 1, 2, 0, 1, 2, 1};
    REQUIRE(h.from_word(word).length() == 7);
    CHECK(compatible_reflection_sequence(h, c, word));
  }
  SUBCASE("A2: word q,p is not pq-compatible") {
    const CoxGroup a2 = load("a2");
    CHECK(!compatible_reflection_sequence(a2, cw(a2, "p,q"), {1, 0}));
  }
  SUBCASE("non-reduced words are rejected") {
    CHECK_THROWS_AS(compatible_reflection_sequence(h, c, std::vector<int>{0, 0}), NotReduced);
  }
}

TEST_CASE("zeta") {
  SUBCASE("rank restriction") {
    const CoxGroup a2 = load("a2");
    CHECK_THROWS_AS(zeta(a2, cw(a2, "p,q")), RankNotThree);
  }
  SUBCASE("zeta is a (-1)-eigenvector, normalized and oriented") {
    for (const char* name : {"a2tilde", "b3", "g2tilde", "h542"}) {
      const CoxGroup g = load(name);
      const CoxWord c{0, 1, 2};
      const Vec z = zeta(g, c);
      const Elt ce = cox_elt(g, c);
      CHECK(g.act(ce, z) == -z);
      // orientation: omega sign = det sign on the first noncommuting pair
      const FormsContext f = build_forms(g, c);
      bool done = false;
      for (int i = 0; i < 3 && !done; ++i)
        for (int j = i + 1; j < 3 && !done; ++j) {
          if (g.bond(i, j) == 2) continue;
          CHECK(eval_form(f.Omega, g.simple_root(i), g.simple_root(j)).sign() ==
                det3(g.simple_root(i), g.simple_root(j), z).sign());
          done = true;
        }
    }
  }
  SUBCASE("sign omega = sign det for all pairs of simple roots") {
    const CoxGroup g = load("g2tilde");
    const CoxWord c = cw(g, "t,s,r");
    const Vec z = zeta(g, c);
    const FormsContext f = build_forms(g, c);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(eval_form(f.Omega, g.simple_root(i), g.simple_root(j)).sign() ==
              det3(g.simple_root(i), g.simple_root(j), z).sign());
  }
  SUBCASE("G2 tilde, c=tsr: zeta lies in the positive span of the simple roots") {
    const CoxGroup g = load("g2tilde");
    const Vec z = zeta(g, cw(g, "t,s,r"));
    // up to overall sign: all coordinates strictly one sign
    int pos = 0, neg = 0;
    for (const Scalar& x : z) (x.sign() > 0 ? pos : neg) += 1;
    CHECK((pos == 3 || neg == 3));
  }
  SUBCASE("(5,4,2): reflection-sequence roots 3 and 4 of rstrsts are collinear with zeta") {
    const CoxGroup h = load("h542");
    const CoxWord c = cw(h, "r,s,t");
    const Vec z = zeta(h, c);
    const std::vector<int> word{0, 1, 2, 0, 1, 2, 1};
    const Elt w = h.from_word(word);
    const auto seq = h.inversion_roots(w);
    REQUIRE(seq.size() == 7);
    // t_3 and t_4 commute and their omega vanishes: the three rays are coplanar
    CHECK(omega(h, c, seq[2], seq[3]).is_zero());
    CHECK(h.reflect(seq[2], seq[3]) == seq[3]);
    CHECK(det3(seq[2], seq[3], z).is_zero());
  }
}

TEST_CASE("Lemma Ec invariant and omega invariance under initial/final conjugation") {
  const CoxGroup g = load("g2tilde");
  for (const std::string& cword : {std::string("r,s,t"), std::string("s,r,t"), std::string("t,s,r")}) {
    const CoxWord c = cw(g, cword);
    const FormsContext f = build_forms(g, c);
    const int s = c.front();
    const FormsContext fs = build_forms(g, rotate_initial(g, c, s));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Vec a = g.act(g.gen(s), g.simple_root(i));
        const Vec b = g.act(g.gen(s), g.simple_root(j));
        CHECK(eval_form(f.Eroot, g.simple_root(i), g.simple_root(j)) == eval_form(fs.Eroot, a, b));
        CHECK(eval_form(f.Omega, g.simple_root(i), g.simple_root(j)) == eval_form(fs.Omega, a, b));
      }
  }
}

TEST_CASE("omega restriction to V_J is omega of the restricted Coxeter element") {
  const CoxGroup b3 = load("b3");
  const CoxWord c = cw(b3, "s,r,t");
  const FormsContext f = build_forms(b3, c);
  for (unsigned mask = 1; mask < 7; ++mask) {
    std::vector<int> J;
    for (int i = 0; i < 3; ++i)
      if (mask & (1u << i)) J.push_back(i);
    const FormsContext fj = build_forms(b3, restrict_cox(c, J));
    for (int i : J)
      for (int j : J) CHECK(f.Omega.at(i, j) == fj.Omega.at(i, j));
  }
}

TEST_CASE("omega negativity/positivity for initial/final letters") {
  const CoxGroup b3 = load("b3");
  const CoxWord c = cw(b3, "r,s,t");
  const FormsContext f = build_forms(b3, c);
  const Elt w0 = b3.longest_element(all_generators(b3));
  for (const Vec& beta : b3.inversion_roots(w0)) {
    const int s_init = c.front();
    const int sg = eval_form(f.Omega, b3.simple_root(s_init), beta).sign();
    CHECK(sg >= 0);
    if (sg == 0 && beta != b3.simple_root(s_init))
      CHECK(b3.reflect(b3.simple_root(s_init), beta) == beta);
    const int s_fin = c.back();
    const int sg2 = eval_form(f.Omega, b3.simple_root(s_fin), beta).sign();
    CHECK(sg2 <= 0);
    if (sg2 == 0 && beta != b3.simple_root(s_fin))
      CHECK(b3.reflect(b3.simple_root(s_fin), beta) == beta);
  }
}
