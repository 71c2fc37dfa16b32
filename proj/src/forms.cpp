#include "camb/forms.hpp"

#include <algorithm>

namespace camb {

void check_cox_word(const CoxGroup& g, const CoxWord& c) {
  std::vector<bool> seen(g.rank(), false);
  for (int s : c) {
    if (s < 0 || s >= g.rank()) throw std::invalid_argument("CoxWord: bad generator index");
    if (seen[s]) throw std::invalid_argument("CoxWord: repeated generator");
    seen[s] = true;
  }
}

bool is_initial(const CoxGroup& g, const CoxWord& c, int s) {
  for (int x : c) {
    if (x == s) return true;
    if (g.bond(x, s) != 2) return false;
  }
  return false;
}

bool is_final(const CoxGroup& g, const CoxWord& c, int s) {
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (*it == s) return true;
    if (g.bond(*it, s) != 2) return false;
  }
  return false;
}

std::vector<int> initial_letters(const CoxGroup& g, const CoxWord& c) {
  std::vector<int> out;
  for (int s : c)
    if (is_initial(g, c, s)) out.push_back(s);
  return out;
}

CoxWord rotate_initial(const CoxGroup& g, const CoxWord& c, int s) {
  if (!is_initial(g, c, s)) throw std::invalid_argument("rotate_initial: letter is not initial");
  CoxWord out;
  for (int x : c)
    if (x != s) out.push_back(x);
  out.push_back(s);
  return out;
}

CoxWord restrict_cox(const CoxWord& c, const std::vector<int>& J) {
  CoxWord out;
  for (int x : c)
    if (std::find(J.begin(), J.end(), x) != J.end()) out.push_back(x);
  return out;
}

Elt cox_elt(const CoxGroup& g, const CoxWord& c) { return g.from_word(c); }

FormsContext build_forms(const CoxGroup& g, const CoxWord& c) {
  check_cox_word(g, c);
  const int n = g.rank();
  std::vector<int> pos(n, -1);
  for (size_t k = 0; k < c.size(); ++k) pos[c[k]] = static_cast<int>(k);
  FormsContext f{Mat(n, n), Mat(n, n), Mat(n, n)};
  for (int i = 0; i < n; ++i) {
    if (pos[i] < 0) continue;
    for (int j = 0; j < n; ++j) {
      if (pos[j] < 0) continue;
      Scalar ev;
      if (pos[i] > pos[j])
        ev = g.cartan().A.at(i, j);
      else if (i == j)
        ev = 1;
      f.Ev.at(i, j) = ev;
      f.Eroot.at(i, j) = g.cartan().delta[i] * ev;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) f.Omega.at(i, j) = f.Eroot.at(i, j) - f.Eroot.at(j, i);
  return f;
}

Scalar euler_form(const CoxGroup& g, const CoxWord& c, const Vec& x_coroot, const Vec& y) {
  return eval_form(build_forms(g, c).Ev, x_coroot, y);
}

Scalar euler_form_roots(const CoxGroup& g, const CoxWord& c, const Vec& x, const Vec& y) {
  return eval_form(build_forms(g, c).Eroot, x, y);
}

Scalar omega(const CoxGroup& g, const CoxWord& c, const Vec& x, const Vec& y) {
  return eval_form(build_forms(g, c).Omega, x, y);
}

bool compatible_reflection_sequence(const CoxGroup& g, const CoxWord& c, const std::vector<int>& word) {
  const Elt w = g.from_word(word);
  if (w.length() != static_cast<int>(word.size())) throw NotReduced();
  const FormsContext f = build_forms(g, c);
  std::vector<Vec> seq;
  Mat prefix = Mat::identity(g.rank());
  for (int s : word) {
    seq.push_back(prefix.apply(g.simple_root(s)));
    prefix = prefix * g.simple_mat(s);
  }
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j) {
      const int sign = eval_form(f.Omega, seq[i], seq[j]).sign();
      if (sign < 0) return false;
      if (sign == 0) {
        // equality allowed only when the reflections commute
        if (g.reflect(seq[i], seq[j]) != seq[j]) return false;
      }
    }
  return true;
}

Scalar det3(const Vec& x, const Vec& y, const Vec& z) {
  Mat m(3, 3);
  for (int i = 0; i < 3; ++i) {
    m.at(i, 0) = x[i];
    m.at(i, 1) = y[i];
    m.at(i, 2) = z[i];
  }
  return det(std::move(m));
}

Vec zeta(const CoxGroup& g, const CoxWord& c) {
  if (g.rank() != 3 || c.size() != 3) throw RankNotThree();
  const Elt ce = cox_elt(g, c);
  Mat m = ce.m;
  for (int i = 0; i < 3; ++i) m.at(i, i) += 1;
  const auto ker = kernel(std::move(m));
  if (ker.empty()) throw std::logic_error("zeta: c has no (-1)-eigenvector");
  Vec z = ker.front();
  for (int i = 0; i < 3; ++i)
    if (!z[i].is_zero()) {
      z = z[i].inverse() * z;
      break;
    }
  // Orientation: agree with omega_c on the first noncommuting simple pair.
  const FormsContext f = build_forms(g, c);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      if (g.bond(i, j) == 2) continue;
      const int so = eval_form(f.Omega, g.simple_root(i), g.simple_root(j)).sign();
      const int sd = det3(g.simple_root(i), g.simple_root(j), z).sign();
      if (so == 0 || sd == 0) throw std::logic_error("zeta: degenerate orientation pair");
      if (so != sd)
        for (auto& x : z) x = -x;
      return z;
    }
  throw std::logic_error("zeta: all simple pairs commute");
}

}  // namespace camb
