#include "camb/group.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace camb {

bool root_is_positive(const Vec& r) {
  bool some = false;
  for (const auto& x : r) {
    const int s = x.sign();
    if (s < 0) return false;
    if (s > 0) some = true;
  }
  return some;
}

bool root_is_negative(const Vec& r) {
  bool some = false;
  for (const auto& x : r) {
    const int s = x.sign();
    if (s > 0) return false;
    if (s < 0) some = true;
  }
  return some;
}

CoxGroup::CoxGroup(CartanData cartan) : cartan_(std::move(cartan)) {
  const int n = rank();
  simple_.reserve(n);
  for (int s = 0; s < n; ++s) {
    // s(alpha_j) = alpha_j - a_{s j} alpha_s.
    Mat m = Mat::identity(n);
    for (int j = 0; j < n; ++j) m.at(s, j) -= cartan_.A.at(s, j);
    simple_.push_back(std::move(m));
  }
}

Vec CoxGroup::simple_root(int i) const {
  Vec v(rank());
  v[i] = 1;
  return v;
}

Elt CoxGroup::identity() const {
  Elt e;
  e.m = Mat::identity(rank());
  e.minv = e.m;
  return e;
}

Elt CoxGroup::gen(int i) const {
  Elt e;
  e.m = simple_[i];
  e.minv = simple_[i];
  e.word = {i};
  return e;
}

void CoxGroup::canonicalize(Elt& e) const {
  // Strip the smallest-indexed right descent repeatedly; the canonical word
  // is the reversed strip sequence. Matrix-driven, so it works in infinite
  // groups and for non-reduced input words.
  const int n = rank();
  std::vector<int> stripped;
  Mat m = e.m;
  for (;;) {
    int s = -1;
    for (int j = 0; j < n; ++j) {
      // g(alpha_j) is column j of m; right descent iff it is a negative root.
      bool neg = false, pos = false;
      for (int i = 0; i < n; ++i) {
        const int sign = m.at(i, j).sign();
        if (sign < 0) neg = true;
        if (sign > 0) pos = true;
      }
      if (neg && !pos) {
        s = j;
        break;
      }
    }
    if (s < 0) break;
    m = m * simple_[s];
    stripped.push_back(s);
  }
  if (m != Mat::identity(n)) throw std::logic_error("canonicalize: matrix does not lie in W");
  e.word.assign(stripped.rbegin(), stripped.rend());
  // Rebuild minv from the reversed word (generators are involutions).
  Mat inv = Mat::identity(n);
  for (auto it = e.word.rbegin(); it != e.word.rend(); ++it) inv = inv * simple_[*it];
  e.minv = std::move(inv);
}

Elt CoxGroup::from_matrix(Mat m) const {
  Elt e;
  e.m = std::move(m);
  canonicalize(e);
  return e;
}

Elt CoxGroup::from_word(const std::vector<int>& word) const {
  Mat m = Mat::identity(rank());
  for (int s : word) {
    if (s < 0 || s >= rank()) throw std::invalid_argument("from_word: unknown generator index");
    m = m * simple_[s];
  }
  return from_matrix(std::move(m));
}

Elt CoxGroup::from_names(const std::string& csv) const {
  std::vector<int> word;
  std::string tok;
  std::stringstream ss(csv);
  while (std::getline(ss, tok, ',')) {
    // trim spaces
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    word.push_back(index_of(tok.substr(b, e - b + 1)));
  }
  return from_word(word);
}

std::string CoxGroup::word_str(const std::vector<int>& w) const {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += name(w[i]);
  }
  return out;
}

std::string CoxGroup::word_str(const Elt& e) const { return word_str(e.word); }

Elt CoxGroup::mul(const Elt& a, const Elt& b) const {
  Elt e;
  e.m = a.m * b.m;
  canonicalize(e);
  return e;
}

Elt CoxGroup::inv(const Elt& a) const {
  Elt e;
  e.m = a.minv;
  canonicalize(e);
  return e;
}

Elt CoxGroup::mul_gen_left(int s, const Elt& a) const {
  Elt e;
  e.m = simple_[s] * a.m;
  canonicalize(e);
  return e;
}

Elt CoxGroup::mul_gen_right(const Elt& a, int s) const {
  Elt e;
  e.m = a.m * simple_[s];
  canonicalize(e);
  return e;
}

Scalar CoxGroup::form(const Vec& x, const Vec& y) const {
  Scalar out;
  for (int i = 0; i < rank(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < rank(); ++j)
      if (!y[j].is_zero()) out += x[i] * cartan_.K.at(i, j) * y[j];
  }
  return out;
}

Vec CoxGroup::coroot(const Vec& beta) const {
  const Scalar len = form(beta, beta);
  if (len.is_zero()) throw std::domain_error("coroot: isotropic vector");
  const Scalar f = Scalar(2) / len;
  return f * beta;
}

Vec CoxGroup::reflect(const Vec& beta, const Vec& x) const {
  const Scalar coef = form(coroot(beta), x);
  Vec out = x;
  for (int i = 0; i < rank(); ++i) out[i] -= coef * beta[i];
  return out;
}

Elt CoxGroup::reflection(const Vec& beta) const {
  const int n = rank();
  Mat m(n, n);
  for (int j = 0; j < n; ++j) {
    Vec col = reflect(beta, simple_root(j));
    for (int i = 0; i < n; ++i) m.at(i, j) = col[i];
  }
  return from_matrix(std::move(m));
}

bool CoxGroup::right_descent(const Elt& g, int s) const {
  for (int i = 0; i < rank(); ++i)
    if (g.m.at(i, s).sign() > 0) return false;
  return true;  // column of a root matrix is never zero
}

bool CoxGroup::left_descent(const Elt& g, int s) const {
  // l(sg) < l(g) iff g^{-1}(alpha_s) is negative.
  for (int i = 0; i < rank(); ++i)
    if (g.minv.at(i, s).sign() > 0) return false;
  return true;
}

std::vector<int> CoxGroup::right_descents(const Elt& g) const {
  std::vector<int> out;
  for (int s = 0; s < rank(); ++s)
    if (right_descent(g, s)) out.push_back(s);
  return out;
}

std::vector<int> CoxGroup::left_descents(const Elt& g) const {
  std::vector<int> out;
  for (int s = 0; s < rank(); ++s)
    if (left_descent(g, s)) out.push_back(s);
  return out;
}

std::vector<Vec> CoxGroup::inversion_roots(const Elt& g) const {
  std::vector<Vec> out;
  out.reserve(g.word.size());
  Mat prefix = Mat::identity(rank());
  for (int s : g.word) {
    out.push_back(prefix.apply(simple_root(s)));
    prefix = prefix * simple_[s];
  }
  return out;
}

std::set<Vec, VecLess> CoxGroup::inversion_set(const Elt& g) const {
  auto roots = inversion_roots(g);
  return {roots.begin(), roots.end()};
}

std::vector<Vec> CoxGroup::cover_reflection_roots(const Elt& g) const {
  std::vector<Vec> out;
  for (int s : right_descents(g)) {
    // beta_{gsg^-1} = -g(alpha_s), positive because s is a right descent.
    Vec r = g.m.apply(simple_root(s));
    out.push_back(-r);
  }
  return out;
}

Elt CoxGroup::min_coset_rep_left(const Elt& g, const std::vector<int>& J) const {
  Elt x = g;
  for (;;) {
    int found = -1;
    for (int s : J)
      if (left_descent(x, s)) {
        found = s;
        break;
      }
    if (found < 0) return x;
    x = mul_gen_left(found, x);
  }
}

Elt CoxGroup::min_coset_rep_right(const Elt& g, const std::vector<int>& J) const {
  Elt x = g;
  for (;;) {
    int found = -1;
    for (int s : J)
      if (right_descent(x, s)) {
        found = s;
        break;
      }
    if (found < 0) return x;
    x = mul_gen_right(x, found);
  }
}

Elt CoxGroup::parabolic_project(const Elt& g, const std::vector<int>& J) const {
  const Elt rest = min_coset_rep_left(g, J);
  return mul(g, inv(rest));
}

bool CoxGroup::in_parabolic(const Elt& g, const std::vector<int>& J) const {
  for (int s : g.word)
    if (std::find(J.begin(), J.end(), s) == J.end()) return false;
  return true;
}

std::vector<Elt> CoxGroup::elements_up_to(int maxlen) const {
  std::vector<Elt> out{identity()};
  std::set<std::vector<int>> seen{{}};
  std::deque<Elt> queue{identity()};
  while (!queue.empty()) {
    Elt e = queue.front();
    queue.pop_front();
    if (e.length() >= maxlen) continue;
    for (int s = 0; s < rank(); ++s) {
      if (right_descent(e, s)) continue;
      Elt f = mul_gen_right(e, s);
      if (seen.insert(f.word).second) {
        out.push_back(f);
        queue.push_back(f);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Elt>> CoxGroup::full_enumeration(size_t cap) const {
  std::vector<Elt> out{identity()};
  std::set<std::vector<int>> seen{{}};
  std::deque<Elt> queue{identity()};
  while (!queue.empty()) {
    Elt e = queue.front();
    queue.pop_front();
    for (int s = 0; s < rank(); ++s) {
      if (right_descent(e, s)) continue;
      Elt f = mul_gen_right(e, s);
      if (seen.insert(f.word).second) {
        if (out.size() >= cap) return std::nullopt;
        out.push_back(f);
        queue.push_back(f);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elt> CoxGroup::parabolic_elements(const std::vector<int>& J, size_t cap) const {
  std::vector<Elt> out{identity()};
  std::set<std::vector<int>> seen{{}};
  std::deque<Elt> queue{identity()};
  while (!queue.empty()) {
    Elt e = queue.front();
    queue.pop_front();
    for (int s : J) {
      if (right_descent(e, s)) continue;
      Elt f = mul_gen_right(e, s);
      if (seen.insert(f.word).second) {
        if (out.size() >= cap) throw std::domain_error("parabolic_elements: W_J is not finite within cap");
        out.push_back(f);
        queue.push_back(f);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Elt CoxGroup::longest_element(const std::vector<int>& J, size_t cap) const {
  Elt x = identity();
  size_t steps = 0;
  for (;;) {
    int found = -1;
    for (int s : J)
      if (!right_descent(x, s)) {
        found = s;
        break;
      }
    if (found < 0) return x;
    x = mul_gen_right(x, found);
    if (++steps > cap) throw std::domain_error("longest_element: parabolic subgroup is not finite");
  }
}

std::vector<Vec> CoxGroup::roots_up_to_depth(int depth) const {
  std::set<Vec, VecLess> seen;
  std::deque<std::pair<Vec, int>> queue;
  for (int i = 0; i < rank(); ++i) {
    Vec a = simple_root(i);
    if (seen.insert(a).second) queue.emplace_back(a, 0);
  }
  while (!queue.empty()) {
    auto [r, d] = queue.front();
    queue.pop_front();
    if (d >= depth) continue;
    for (int s = 0; s < rank(); ++s) {
      Vec img = simple_[s].apply(r);
      if (!root_is_positive(img)) continue;
      if (seen.insert(img).second) queue.emplace_back(img, d + 1);
    }
  }
  return {seen.begin(), seen.end()};
}

int CoxGroup::reflection_length(const Vec& beta) const { return reflection(beta).length(); }

std::vector<int> all_generators(const CoxGroup& g) {
  std::vector<int> out(g.rank());
  for (int i = 0; i < g.rank(); ++i) out[i] = i;
  return out;
}

std::vector<int> without(const std::vector<int>& J, int s) {
  std::vector<int> out;
  out.reserve(J.size());
  for (int x : J)
    if (x != s) out.push_back(x);
  return out;
}

}  // namespace camb
