#include "camb/weak_order.hpp"

#include <algorithm>
#include <deque>

namespace camb {

bool weak_leq(const CoxGroup& g, const Elt& x, const Elt& y) {
  if (x.length() > y.length()) return false;
  const Elt rest = g.from_matrix(x.minv * y.m);  // x^-1 y
  return x.length() + rest.length() == y.length();
}

std::vector<Elt> covers_down(const CoxGroup& g, const Elt& w) {
  std::vector<Elt> out;
  for (int s : g.right_descents(w)) out.push_back(g.mul_gen_right(w, s));
  return out;
}

std::vector<Elt> interval_below(const CoxGroup& g, const Elt& w) {
  std::set<std::vector<int>> seen{w.word};
  std::vector<Elt> out{w};
  std::deque<Elt> queue{w};
  while (!queue.empty()) {
    Elt e = queue.front();
    queue.pop_front();
    for (Elt& c : covers_down(g, e))
      if (seen.insert(c.word).second) {
        out.push_back(c);
        queue.push_back(std::move(c));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Elt meet(const CoxGroup& g, const Elt& x, const Elt& y) {
  const Elt& shorter = x.length() <= y.length() ? x : y;
  const Elt& other = x.length() <= y.length() ? y : x;
  std::vector<Elt> common;
  for (const Elt& v : interval_below(g, shorter))
    if (weak_leq(g, v, other)) common.push_back(v);
  // The unique maximal element; verified maximal against all.
  Elt best = common.front();
  for (const Elt& v : common)
    if (v.length() > best.length()) best = v;
  for (const Elt& v : common)
    if (!weak_leq(g, v, best)) throw std::logic_error("meet: common lower bounds have no maximum");
  return best;
}

Elt meet_many(const CoxGroup& g, const std::vector<Elt>& xs) {
  if (xs.empty()) throw std::invalid_argument("meet_many: empty set");
  Elt acc = xs.front();
  for (size_t i = 1; i < xs.size(); ++i) acc = meet(g, acc, xs[i]);
  return acc;
}

Elt join_bounded(const CoxGroup& g, const std::vector<Elt>& xs, const Elt& bound) {
  std::vector<Elt> ubs;
  for (const Elt& z : interval_below(g, bound)) {
    bool ok = true;
    for (const Elt& x : xs)
      if (!weak_leq(g, x, z)) {
        ok = false;
        break;
      }
    if (ok) ubs.push_back(z);
  }
  if (ubs.empty()) throw NoUpperBoundInInterval();
  // [e, bound] is a finite lattice, so the common upper bounds within it have
  // a minimum: a shortest one below every other.
  const Elt* best = &ubs.front();
  for (const Elt& z : ubs)
    if (z.length() < best->length()) best = &z;
  for (const Elt& z : ubs)
    if (!weak_leq(g, *best, z)) {
      // fall back to the meet of all upper bounds
      Elt m = meet_many(g, ubs);
      for (const Elt& x : xs)
        if (!weak_leq(g, x, m))
          throw std::logic_error("join_bounded: meet of upper bounds is not an upper bound");
      return m;
    }
  return *best;
}

std::optional<Elt> join_exists_search(const CoxGroup& g, const std::vector<Elt>& xs, int max_length) {
  std::optional<Elt> shortest;
  for (const Elt& z : g.elements_up_to(max_length)) {
    bool ok = true;
    for (const Elt& x : xs)
      if (!weak_leq(g, x, z)) {
        ok = false;
        break;
      }
    if (ok && (!shortest || z.length() < shortest->length())) shortest = z;
  }
  if (!shortest) return std::nullopt;
  return join_bounded(g, xs, *shortest);
}

bool is_join_irreducible(const CoxGroup& g, const Elt& w) { return g.right_descents(w).size() == 1; }

Elt join_rep_member(const CoxGroup& g, const Elt& w, int s) {
  if (!g.right_descent(w, s)) throw std::invalid_argument("join_rep_member: s is not a right descent of w");
  const Elt tw = g.mul_gen_right(w, s);
  std::vector<Elt> cut;
  for (const Elt& v : interval_below(g, w))
    if (!weak_leq(g, v, tw)) cut.push_back(v);
  // Lemma "BelowWAboveT": the set is an interval [j, w]; its minimum is the
  // meet of its members.
  Elt j = meet_many(g, cut);
  bool found = false;
  for (const Elt& v : cut)
    if (v == j) found = true;
  if (!found) throw std::logic_error("join_rep_member: cut set is not an interval");
  return j;
}

std::vector<Elt> canonical_join_representation(const CoxGroup& g, const Elt& w) {
  std::vector<Elt> out;
  for (int s : g.right_descents(w)) out.push_back(join_rep_member(g, w, s));
  std::sort(out.begin(), out.end());
  return out;
}

bool antichain_leq(const CoxGroup& g, const std::vector<Elt>& a, const std::vector<Elt>& b) {
  for (const Elt& x : a) {
    bool ok = false;
    for (const Elt& y : b)
      if (weak_leq(g, x, y)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

bool is_antichain(const CoxGroup& g, const std::vector<Elt>& xs) {
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = 0; j < xs.size(); ++j)
      if (i != j && weak_leq(g, xs[i], xs[j])) return false;
  return true;
}

}  // namespace camb
