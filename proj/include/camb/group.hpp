#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "camb/cartan.hpp"
#include "camb/linalg.hpp"

namespace camb {

class CoxGroup;

/// Group element: exact matrix of the action on V (simple-root basis), its
/// inverse, and the canonical reduced word. Identity and ordering go through
/// the word, which is a deterministic function of the matrix.
struct Elt {
  Mat m, minv;
  std::vector<int> word;

  int length() const { return static_cast<int>(word.size()); }
  bool is_identity() const { return word.empty(); }

  friend bool operator==(const Elt& a, const Elt& b) { return a.word == b.word; }
  friend bool operator!=(const Elt& a, const Elt& b) { return a.word != b.word; }
  friend bool operator<(const Elt& a, const Elt& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  }
};

/// Positive roots index reflections; stored in simple-root coordinates.
bool root_is_positive(const Vec& r);
bool root_is_negative(const Vec& r);

class CoxGroup {
 public:
  explicit CoxGroup(CartanData cartan);

  int rank() const { return cartan_.rank(); }
  const CartanData& cartan() const { return cartan_; }
  const std::vector<std::string>& names() const { return cartan_.cox.names; }
  const std::string& name(int i) const { return cartan_.cox.names[i]; }
  int index_of(const std::string& name) const { return cartan_.cox.index_of(name); }
  int bond(int i, int j) const { return cartan_.cox.label(i, j); }

  const Mat& simple_mat(int i) const { return simple_[i]; }
  Vec simple_root(int i) const;

  Elt identity() const;
  Elt gen(int i) const;
  Elt from_word(const std::vector<int>& word) const;
  Elt from_names(const std::string& comma_separated) const;  // "p,q,r"; "" = identity
  std::string word_str(const Elt& e) const;
  std::string word_str(const std::vector<int>& w) const;

  Elt mul(const Elt& a, const Elt& b) const;
  Elt inv(const Elt& a) const;
  Elt mul_gen_left(int s, const Elt& a) const;
  Elt mul_gen_right(const Elt& a, int s) const;
  Elt from_matrix(Mat m) const;

  /// K(x, y) on V.
  Scalar form(const Vec& x, const Vec& y) const;
  /// beta^vee = 2 beta / K(beta, beta).
  Vec coroot(const Vec& beta) const;

  Vec act(const Elt& g, const Vec& root) const { return g.m.apply(root); }
  /// Dual action on V^* (coordinates in the basis dual to the simple roots).
  Vec act_dual(const Elt& g, const Vec& point) const { return g.minv.transpose().apply(point); }

  /// Reflection in the (positive) root beta, as a group element.
  Elt reflection(const Vec& beta) const;
  /// t applied to a vector: x - K(beta^vee, x) beta.
  Vec reflect(const Vec& beta, const Vec& x) const;

  bool right_descent(const Elt& g, int s) const;  // l(gs) < l(g)
  bool left_descent(const Elt& g, int s) const;   // l(sg) < l(g)  <=>  g >= s
  std::vector<int> right_descents(const Elt& g) const;
  std::vector<int> left_descents(const Elt& g) const;

  /// Reflection sequence t_i = a_1...a_i...a_1 of the canonical word, as
  /// positive roots, in order. These are exactly the inversions of g.
  std::vector<Vec> inversion_roots(const Elt& g) const;
  std::set<Vec, VecLess> inversion_set(const Elt& g) const;

  /// {g s g^-1 : s in S, l(gs) < l(g)} as positive roots.
  std::vector<Vec> cover_reflection_roots(const Elt& g) const;

  /// Unique minimal-length representative of W_J g.
  Elt min_coset_rep_left(const Elt& g, const std::vector<int>& J) const;
  /// Unique minimal-length representative of g W_J.
  Elt min_coset_rep_right(const Elt& g, const std::vector<int>& J) const;
  /// w_J in the factorization w = w_J * <J>w; satisfies inv(w_J) = inv(w) cap W_J.
  Elt parabolic_project(const Elt& g, const std::vector<int>& J) const;
  /// True iff the canonical word of g uses only letters in J.
  bool in_parabolic(const Elt& g, const std::vector<int>& J) const;

  /// All elements of length <= maxlen, sorted by (length, word).
  std::vector<Elt> elements_up_to(int maxlen) const;
  /// Entire group if it closes within cap elements.
  std::optional<std::vector<Elt>> full_enumeration(size_t cap = 200000) const;
  /// Entire standard parabolic W_J; throws if it does not close within cap.
  std::vector<Elt> parabolic_elements(const std::vector<int>& J, size_t cap = 200000) const;
  /// Longest element of the finite standard parabolic W_J.
  Elt longest_element(const std::vector<int>& J, size_t cap = 200000) const;

  /// Positive roots reachable from the simples by at most depth simple
  /// reflections, sorted.
  std::vector<Vec> roots_up_to_depth(int depth) const;

  /// Reflection length of the reflection with this positive root.
  int reflection_length(const Vec& beta) const;

 private:
  void canonicalize(Elt& e) const;

  CartanData cartan_;
  std::vector<Mat> simple_;
};

/// All generator indices 0..n-1.
std::vector<int> all_generators(const CoxGroup& g);
/// Set difference S \ {s} keeping order.
std::vector<int> without(const std::vector<int>& J, int s);

}  // namespace camb
