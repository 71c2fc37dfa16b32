#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "camb/forms.hpp"
#include "camb/group.hpp"
#include "camb/weak_order.hpp"

namespace camb {

struct NotSortable : std::runtime_error {
  NotSortable() : std::runtime_error("element is not c-sortable") {}
};
struct JoinUnavailable : std::runtime_error {
  JoinUnavailable() : std::runtime_error("join with s is not certified by any bound") {}
};
struct InfiniteGroup : std::runtime_error {
  InfiniteGroup() : std::runtime_error("operation requires a finite group") {}
};

/// One skip per generator of supp(c): the first omitted occurrence of r in
/// the scan of (s_1...s_n)^infty. position is i+1 where i letters were taken
/// before the omission; signed_root is the prefix image a_1...a_i(alpha_r),
/// which is -beta_t for a forced skip and +beta_t for an unforced one.
struct Skip {
  int position;
  int r;
  bool forced;
  Vec signed_root;

  Vec root() const { return forced ? -signed_root : signed_root; }
};

struct SortingWord {
  std::vector<int> letters;
  std::vector<int> block_lengths;  // letters taken per divider block, in order
  std::vector<Skip> skips;         // in discovery order

  /// Supports of the blocks, in order.
  std::vector<std::set<int>> block_supports() const;
  /// Weakly decreasing block supports = the element is c-sortable.
  bool nested() const;

  std::vector<Vec> forced_roots() const;    // fs_c(w) as positive roots, sorted
  std::vector<Vec> unforced_roots() const;  // ufs_c(w) as positive roots, sorted
};

/// Greedy leftmost extraction of the (s_1...s_n)-sorting word of w, with all
/// skips annotated. w must lie in the standard parabolic generated by c.
SortingWord sorting_word(const CoxGroup& g, const CoxWord& c, const Elt& w);

enum class SortMethod { Word, Recursive, Aligned };

bool is_sortable(const CoxGroup& g, const CoxWord& c, const Elt& w,
                 SortMethod method = SortMethod::Word);

/// pi_downarrow^c(w): the unique maximal c-sortable element below w.
Elt pidown(const CoxGroup& g, const CoxWord& c, const Elt& w);

/// Every value reachable by choosing any admissible initial letter at every
/// step of the recursion (Lemma "PidownWellDef" says the set is a singleton).
std::set<Elt> pidown_all_choices(const CoxGroup& g, const CoxWord& c, const Elt& w);

/// The n roots C_c^r(v) plus their negative part A_c (= -cover roots) and
/// positive part B_c (= unforced-skip roots).
struct CcData {
  std::map<int, Vec> C;   // generator -> signed root
  std::vector<Vec> A;     // negative members, as stored (negative vectors), sorted
  std::vector<Vec> B;     // positive members, sorted
};

/// Computed both by the defining recursion and from the skips of the sorting
/// word; throws std::logic_error if the two routes disagree and NotSortable
/// if v is not c-sortable.
CcData cc_data(const CoxGroup& g, const CoxWord& c, const Elt& v);

/// Meet / bounded join of c-sortable elements; asserts the result is
/// c-sortable (Thm. "meets and joins").
Elt sortable_meet(const CoxGroup& g, const CoxWord& c, const std::vector<Elt>& xs);
Elt sortable_join(const CoxGroup& g, const CoxWord& c, const std::vector<Elt>& xs, const Elt& bound);

/// The bijection of Thm. "c to scs" (s initial in c): v -> sv if v >= s,
/// else s v v  (s join v). The join needs a certificate: an explicit bound,
/// or a successful bounded search up to search_cap; otherwise JoinUnavailable.
Elt reflection_functor(const CoxGroup& g, const CoxWord& c, int s, const Elt& v,
                       const std::optional<Elt>& join_bound = std::nullopt, int search_cap = -1);
/// Inverse: x -> sx if x is not >= s, else x_{<s>}.
Elt reflection_functor_inverse(const CoxGroup& g, const CoxWord& c, int s, const Elt& x);

/// nc_c(v): product of the cover reflections of v in reflection-sequence
/// order of the c-sorting word.
Elt nc(const CoxGroup& g, const CoxWord& c, const Elt& v);

/// T-length (minimal number of reflections multiplying to x); finite W only.
std::map<std::vector<int>, int> reflection_length_table(const CoxGroup& g, size_t cap = 200000);

/// The interval [1, c]_T in absolute order, finite W only (brute force).
std::vector<Elt> absolute_interval(const CoxGroup& g, const CoxWord& c, size_t cap = 200000);

/// All c-sortable v with l(v) <= max_length, sorted by (length, word).
std::vector<Elt> enumerate_sortables(const CoxGroup& g, const CoxWord& c, int max_length);

}  // namespace camb
