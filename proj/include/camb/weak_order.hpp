#pragma once

#include <optional>
#include <vector>

#include "camb/group.hpp"

namespace camb {

/// x <= y in (right) weak order: l(x) + l(x^-1 y) == l(y). Equivalent to
/// inv(x) subseteq inv(y).
bool weak_leq(const CoxGroup& g, const Elt& x, const Elt& y);

/// Elements covered by w: { ws : s a right descent of w }.
std::vector<Elt> covers_down(const CoxGroup& g, const Elt& w);

/// All x <= w, by breadth-first descent through covers; sorted.
std::vector<Elt> interval_below(const CoxGroup& g, const Elt& w);

/// Maximum common lower bound. Always exists; the weak order is a complete
/// meet-semilattice.
Elt meet(const CoxGroup& g, const Elt& x, const Elt& y);
Elt meet_many(const CoxGroup& g, const std::vector<Elt>& xs);

struct NoUpperBoundInInterval : std::runtime_error {
  NoUpperBoundInInterval() : std::runtime_error("no common upper bound below the given bound") {}
};

/// Least upper bound within [e, bound]; throws NoUpperBoundInInterval when no
/// common upper bound <= bound exists. Correct unconditionally whenever the
/// join exists and is <= bound.
Elt join_bounded(const CoxGroup& g, const std::vector<Elt>& xs, const Elt& bound);

/// Bounded search: if some common upper bound of length <= max_length exists,
/// returns the join (via join_bounded on the shortest such bound); otherwise
/// nullopt ("Undetermined" - nonexistence is never claimed).
std::optional<Elt> join_exists_search(const CoxGroup& g, const std::vector<Elt>& xs, int max_length);

/// |cov(w)| == 1.
bool is_join_irreducible(const CoxGroup& g, const Elt& w);

/// The minimum of { v <= w : v such that v is not <= ws }, for the right
/// descent s (cover reflection t = wsw^-1). By Lemma "BelowWAboveT" the set
/// is an interval [j, w].
Elt join_rep_member(const CoxGroup& g, const Elt& w, int right_descent_s);

/// Canonical join representation { j(w,t) : t in cov(w) }, sorted. Every
/// member is join-irreducible; cov(w) is the disjoint union of their cover
/// reflections.
std::vector<Elt> canonical_join_representation(const CoxGroup& g, const Elt& w);

/// A <=< B : every a in A lies below some b in B.
bool antichain_leq(const CoxGroup& g, const std::vector<Elt>& a, const std::vector<Elt>& b);

/// True iff the elements are pairwise incomparable.
bool is_antichain(const CoxGroup& g, const std::vector<Elt>& xs);

}  // namespace camb
