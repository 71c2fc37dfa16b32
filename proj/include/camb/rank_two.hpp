#pragma once

#include <optional>
#include <vector>

#include "camb/group.hpp"

namespace camb {

struct CapTooSmall : std::runtime_error {
  explicit CapTooSmall(const std::string& w) : std::runtime_error(w) {}
};

/// Generalized rank-two parabolic subgroup, identified by its canonical
/// generator roots. m is the order of r1*r2; kInfiniteBond (0) means
/// infinite. plane_roots holds every ambient positive root found in the root
/// plane within the enumeration cap, in angular order from gamma1 to gamma2.
struct RankTwoSubgroup {
  Vec gamma1, gamma2;
  int m = kInfiniteBond;
  std::vector<Vec> plane_roots;
};

/// True iff beta lies in the span of b1 and b2.
bool in_plane(const Vec& b1, const Vec& b2, const Vec& beta);

/// Coordinates of beta in the basis (b1, b2); throws if beta is outside.
std::pair<Scalar, Scalar> plane_coords(const Vec& b1, const Vec& b2, const Vec& beta);

/// Sorts plane roots angularly (exact 2-D cross-product order). All inputs
/// must be positive roots in the plane of (b1, b2).
std::vector<Vec> sort_in_plane(const Vec& b1, const Vec& b2, std::vector<Vec> roots);

/// The generalized rank-two parabolic subgroup whose root plane is spanned by
/// the two given positive roots. Canonical generators are found as the two
/// angular extremes among ambient roots of depth <= depth_cap in the plane;
/// m by iterating the product up to m_cap. Throws CapTooSmall if m is
/// detected finite but fewer than m plane roots were found.
RankTwoSubgroup span_subgroup(const CoxGroup& g, const Vec& t1, const Vec& t2, int depth_cap = 16,
                              int m_cap = 64);

/// Roots of u_1..u_k (from the gamma1 end).
std::vector<Vec> reflection_prefix(const CoxGroup& g, const RankTwoSubgroup& sub, int k);
/// Roots of u_m, u_{m-1}, ..., u_{m-k+1} (from the gamma2 end).
std::vector<Vec> reflection_suffix(const CoxGroup& g, const RankTwoSubgroup& sub, int k);

struct SegmentType {
  enum Kind { Initial, Final, Neither } kind;
  int k = 0;
};

/// Classifies I (a subset of the subgroup's reflections, given by positive
/// roots) against the u-order. Initial wins when both apply.
SegmentType segment_type(const CoxGroup& g, const RankTwoSubgroup& sub, const std::vector<Vec>& I);

/// Exact local certificate: given roots of two *consecutive* reflections
/// u_a, u_{a+1} of a generalized rank-two parabolic (x = beta_{u_a} the
/// angularly lower one), decides whether a == 1, i.e. whether x is the bottom
/// canonical generator. t_{u_a}(beta_{u_{a+1}}) is a positive root iff a == 1.
/// Requires the pair to be noncommuting (throws std::logic_error otherwise).
bool chain_at_low_end(const CoxGroup& g, const Vec& x, const Vec& x_next);

/// Uniform-spacing sanity check for an angularly sorted chain: verifies
/// chain[j+2] == -t_{chain[j+1]}(chain[j]) for all j.
bool chain_uniformly_spaced(const CoxGroup& g, const std::vector<Vec>& chain);

/// Bounded heuristic for Prop. "para geom": searches for w with l(w) <= cap
/// and a pair {r,s} of simple generators such that both given roots map into
/// span(alpha_r, alpha_s) under w^-1. Returns the witness (w, {r,s}) or
/// nullopt (inconclusive beyond the cap; never a negative answer).
std::optional<std::pair<Elt, std::pair<int, int>>> is_true_parabolic(const CoxGroup& g, const Vec& t1,
                                                                     const Vec& t2, int length_cap);

}  // namespace camb
