#pragma once

#include <string>
#include <vector>

#include "camb/sortable.hpp"

namespace camb {

/// Full-dimensional simplicial Cambrian cone in V*: inward normals C_c(v).
struct Cone {
  Elt v;
  std::vector<Vec> normals;
};

Cone cone_of(const CoxGroup& g, const CoxWord& c, const Elt& v);

/// Cached combinatorial data for chamber membership tests.
struct ConeCtx {
  Elt v;
  std::set<Vec, VecLess> cov;  // cover-reflection roots of v
  std::set<Vec, VecLess> ufs;  // unforced-skip roots of v
};
ConeCtx make_cone_ctx(const CoxGroup& g, const CoxWord& c, const Elt& v);

/// wD subseteq Cone_c(v), decided combinatorially (Thm. "comb classes"):
/// cov(v) subseteq inv(w) and ufs_c(v) cap inv(w) empty.
bool chamber_in_cone(const CoxGroup& g, const ConeCtx& cone, const Elt& w);
bool chamber_in_cone(const CoxGroup& g, const CoxWord& c, const Elt& v, const Elt& w);

struct TitsResult {
  enum Kind { InTits, Boundary, NotInTits } kind;
  Elt w;      // for InTits/Boundary: x in wD
  int steps;  // descent steps used (== cap when NotInTits; inconclusive)
};

/// Descent through the chambers: repeatedly reflect by a generator with
/// <x, alpha_s> < 0. Boundary means the terminal point lies on a wall of its
/// chamber. NotInTits is inconclusive (cap reached).
TitsResult tits_membership(const CoxGroup& g, const Vec& point, int cap = 256);

struct FanViolation {
  std::string kind;
  std::string detail;
  std::string pair;     // "v1 | v2" for pairwise cone checks, else empty
  std::string witness;  // witness point or chamber, when one exists
};

struct FanReport {
  std::vector<FanViolation> violations;
  int cones_checked = 0;
  int chambers = 0;
  int points = 0;
  bool pass() const { return violations.empty(); }
};

/// Verifies, over all pairs of Cambrian cones of sortables with l(v) <=
/// max_length, that the pairwise intersection restricted to the union of
/// enumerated chambers (l(w) <= max_length + margin) is a face of each cone.
/// Works on representative points of all Coxeter-fan faces in that region;
/// exact arithmetic throughout. Also checks that every enumerated chamber
/// lies in exactly one cone (fibers of pidown partition the Tits cone).
FanReport fan_check_in_tits(const CoxGroup& g, const CoxWord& c, int max_length, int margin = 2);

struct NotAFace : std::runtime_error {
  explicit NotAFace(const std::string& w) : std::runtime_error(w) {}
};

struct RankTooLarge : std::runtime_error {
  RankTooLarge() : std::runtime_error("exact polyhedral fan checking supports rank <= 4 only") {}
};

/// A face of Cone_c(v) meeting the Tits-cone interior: the sortable element
/// above it and the simple generators through it (vJv^-1 must consist of
/// cover reflections of v, and W_J must be finite).
struct FaceDescriptor {
  Elt v;
  std::vector<int> J;
};

/// (element below the face, Cox_c(v, J)); the Coxeter-element word is ordered
/// by the omega_c sign rule on the roots of the cover reflections w s w^-1.
std::pair<Elt, CoxWord> star_of_face(const CoxGroup& g, const CoxWord& c, const FaceDescriptor& f);

/// Checks the reduction of Thm. "stars": for all x, y in W_J,
/// pidown^{Cox}(x) = pidown^{Cox}(y) iff pidown^c(wx) = pidown^c(wy).
FanReport verify_star(const CoxGroup& g, const CoxWord& c, const FaceDescriptor& f);

}  // namespace camb
