#pragma once

#include <vector>

#include "camb/group.hpp"

namespace camb {

/// A Coxeter element of a standard parabolic W_J, as a fixed reduced word:
/// each generator of J exactly once. Functions taking a CoxWord treat the
/// ambient group restricted to J = set(word).
using CoxWord = std::vector<int>;

/// Throws unless word is a permutation of distinct generator indices.
void check_cox_word(const CoxGroup& g, const CoxWord& c);

/// s is initial in c iff it can be commuted to the front of the word.
bool is_initial(const CoxGroup& g, const CoxWord& c, int s);
/// s is final in c iff it can be commuted to the end.
bool is_final(const CoxGroup& g, const CoxWord& c, int s);
/// All initial letters, in word order.
std::vector<int> initial_letters(const CoxGroup& g, const CoxWord& c);

/// Word for scs where s is initial: s moved to the front, then rotated to the
/// back. (Positions of the other letters are preserved.)
CoxWord rotate_initial(const CoxGroup& g, const CoxWord& c, int s);
/// Restriction to J: delete the letters outside J.
CoxWord restrict_cox(const CoxWord& c, const std::vector<int>& J);
/// The Coxeter element itself.
Elt cox_elt(const CoxGroup& g, const CoxWord& c);

/// Bilinear forms attached to c, as matrices over the ambient basis (entries
/// outside J x J are zero). Ev is E_c on (coroot, root) bases; Eroot is E_c
/// with both arguments expanded in simple roots; Omega = Eroot - Eroot^T.
struct FormsContext {
  Mat Ev, Eroot, Omega;
};
FormsContext build_forms(const CoxGroup& g, const CoxWord& c);

/// E_c(x, y) with x in coroot coordinates and y in root coordinates.
Scalar euler_form(const CoxGroup& g, const CoxWord& c, const Vec& x_coroot, const Vec& y);
/// E_c(beta, beta') with both arguments in root coordinates.
Scalar euler_form_roots(const CoxGroup& g, const CoxWord& c, const Vec& x, const Vec& y);
/// omega_c(beta, beta') = E_c(beta,beta') - E_c(beta',beta).
Scalar omega(const CoxGroup& g, const CoxWord& c, const Vec& x, const Vec& y);

inline Scalar eval_form(const Mat& f, const Vec& x, const Vec& y) {
  Scalar out;
  for (int i = 0; i < f.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < f.cols(); ++j)
      if (!y[j].is_zero()) out += x[i] * f.at(i, j) * y[j];
  }
  return out;
}

struct NotReduced : std::runtime_error {
  NotReduced() : std::runtime_error("word is not reduced") {}
};

/// Prop. "InversionOrdering" condition (i): omega_c(beta_{t_i}, beta_{t_j})
/// >= 0 for all i <= j, strict unless t_i and t_j commute. Throws NotReduced.
bool compatible_reflection_sequence(const CoxGroup& g, const CoxWord& c, const std::vector<int>& word);

struct RankNotThree : std::runtime_error {
  RankNotThree() : std::runtime_error("zeta_c requires rank 3") {}
};

/// The (-1)-eigenvector of c in rank 3, normalized so the first nonzero
/// coordinate is 1 and oriented so that sign omega_c(alpha_i, alpha_j) equals
/// sign det[alpha_i | alpha_j | zeta] for the first noncommuting simple pair.
Vec zeta(const CoxGroup& g, const CoxWord& c);

/// det[x | y | z] for rank-3 vectors.
Scalar det3(const Vec& x, const Vec& y, const Vec& z);

}  // namespace camb
