#pragma once

#include <string>

#include "camb/group_io.hpp"

namespace camb::testing {

inline CoxGroup load(const std::string& name) {
  return load_group(std::string(CAMB_GROUPS_DIR) + "/" + name + ".json");
}

inline Elt elt(const CoxGroup& g, const std::string& csv) { return g.from_names(csv); }

inline CoxWord cw(const CoxGroup& g, const std::string& csv) { return parse_cox_word(g, csv, true); }

/// Exact membership of target in the nonnegative span of gens: by
/// Caratheodory it suffices to solve over subsets of size <= dim.
inline bool in_positive_cone(const CoxGroup& g, const Vec& target, const std::vector<Vec>& gens) {
  const int n = g.rank();
  if (is_zero_vec(target)) return true;
  for (unsigned mask = 1; mask < (1u << gens.size()); ++mask) {
    if (__builtin_popcount(mask) > n) continue;
    std::vector<int> idx;
    for (size_t k = 0; k < gens.size(); ++k)
      if (mask & (1u << k)) idx.push_back(static_cast<int>(k));
    Mat m(n, static_cast<int>(idx.size()));
    for (int row = 0; row < n; ++row)
      for (size_t col = 0; col < idx.size(); ++col) m.at(row, static_cast<int>(col)) = gens[idx[col]][row];
    const auto sol = solve(m, target);
    if (!sol) continue;
    bool nonneg = true;
    for (const Scalar& x : *sol)
      if (x.sign() < 0) nonneg = false;
    if (nonneg && is_zero_vec(m.apply(*sol) - target)) return true;
  }
  return false;
}

}  // namespace camb::testing
