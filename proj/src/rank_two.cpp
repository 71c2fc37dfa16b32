#include "camb/rank_two.hpp"

#include <algorithm>

namespace camb {

namespace {

Mat two_column(const Vec& b1, const Vec& b2) {
  Mat m(static_cast<int>(b1.size()), 2);
  for (size_t i = 0; i < b1.size(); ++i) {
    m.at(static_cast<int>(i), 0) = b1[i];
    m.at(static_cast<int>(i), 1) = b2[i];
  }
  return m;
}

Scalar cross2(const std::pair<Scalar, Scalar>& u, const std::pair<Scalar, Scalar>& v) {
  return u.first * v.second - u.second * v.first;
}

}  // namespace

bool in_plane(const Vec& b1, const Vec& b2, const Vec& beta) {
  Mat m(3, static_cast<int>(beta.size()));
  for (size_t j = 0; j < beta.size(); ++j) {
    m.at(0, static_cast<int>(j)) = b1[j];
    m.at(1, static_cast<int>(j)) = b2[j];
    m.at(2, static_cast<int>(j)) = beta[j];
  }
  return rank(std::move(m)) <= 2;
}

std::pair<Scalar, Scalar> plane_coords(const Vec& b1, const Vec& b2, const Vec& beta) {
  const auto sol = solve(two_column(b1, b2), beta);
  if (!sol) throw std::invalid_argument("plane_coords: root not in plane");
  return {(*sol)[0], (*sol)[1]};
}

std::vector<Vec> sort_in_plane(const Vec& b1, const Vec& b2, std::vector<Vec> roots) {
  std::vector<std::pair<std::pair<Scalar, Scalar>, Vec>> keyed;
  keyed.reserve(roots.size());
  for (auto& r : roots) keyed.emplace_back(plane_coords(b1, b2, r), std::move(r));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    const int s = cross2(a.first, b.first).sign();
    if (s != 0) return s > 0;
    return vec_less(a.second, b.second);
  });
  std::vector<Vec> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

RankTwoSubgroup span_subgroup(const CoxGroup& g, const Vec& t1, const Vec& t2, int depth_cap, int m_cap) {
  if (t1 == t2) throw std::invalid_argument("span_subgroup: reflections must be distinct");
  std::set<Vec, VecLess> plane{t1, t2};
  for (const Vec& r : g.roots_up_to_depth(depth_cap))
    if (in_plane(t1, t2, r)) plane.insert(r);
  std::vector<Vec> sorted = sort_in_plane(t1, t2, {plane.begin(), plane.end()});

  RankTwoSubgroup sub;
  sub.gamma1 = sorted.front();
  sub.gamma2 = sorted.back();
  sub.plane_roots = std::move(sorted);

  // Order of r1*r2 by iterating the product matrix.
  const Elt r1 = g.reflection(sub.gamma1);
  const Elt r2 = g.reflection(sub.gamma2);
  const Mat prod = r1.m * r2.m;
  Mat acc = prod;
  const Mat id = Mat::identity(g.rank());
  sub.m = kInfiniteBond;
  for (int k = 1; k <= m_cap; ++k) {
    if (acc == id) {
      sub.m = k;
      break;
    }
    acc = acc * prod;
  }
  if (sub.m != kInfiniteBond && static_cast<int>(sub.plane_roots.size()) < sub.m)
    throw CapTooSmall("span_subgroup: found " + std::to_string(sub.plane_roots.size()) + " plane roots but m = " +
                      std::to_string(sub.m) + "; raise depth_cap");
  return sub;
}

namespace {

std::vector<Vec> reflection_chain(const CoxGroup& g, const Vec& ga, const Vec& gb, int k) {
  // u_i = w_i sigma_i w_i^-1 where w_i alternates ga, gb reflections; the
  // root is |w_i(beta_{sigma_i})| with sigma_i alternating ga-side/gb-side.
  std::vector<Vec> out;
  if (k <= 0) return out;
  const Elt ra = g.reflection(ga);
  const Elt rb = g.reflection(gb);
  out.push_back(ga);
  Mat prefix = Mat::identity(g.rank());
  for (int i = 2; i <= k; ++i) {
    prefix = prefix * (i % 2 == 0 ? ra.m : rb.m);
    Vec r = prefix.apply(i % 2 == 0 ? gb : ga);
    if (root_is_negative(r)) r = -r;
    if (!root_is_positive(r)) throw std::logic_error("reflection_chain: non-root image");
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<Vec> reflection_prefix(const CoxGroup& g, const RankTwoSubgroup& sub, int k) {
  if (sub.m != kInfiniteBond && k > sub.m) throw std::invalid_argument("reflection_prefix: k > m");
  return reflection_chain(g, sub.gamma1, sub.gamma2, k);
}

std::vector<Vec> reflection_suffix(const CoxGroup& g, const RankTwoSubgroup& sub, int k) {
  if (sub.m != kInfiniteBond && k > sub.m) throw std::invalid_argument("reflection_suffix: k > m");
  return reflection_chain(g, sub.gamma2, sub.gamma1, k);
}

SegmentType segment_type(const CoxGroup& g, const RankTwoSubgroup& sub, const std::vector<Vec>& I) {
  const int k = static_cast<int>(I.size());
  if (k == 0) return {SegmentType::Initial, 0};
  if (sub.m != kInfiniteBond && k > sub.m) return {SegmentType::Neither, k};
  std::set<Vec, VecLess> have(I.begin(), I.end());
  auto matches = [&](const std::vector<Vec>& chain) {
    std::set<Vec, VecLess> want(chain.begin(), chain.end());
    return want == have;
  };
  if (matches(reflection_prefix(g, sub, k))) return {SegmentType::Initial, k};
  if (matches(reflection_suffix(g, sub, k))) return {SegmentType::Final, k};
  return {SegmentType::Neither, k};
}

bool chain_at_low_end(const CoxGroup& g, const Vec& x, const Vec& x_next) {
  Vec image = g.reflect(x, x_next);
  if (image == x_next) throw std::logic_error("chain_at_low_end: consecutive reflections cannot commute");
  if (root_is_positive(image)) return true;
  if (root_is_negative(image)) return false;
  throw std::logic_error("chain_at_low_end: image is not a root");
}

bool chain_uniformly_spaced(const CoxGroup& g, const std::vector<Vec>& chain) {
  for (size_t j = 0; j + 2 < chain.size(); ++j) {
    Vec expect = -g.reflect(chain[j + 1], chain[j]);
    if (expect != chain[j + 2]) return false;
  }
  return true;
}

std::optional<std::pair<Elt, std::pair<int, int>>> is_true_parabolic(const CoxGroup& g, const Vec& t1,
                                                                     const Vec& t2, int length_cap) {
  for (const Elt& w : g.elements_up_to(length_cap)) {
    const Vec a = w.minv.apply(t1);
    const Vec b = w.minv.apply(t2);
    for (int r = 0; r < g.rank(); ++r)
      for (int s = r + 1; s < g.rank(); ++s) {
        auto supported = [&](const Vec& v) {
          for (int i = 0; i < g.rank(); ++i)
            if (i != r && i != s && !v[i].is_zero()) return false;
          return true;
        };
        if (supported(a) && supported(b)) return std::make_pair(w, std::make_pair(r, s));
      }
  }
  return std::nullopt;
}

}  // namespace camb
