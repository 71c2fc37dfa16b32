#include "camb/fan.hpp"

#include <algorithm>

namespace camb {

Cone cone_of(const CoxGroup& g, const CoxWord& c, const Elt& v) {
  const CcData cc = cc_data(g, c, v);
  Cone cone;
  cone.v = v;
  for (const auto& [r, root] : cc.C) cone.normals.push_back(root);
  Mat span(static_cast<int>(cone.normals.size()), g.rank());
  for (size_t i = 0; i < cone.normals.size(); ++i)
    for (int j = 0; j < g.rank(); ++j) span.at(static_cast<int>(i), j) = cone.normals[i][j];
  if (rank(std::move(span)) != g.rank()) throw std::logic_error("cone_of: C_c(v) is not a basis");
  return cone;
}

ConeCtx make_cone_ctx(const CoxGroup& g, const CoxWord& c, const Elt& v) {
  ConeCtx ctx;
  ctx.v = v;
  for (const Vec& r : g.cover_reflection_roots(v)) ctx.cov.insert(r);
  const SortingWord sw = sorting_word(g, c, v);
  for (const Vec& r : sw.unforced_roots()) ctx.ufs.insert(r);
  return ctx;
}

bool chamber_in_cone(const CoxGroup& g, const ConeCtx& cone, const Elt& w) {
  const auto inv = g.inversion_set(w);
  for (const Vec& r : cone.cov)
    if (!inv.count(r)) return false;
  for (const Vec& r : cone.ufs)
    if (inv.count(r)) return false;
  return true;
}

bool chamber_in_cone(const CoxGroup& g, const CoxWord& c, const Elt& v, const Elt& w) {
  return chamber_in_cone(g, make_cone_ctx(g, c, v), w);
}

TitsResult tits_membership(const CoxGroup& g, const Vec& point, int cap) {
  Vec x = point;
  std::vector<int> applied;
  for (int step = 0; step <= cap; ++step) {
    int neg = -1;
    bool zero = false;
    for (int s = 0; s < g.rank(); ++s) {
      const int sign = x[s].sign();
      if (sign < 0) {
        neg = s;
        break;
      }
      if (sign == 0) zero = true;
    }
    if (neg < 0) {
      TitsResult res;
      res.kind = zero ? TitsResult::Boundary : TitsResult::InTits;
      res.w = g.from_word(applied);
      res.steps = step;
      return res;
    }
    x = g.simple_mat(neg).transpose().apply(x);
    applied.push_back(neg);
  }
  return TitsResult{TitsResult::NotInTits, g.identity(), cap};
}

FanReport fan_check_in_tits(const CoxGroup& g, const CoxWord& c, int max_length, int margin) {
  if (g.rank() > 4) throw RankTooLarge();
  FanReport rep;
  const int n = g.rank();
  const auto sortables = enumerate_sortables(g, c, max_length + margin);
  std::vector<Cone> cones;
  for (const Elt& v : sortables)
    if (v.length() <= max_length) cones.push_back(cone_of(g, c, v));
  rep.cones_checked = static_cast<int>(cones.size());

  const auto chambers = g.elements_up_to(max_length + margin);
  rep.chambers = static_cast<int>(chambers.size());

  // Fibers of pidown partition the enumerated chambers: for each w, exactly
  // one sortable v with l(v) <= l(w) has wD inside Cone_c(v).
  std::vector<ConeCtx> ctxs;
  for (const Elt& v : sortables) ctxs.push_back(make_cone_ctx(g, c, v));
  for (const Elt& w : chambers) {
    int hits = 0;
    for (const ConeCtx& ctx : ctxs) {
      if (ctx.v.length() > w.length()) continue;
      if (chamber_in_cone(g, ctx, w)) ++hits;
    }
    if (hits != 1)
      rep.violations.push_back({"fiber-partition",
                                "chamber lies in " + std::to_string(hits) + " cones", "",
                                g.word_str(w)});
  }

  // Representative points of all faces of all enumerated chambers.
  std::set<Vec, VecLess> point_set;
  for (const Elt& w : chambers) {
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      // mask selects the rays kept; the face where the other walls vanish.
      Vec x(n);
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) x[i] = 1;
      point_set.insert(g.act_dual(w, x));
    }
  }
  const std::vector<Vec> points(point_set.begin(), point_set.end());
  rep.points = static_cast<int>(points.size());

  // Pairing signs per cone: sign[k][p] for normal k against point p.
  struct ConeSigns {
    std::vector<std::vector<int>> sign;  // [normal][point]
    std::vector<char> inside;            // all normals nonnegative
  };
  std::vector<ConeSigns> cs(cones.size());
  for (size_t ci = 0; ci < cones.size(); ++ci) {
    auto& s = cs[ci];
    s.sign.assign(cones[ci].normals.size(), std::vector<int>(points.size()));
    s.inside.assign(points.size(), 1);
    for (size_t k = 0; k < cones[ci].normals.size(); ++k)
      for (size_t p = 0; p < points.size(); ++p) {
        Scalar pr;
        for (int i = 0; i < n; ++i)
          if (!points[p][i].is_zero()) pr += points[p][i] * cones[ci].normals[k][i];
        s.sign[k][p] = pr.sign();
        if (s.sign[k][p] < 0) s.inside[p] = 0;
      }
  }

  auto face_check = [&](size_t a, size_t b) {
    // K = Cone_a cap Cone_b on the point set; the minimal face of Cone_a
    // containing K must coincide with K on the point set.
    std::vector<size_t> inK;
    for (size_t p = 0; p < points.size(); ++p)
      if (cs[a].inside[p] && cs[b].inside[p]) inK.push_back(p);
    std::vector<size_t> zero_normals;
    for (size_t k = 0; k < cones[a].normals.size(); ++k) {
      bool all_zero = true;
      for (size_t p : inK)
        if (cs[a].sign[k][p] != 0) {
          all_zero = false;
          break;
        }
      if (all_zero) zero_normals.push_back(k);
    }
    for (size_t p = 0; p < points.size(); ++p) {
      if (!cs[a].inside[p]) continue;
      bool in_face = true;
      for (size_t k : zero_normals)
        if (cs[a].sign[k][p] != 0) {
          in_face = false;
          break;
        }
      if (in_face && !cs[b].inside[p]) {
        std::string coords;
        for (int i = 0; i < n; ++i) coords += (i ? "," : "") + points[p][i].str();
        rep.violations.push_back({"intersection-not-face",
                                  "a face point of the first cone escapes the intersection",
                                  g.word_str(cones[a].v) + " | " + g.word_str(cones[b].v), coords});
      }
    }
  };
  for (size_t a = 0; a < cones.size(); ++a)
    for (size_t b = 0; b < cones.size(); ++b)
      if (a != b) face_check(a, b);
  return rep;
}

std::pair<Elt, CoxWord> star_of_face(const CoxGroup& g, const CoxWord& c, const FaceDescriptor& f) {
  for (int s : f.J)
    if (!g.right_descent(f.v, s))
      throw NotAFace("star_of_face: v" + g.name(s) + "v^-1 is not a cover reflection of v");
  Elt w0J;
  try {
    w0J = g.longest_element(f.J);
  } catch (const std::domain_error&) {
    throw NotAFace("star_of_face: W_J is not finite");
  }
  const Elt w = g.mul(f.v, w0J);

  CoxWord order = f.J;
  if (!order.empty()) {
    const FormsContext forms = build_forms(g, c);
    std::vector<Vec> rho(g.rank());
    for (int s : order) {
      Vec r = g.act(w, g.simple_root(s));
      if (root_is_negative(r)) r = -r;
      rho[s] = std::move(r);
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const int sg = eval_form(forms.Omega, rho[a], rho[b]).sign();
      if (sg != 0) return sg > 0;
      return a < b;
    });
    // The omega rule must give a consistent order; ties must commute.
    for (size_t i = 0; i < order.size(); ++i)
      for (size_t j = i + 1; j < order.size(); ++j) {
        const int sg = eval_form(forms.Omega, rho[order[i]], rho[order[j]]).sign();
        if (sg < 0) throw std::logic_error("star_of_face: omega order is inconsistent");
        if (sg == 0 && g.reflect(rho[order[i]], rho[order[j]]) != rho[order[j]])
          throw std::logic_error("star_of_face: omega tie between noncommuting cover reflections");
      }
  }
  return {w, order};
}

FanReport verify_star(const CoxGroup& g, const CoxWord& c, const FaceDescriptor& f) {
  FanReport rep;
  const auto [w, cox] = star_of_face(g, c, f);
  const auto wj = g.parabolic_elements(f.J);
  std::vector<Elt> inner, outer;
  for (const Elt& x : wj) {
    inner.push_back(pidown(g, cox, x));
    outer.push_back(pidown(g, c, g.mul(w, x)));
  }
  for (size_t i = 0; i < wj.size(); ++i)
    for (size_t j = i + 1; j < wj.size(); ++j) {
      const bool same_inner = inner[i] == inner[j];
      const bool same_outer = outer[i] == outer[j];
      if (same_inner != same_outer)
        rep.violations.push_back({"star-mismatch",
                                  "parabolic fibers disagree with ambient fibers", "",
                                  g.word_str(wj[i]) + " | " + g.word_str(wj[j])});
    }
  return rep;
}

}  // namespace camb
