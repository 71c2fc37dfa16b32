#include "camb/render.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "camb/fan.hpp"
#include "camb/sortable.hpp"

namespace camb {

namespace {

using D3 = std::array<double, 3>;

D3 to_d3(const Vec& v) { return {v[0].to_double(), v[1].to_double(), v[2].to_double()}; }
D3 sub(const D3& a, const D3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
D3 add(const D3& a, const D3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
D3 scale(const D3& a, double t) { return {a[0] * t, a[1] * t, a[2] * t}; }
double dot(const D3& a, const D3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
D3 normalize(const D3& a) {
  const double n = std::sqrt(dot(a, a));
  return scale(a, 1.0 / n);
}

std::string fmt(double x) {
  char buf[40];
  // flush -0.000000 to 0.000000 for byte determinism
  if (std::abs(x) < 5e-7) x = 0.0;
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

struct Projector {
  RenderSpec::Projection kind;
  Vec delta;        // affine: null vector of A (exact)
  D3 base;          // stereographic/poincare: unit interior direction
  D3 e1, e2;        // 2-D frame
  Mat kstar;        // poincare: inverse Gram matrix on V^*
  double time_sign = 1.0;

  // Projects a ray of V^* (exact dual coordinates) to the picture plane.
  std::pair<double, double> ray(const CoxGroup& g, const Vec& r) const {
    switch (kind) {
      case RenderSpec::Projection::AffineSlice: {
        Scalar level;
        for (int i = 0; i < 3; ++i) level += r[i] * delta[i];
        if (level.sign() <= 0) throw std::domain_error("render: ray outside the affine slice");
        const Scalar inv = level.inverse();
        const D3 p = to_d3({r[0] * inv, r[1] * inv, r[2] * inv});
        return {dot(sub(p, base), e1), dot(sub(p, base), e2)};
      }
      case RenderSpec::Projection::Stereographic: {
        const D3 x = normalize(to_d3(r));
        double den = 1.0 + dot(base, x);
        if (den < 1e-9) den = 1e-9;
        const D3 y = add(scale(base, -1.0), scale(add(x, base), 1.0 / den));
        return {dot(y, e1), dot(y, e2)};
      }
      case RenderSpec::Projection::PoincareDisk: {
        const D3 x = to_d3(r);
        // time coordinate along base, spatial in the (e1,e2) frame, w.r.t.
        // the Lorentzian form q = time_sign * K^*.
        D3 kx{};
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) kx[i] += time_sign * kstar.at(i, j).to_double() * x[j];
        double q = dot(kx, x);
        if (q >= -1e-12) q = -1e-12;  // ideal points go to the disk boundary
        const double s = 1.0 / std::sqrt(-q);
        const D3 kxs = scale(kx, s);
        const double t = -dot(kxs, base);  // = -q(x̂, base) > 0 inside
        const double u1 = dot(kxs, e1);
        const double u2 = dot(kxs, e2);
        return {u1 / (1.0 + t), u2 / (1.0 + t)};
      }
    }
    throw std::logic_error("render: unknown projection");
  }
};

Projector make_projector(const CoxGroup& g, const RenderSpec& spec) {
  Projector p;
  p.kind = spec.projection;
  const Vec ones(3, Scalar(1));
  switch (spec.projection) {
    case RenderSpec::Projection::AffineSlice: {
      const auto ker = kernel(g.cartan().A);
      if (ker.size() != 1) throw std::domain_error("affine-slice projection needs an affine group");
      Vec delta = ker.front();
      if (delta[0].sign() < 0)
        for (auto& x : delta) x = -x;
      for (const Scalar& x : delta)
        if (x.sign() <= 0) throw std::domain_error("affine-slice: kernel vector is not positive");
      p.delta = delta;
      // Base point: slice image of the interior direction (1,1,1).
      double level = 0;
      for (int i = 0; i < 3; ++i) level += delta[i].to_double();
      p.base = scale({1, 1, 1}, 1.0 / level);
      // Frame: orthonormalized slice directions.
      const D3 d = to_d3(delta);
      D3 a{1, 0, 0};
      a = sub(a, scale(d, dot(a, d) / dot(d, d)));
      p.e1 = normalize(a);
      D3 b{0, 1, 0};
      b = sub(b, scale(d, dot(b, d) / dot(d, d)));
      b = sub(b, scale(p.e1, dot(b, p.e1)));
      p.e2 = normalize(b);
      return p;
    }
    case RenderSpec::Projection::Stereographic: {
      p.base = normalize({1, 1, 1});
      D3 a{1, 0, 0};
      a = sub(a, scale(p.base, dot(a, p.base)));
      p.e1 = normalize(a);
      D3 b{0, 1, 0};
      b = sub(b, scale(p.base, dot(b, p.base)));
      b = sub(b, scale(p.e1, dot(b, p.e1)));
      p.e2 = normalize(b);
      return p;
    }
    case RenderSpec::Projection::PoincareDisk: {
      const auto inv = inverse(g.cartan().K);
      if (!inv) throw std::domain_error("poincare-disk: the form K is degenerate");
      // Proper Tits cone check by descent: the antipode of the interior of D
      // must not reach D.
      if (tits_membership(g, Vec{Scalar(-1), Scalar(-1), Scalar(-1)}, 512).kind != TitsResult::NotInTits)
        throw std::domain_error("poincare-disk: Tits cone is not a proper cone");
      p.kstar = *inv;
      // Normalize so the interior direction is time-like negative.
      D3 ones3{1, 1, 1};
      double q = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) q += p.kstar.at(i, j).to_double() * ones3[i] * ones3[j];
      p.time_sign = q < 0 ? 1.0 : -1.0;
      auto qform = [&](const D3& x, const D3& y) {
        double out = 0;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) out += p.time_sign * p.kstar.at(i, j).to_double() * x[i] * y[j];
        return out;
      };
      p.base = scale(ones3, 1.0 / std::sqrt(-qform(ones3, ones3)));
      D3 a{1, 0, 0};
      a = add(a, scale(p.base, qform(a, p.base)));  // Lorentz-orthogonalize
      p.e1 = scale(a, 1.0 / std::sqrt(qform(a, a)));
      D3 b{0, 1, 0};
      b = add(b, scale(p.base, qform(b, p.base)));
      b = sub(b, scale(p.e1, qform(b, p.e1)));
      p.e2 = scale(b, 1.0 / std::sqrt(qform(b, b)));
      return p;
    }
  }
  throw std::logic_error("render: unknown projection");
}

}  // namespace

std::string render_svg(const CoxGroup& g, const CoxWord& c, const RenderSpec& spec) {
  if (g.rank() != 3) throw RankNotThree();
  check_cox_word(g, c);
  const Projector proj = make_projector(g, spec);
  const auto chambers = g.elements_up_to(spec.length_cap);
  std::set<std::vector<int>> sortable_words;
  for (const Elt& v : enumerate_sortables(g, c, spec.length_cap)) sortable_words.insert(v.word);
  std::map<std::vector<int>, Elt> pid;
  for (const Elt& w : chambers) pid[w.word] = pidown(g, c, w);
  std::map<std::vector<int>, const Elt*> by_word;
  for (const Elt& w : chambers) by_word[w.word] = &w;

  // Chamber corner rays: w d_i, i.e. the dual action on the indicator rays.
  auto corner = [&](const Elt& w, int i) {
    Vec x(3);
    x[i] = 1;
    return g.act_dual(w, x);
  };
  const bool curved = spec.projection != RenderSpec::Projection::AffineSlice;
  const int samples = curved ? 24 : 1;
  auto edge_points = [&](const Vec& a, const Vec& b) {
    std::vector<std::pair<double, double>> pts;
    for (int k = 0; k <= samples; ++k) {
      const Rat t(k, samples);
      Vec m(3);
      for (int i = 0; i < 3; ++i) m[i] = (Scalar(1) - Scalar(t)) * a[i] + Scalar(t) * b[i];
      pts.push_back(proj.ray(g, m));
    }
    return pts;
  };

  // Collect geometry, then scale to the viewport.
  struct Poly {
    std::vector<std::pair<double, double>> pts;
    std::string cls;
    std::string id;
  };
  std::vector<Poly> fills, thins, bolds;
  double lo = 1e30, hi = -1e30;
  auto track = [&](const std::vector<std::pair<double, double>>& pts) {
    for (auto& [x, y] : pts) {
      lo = std::min(lo, std::min(x, y));
      hi = std::max(hi, std::max(x, y));
    }
  };

  for (const Elt& w : chambers) {
    std::vector<std::pair<double, double>> outline;
    for (int i = 0; i < 3; ++i) {
      auto seg = edge_points(corner(w, i), corner(w, (i + 1) % 3));
      outline.insert(outline.end(), seg.begin(), seg.end());
    }
    track(outline);
    if (spec.highlight_sortable && sortable_words.count(w.word))
      fills.push_back({outline, "sortable", "chamber-" + (w.word.empty() ? std::string("e") : g.word_str(w))});
    thins.push_back({outline, "chamber", ""});
    // Cambrian boundaries: walls where the pidown fiber changes.
    for (int s = 0; s < 3; ++s) {
      if (g.right_descent(w, s)) continue;  // draw each wall from below once
      const Elt up = g.mul_gen_right(w, s);
      auto it = by_word.find(up.word);
      if (it == by_word.end()) continue;
      if (pid.at(w.word) == pid.at(up.word)) continue;
      std::vector<Vec> rays;
      for (int i = 0; i < 3; ++i)
        if (i != s) rays.push_back(corner(w, i));
      auto seg = edge_points(rays[0], rays[1]);
      track(seg);
      bolds.push_back({seg, "cambrian", ""});
    }
  }

  const double span = std::max(1e-9, hi - lo);
  const double px = spec.size_px;
  auto map_pt = [&](std::pair<double, double> p) {
    return std::make_pair((p.first - lo) / span * (px * 0.9) + px * 0.05,
                          (p.second - lo) / span * (px * 0.9) + px * 0.05);
  };
  auto path_of = [&](const Poly& poly, bool closed) {
    std::string d;
    for (size_t i = 0; i < poly.pts.size(); ++i) {
      const auto [x, y] = map_pt(poly.pts[i]);
      d += (i == 0 ? "M" : "L") + fmt(x) + " " + fmt(y);
    }
    if (closed) d += "Z";
    return d;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.size_px << "\" height=\"" << spec.size_px
      << "\" viewBox=\"0 0 " << spec.size_px << " " << spec.size_px << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const Poly& p : fills)
    svg << "<path class=\"" << p.cls << "\" id=\"" << p.id << "\" d=\"" << path_of(p, true)
        << "\" fill=\"#c8d8f0\" stroke=\"none\"/>\n";
  for (const Poly& p : thins)
    svg << "<path class=\"" << p.cls << "\" d=\"" << path_of(p, true)
        << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"0.6\"/>\n";
  for (const Poly& p : bolds)
    svg << "<path class=\"" << p.cls << "\" d=\"" << path_of(p, false)
        << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2.4\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace camb
