#pragma once

#include <string>

#include "camb/forms.hpp"
#include "camb/group.hpp"

namespace camb {

struct RenderSpec {
  enum class Projection { AffineSlice, Stereographic, PoincareDisk };
  Projection projection = Projection::AffineSlice;
  int length_cap = 6;
  bool highlight_sortable = true;
  int size_px = 800;
};

/// Deterministic SVG of the rank-3 Cambrian fan: enumerated chambers wD as
/// fine triangles, sortable chambers shaded (classification comes from
/// enumerate_sortables, never from geometry), Cambrian-cone boundaries bold
/// (facets across which pidown changes). Floating point is used here only;
/// nothing flows back into the combinatorics. Throws RankNotThree unless the
/// group has rank 3.
std::string render_svg(const CoxGroup& g, const CoxWord& c, const RenderSpec& spec);

}  // namespace camb
