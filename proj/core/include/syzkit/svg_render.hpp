#pragma once

// Static SVG diagrams of planar chart data: polygon boundary, dashed cuts,
// cross markers at singular points, walls, traced rays, chamber labels, and
// the seam of a double. Coordinates are printed with a fixed format so equal
// scenes render to identical bytes; element order is fixed by layer and then
// by input order.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "syzkit/affine_base.hpp"
#include "syzkit/tropical.hpp"
#include "syzkit/wallcross.hpp"

namespace syz {

// A selection of things to draw. A doubled base is drawn as two mirror
// copies about its top boundary edge, which is rendered as the seam line.
// At most one of base / doubled / walls is expected; rays accompany a base
// or a doubled base; curves are free-standing numeric polylines (traced
// leaves).
struct SvgScene {
  std::optional<AffineBase> base;
  std::optional<DoubledBase> doubled;
  std::optional<WallScenario> walls;
  std::vector<Ray> rays;
  std::vector<std::vector<std::complex<double>>> curves;
  std::string title;
};

struct RenderResult {
  std::string svg;
  std::string warning;  // nonempty when the scene had nothing to draw
};

// An empty scene (or a 1-dimensional base, which has no planar chart) yields
// an empty document plus a warning rather than an error.
RenderResult render_svg(const SvgScene& scene);

}  // namespace syz
