#include "syzkit/polytope.hpp"

#include <algorithm>

#include "syzkit/errors.hpp"
#include "syzkit/unimodular.hpp"

namespace syz {

namespace {

// Exact counterclockwise angular order starting from the positive x-axis.
bool angle_less(const IVec2& a, const IVec2& b) {
  auto half = [](const IVec2& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

Rat facet_value(const Facet& f, const QVec2& x) {
  return Rat(f.normal[0]) * x.x + Rat(f.normal[1]) * x.y + f.offset;
}

void validate_1d(const MomentPolytope& p) {
  bool has_lo = false, has_hi = false;
  Rat lo, hi;
  for (const auto& f : p.facets) {
    if (f.normal[0] == 1) {
      const Rat bound = -f.offset;  // x >= -c
      if (!has_lo || bound > lo) lo = bound;
      has_lo = true;
    } else if (f.normal[0] == -1) {
      const Rat bound = f.offset;  // x <= c
      if (!has_hi || bound < hi) hi = bound;
      has_hi = true;
    } else {
      fail(ErrorKind::Geometry, "facet normal must be primitive");
    }
  }
  if (!has_lo || !has_hi) fail(ErrorKind::Geometry, "interval is unbounded");
  if (!(lo < hi)) fail(ErrorKind::Geometry, "interval has empty interior");
}

void validate_2d(const MomentPolytope& p) {
  std::vector<IVec2> dirs;
  for (const auto& f : p.facets) {
    const IVec2 n{f.normal[0], f.normal[1]};
    if (!is_primitive(n)) fail(ErrorKind::Geometry, "facet normal must be primitive");
    dirs.push_back(n);
  }
  std::sort(dirs.begin(), dirs.end(), angle_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end(),
                         [](const IVec2& a, const IVec2& b) { return a == b; }),
             dirs.end());
  // Bounded iff the normals positively span the plane: at least three
  // distinct directions with every cyclic angular gap strictly below pi.
  if (dirs.size() < 3) fail(ErrorKind::Geometry, "polytope is unbounded");
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const IVec2& a = dirs[i];
    const IVec2& b = dirs[(i + 1) % dirs.size()];
    if (cross(a, b) <= 0) fail(ErrorKind::Geometry, "polytope is unbounded");
  }
  // Full-dimensional iff the feasible facet intersections include three
  // points not on one line.
  const std::vector<QVec2> verts = polytope_vertices(p);
  if (verts.size() < 3) fail(ErrorKind::Geometry, "polytope has empty interior");
  bool non_collinear = false;
  for (std::size_t i = 2; i < verts.size() && !non_collinear; ++i)
    if (orientation(verts[0], verts[1], verts[i]) != 0) non_collinear = true;
  if (!non_collinear) fail(ErrorKind::Geometry, "polytope has empty interior");
}

}  // namespace

std::size_t MomentPolytope::dimension() const {
  return facets.empty() ? 0 : facets.front().normal.size();
}

void validate_polytope(const MomentPolytope& p) {
  if (p.facets.empty()) fail(ErrorKind::Geometry, "polytope needs at least one facet");
  const std::size_t dim = p.dimension();
  if (dim != 1 && dim != 2)
    fail(ErrorKind::Geometry, "only ambient dimension 1 or 2 is supported");
  for (const auto& f : p.facets)
    if (f.normal.size() != dim) fail(ErrorKind::Geometry, "facet normals mix dimensions");
  if (dim == 1)
    validate_1d(p);
  else
    validate_2d(p);
}

std::vector<QVec2> polytope_vertices(const MomentPolytope& p) {
  std::vector<QVec2> verts;
  const auto& fs = p.facets;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      // Solve <nu_i,x> + c_i = 0, <nu_j,x> + c_j = 0 exactly.
      const Rat a = Rat(fs[i].normal[0]), b = Rat(fs[i].normal[1]);
      const Rat c = Rat(fs[j].normal[0]), d = Rat(fs[j].normal[1]);
      const Rat det = a * d - b * c;
      if (det == 0) continue;
      const QVec2 x{(-fs[i].offset * d + fs[j].offset * b) / det,
                    (-fs[j].offset * a + fs[i].offset * c) / det};
      bool feasible = true;
      for (const auto& f : fs)
        if (facet_value(f, x) < 0) {
          feasible = false;
          break;
        }
      if (!feasible) continue;
      if (std::find(verts.begin(), verts.end(), x) == verts.end()) verts.push_back(x);
    }
  }
  return verts;
}

LaurentElement toric_superpotential(const MomentPolytope& p) {
  validate_polytope(p);
  LaurentElement w(p.dimension());
  for (const auto& f : p.facets)
    w += LaurentElement::monomial(f.normal, EnergyScalar::monomial(Rat(1), f.offset));
  return w;
}

}  // namespace syz
