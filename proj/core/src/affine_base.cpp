#include "syzkit/affine_base.hpp"

#include <algorithm>
#include <set>

#include "syzkit/errors.hpp"

namespace syz {

const char* structure_tag_name(StructureTag t) {
  return t == StructureTag::Symplectic ? "symplectic" : "complex";
}

const char* topology_name(Topology t) {
  switch (t) {
    case Topology::Interval: return "interval";
    case Topology::Disc: return "disc";
    case Topology::Circle: return "circle";
    case Topology::Sphere: return "sphere";
  }
  return "?";
}

std::optional<StructureTag> structure_tag_from_name(const std::string& s) {
  if (s == "symplectic") return StructureTag::Symplectic;
  if (s == "complex") return StructureTag::Complex;
  return std::nullopt;
}

std::optional<Topology> topology_from_name(const std::string& s) {
  if (s == "interval") return Topology::Interval;
  if (s == "disc") return Topology::Disc;
  if (s == "circle") return Topology::Circle;
  if (s == "sphere") return Topology::Sphere;
  return std::nullopt;
}

QVec2 cut_direction(const SingularPoint& p) {
  return q_sub(p.cut_to, p.position);
}

std::size_t AffineBase::index_of(const std::string& point_id) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].id == point_id) return i;
  fail(ErrorKind::NotFound, "no singular point with id '" + point_id + "' in base '" + name + "'");
}

const SingularPoint& AffineBase::point(const std::string& point_id) const {
  return points[index_of(point_id)];
}

namespace {

void validate_singular_core(const SingularPoint& p) {
  if (p.id.empty()) fail(ErrorKind::Invariant, "singular point with empty id");
  if (!is_primitive(p.vanishing_cycle))
    fail(ErrorKind::Invariant, "vanishing cycle of '" + p.id + "' is not primitive");
  if (p.multiplicity < 1)
    fail(ErrorKind::Domain, "multiplicity of '" + p.id + "' must be positive");
}

void validate_1d(const AffineBase& b) {
  if (b.topology != Topology::Interval && b.topology != Topology::Circle)
    fail(ErrorKind::Topology, "1D base '" + b.name + "' must be an interval or circle");
  if (b.symplectic_length <= 0 || b.complex_length <= 0)
    fail(ErrorKind::Domain, "1D base '" + b.name + "' needs positive lengths");
  if (!b.points.empty())
    fail(ErrorKind::Invariant, "1D bases carry no singular points");
  if (!b.boundary.vertices.empty())
    fail(ErrorKind::Invariant, "1D base '" + b.name + "' must not carry a polygon");
  if (b.normal_degree != 0)
    fail(ErrorKind::Invariant, "1D base '" + b.name + "' has no boundary normal degree");
}

void validate_2d(const AffineBase& b) {
  if (b.topology != Topology::Disc && b.topology != Topology::Sphere)
    fail(ErrorKind::Topology, "2D base '" + b.name + "' must be a disc or sphere");
  if (b.symplectic_length != 0 || b.complex_length != 0)
    fail(ErrorKind::Invariant, "2D base '" + b.name + "' must not carry 1D lengths");
  if (b.topology == Topology::Sphere && b.normal_degree != 0)
    fail(ErrorKind::Invariant, "a sphere has no boundary normal degree");
  const Polygon& poly = b.boundary;
  if (poly.size() < 3) fail(ErrorKind::Topology, "polygon of '" + b.name + "' needs >= 3 vertices");
  if (!polygon_is_simple(poly)) fail(ErrorKind::Topology, "polygon of '" + b.name + "' is not simple");
  if (!polygon_is_ccw(poly)) fail(ErrorKind::Topology, "polygon of '" + b.name + "' must be listed ccw");

  std::set<std::string> ids;
  for (const SingularPoint& p : b.points) {
    validate_singular_core(p);
    if (!ids.insert(p.id).second)
      fail(ErrorKind::Invariant, "duplicate singular point id '" + p.id + "'");
    if (locate_point(poly, p.position) != Location::Inside)
      fail(ErrorKind::Placement, "singular point '" + p.id + "' is not interior");
    if (locate_point(poly, p.cut_to) != Location::Boundary)
      fail(ErrorKind::Placement, "cut of '" + p.id + "' does not end on the boundary");
    for (std::size_t v = 0; v < poly.size(); ++v)
      if (p.cut_to == poly.vertex(v))
        fail(ErrorKind::Presentation, "cut of '" + p.id + "' ends at a polygon vertex");
    // The cut may touch the boundary only at its endpoint.
    for (std::size_t e = 0; e < poly.size(); ++e) {
      const QVec2 a = poly.edge_start(e), c = poly.edge_end(e);
      if (segments_overlap(p.position, p.cut_to, a, c))
        fail(ErrorKind::Presentation, "cut of '" + p.id + "' runs along the boundary");
      const auto hit = segment_intersection(p.position, p.cut_to, a, c);
      if (hit && !(*hit == p.cut_to))
        fail(ErrorKind::Presentation, "cut of '" + p.id + "' leaves the polygon");
    }
  }

  for (std::size_t i = 0; i < b.points.size(); ++i) {
    const SingularPoint& pi = b.points[i];
    for (std::size_t j = i + 1; j < b.points.size(); ++j) {
      const SingularPoint& pj = b.points[j];
      if (pi.position == pj.position)
        fail(ErrorKind::Placement, "singular points '" + pi.id + "' and '" + pj.id + "' coincide");
      if (segments_overlap(pi.position, pi.cut_to, pj.position, pj.cut_to) ||
          segment_intersection(pi.position, pi.cut_to, pj.position, pj.cut_to))
        fail(ErrorKind::Presentation, "cuts of '" + pi.id + "' and '" + pj.id + "' are not disjoint");
    }
    for (const SingularPoint& other : b.points) {
      if (other.id == pi.id) continue;
      if (point_on_segment(other.position, pi.position, pi.cut_to))
        fail(ErrorKind::Presentation, "cut of '" + pi.id + "' passes through '" + other.id + "'");
    }
  }
}

}  // namespace

void validate_base(const AffineBase& b) {
  if (b.dimension == 1) {
    validate_1d(b);
  } else if (b.dimension == 2) {
    validate_2d(b);
  } else {
    fail(ErrorKind::Topology, "base '" + b.name + "' must have dimension 1 or 2");
  }
}

std::pair<std::size_t, Rat> boundary_order_key(const Polygon& poly, const QVec2& p) {
  const auto e = boundary_edge_of(poly, p);
  if (!e) fail(ErrorKind::Placement, "point is not on the polygon boundary");
  const QVec2 s = poly.edge_start(*e);
  const QVec2 seg = q_sub(poly.edge_end(*e), s);
  const Rat u = q_dot(q_sub(p, s), seg) / q_dot(seg, seg);
  return {*e, u};
}

std::vector<std::size_t> ccw_cut_order(const AffineBase& b) {
  std::vector<std::size_t> order(b.points.size());
  std::vector<std::pair<std::size_t, Rat>> keys(b.points.size());
  for (std::size_t i = 0; i < b.points.size(); ++i) {
    order[i] = i;
    keys[i] = boundary_order_key(b.boundary, b.points[i].cut_to);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (keys[i].first != keys[j].first) return keys[i].first < keys[j].first;
    return keys[i].second < keys[j].second;
  });
  return order;
}

UnimodularMap monodromy_for(StructureTag tag, const SingularPoint& p) {
  const UnimodularMap m = focus_focus_monodromy(p.vanishing_cycle, p.multiplicity);
  return tag == StructureTag::Symplectic ? m : m.transposed();
}

UnimodularMap monodromy_around(const AffineBase& b, const std::string& point_id) {
  return monodromy_for(b.tag, b.point(point_id));
}

UnimodularMap boundary_monodromy(const AffineBase& b) {
  if (b.dimension != 2 || b.topology != Topology::Disc)
    fail(ErrorKind::Topology, "boundary monodromy requires a 2D disc");
  return normal_degree_to_monodromy(b.normal_degree);
}

ConsistencyReport check_total_monodromy(const AffineBase& b) {
  validate_base(b);
  ConsistencyReport report;
  if (b.dimension == 1) {
    report.consistent = true;
    return report;
  }
  for (std::size_t i : ccw_cut_order(b))
    report.factors.push_back({b.points[i].id, monodromy_for(b.tag, b.points[i])});
  UnimodularMap product;
  for (const MonodromyFactor& f : report.factors) product = compose(product, f.matrix);
  report.product = product;
  report.boundary = b.topology == Topology::Disc ? normal_degree_to_monodromy(b.normal_degree)
                                                 : UnimodularMap::identity();
  report.consistent = compose(report.product, report.boundary).is_identity();
  return report;
}

void validate_pair(const BasePair& p) {
  if (p.symplectic_base.tag != StructureTag::Symplectic ||
      p.complex_base.tag != StructureTag::Complex)
    fail(ErrorKind::Invariant, "pair members of '" + p.name + "' carry the wrong tags");
  validate_base(p.symplectic_base);
  validate_base(p.complex_base);
  if (p.symplectic_base.dimension != p.complex_base.dimension ||
      p.symplectic_base.topology != p.complex_base.topology)
    fail(ErrorKind::Invariant, "pair members of '" + p.name + "' disagree on the topological base");
  if (p.symplectic_base.dimension == 1) {
    if (p.symplectic_base.symplectic_length != p.complex_base.symplectic_length ||
        p.symplectic_base.complex_length != p.complex_base.complex_length)
      fail(ErrorKind::Invariant, "pair members of '" + p.name + "' disagree on the lengths");
    return;
  }
  if (p.symplectic_base.points.size() != p.complex_base.points.size())
    fail(ErrorKind::Invariant, "pair '" + p.name + "' has unmatched singular points");
  for (std::size_t i = 0; i < p.symplectic_base.points.size(); ++i) {
    const UnimodularMap ms = monodromy_for(StructureTag::Symplectic, p.symplectic_base.points[i]);
    const UnimodularMap mc = monodromy_for(StructureTag::Complex, p.complex_base.points[i]);
    if (!mc.linear_part_equals(ms.transposed()))
      fail(ErrorKind::Invariant, "pair '" + p.name + "': monodromy at index " + std::to_string(i) +
                                     " is not transpose-dual");
  }
}

namespace {

AffineBase retagged(AffineBase b, StructureTag t) {
  if (b.dimension == 1 && b.tag != t) std::swap(b.symplectic_length, b.complex_length);
  b.tag = t;
  return b;
}

}  // namespace

BasePair pair_over(const AffineBase& b, const std::string& pair_name) {
  validate_base(b);
  BasePair p;
  p.name = pair_name.empty() ? b.name + "-pair" : pair_name;
  p.symplectic_base = retagged(b, StructureTag::Symplectic);
  p.complex_base = retagged(b, StructureTag::Complex);
  // Keep 1D members literally identical apart from the tag.
  if (b.dimension == 1) {
    p.complex_base.symplectic_length = p.symplectic_base.symplectic_length;
    p.complex_base.complex_length = p.symplectic_base.complex_length;
  }
  validate_pair(p);
  return p;
}

BasePair exchange_structures(const BasePair& p) {
  validate_pair(p);
  BasePair out;
  out.name = p.name;
  out.symplectic_base = retagged(p.complex_base, StructureTag::Symplectic);
  out.complex_base = retagged(p.symplectic_base, StructureTag::Complex);
  return out;
}

Topology DoubledBase::topology() const {
  return half.dimension == 2 ? Topology::Sphere : Topology::Circle;
}

std::size_t DoubledBase::total_singular_count() const {
  return 2 * half.points.size() + seam_points.size();
}

Rat DoubledBase::doubled_symplectic_length() const {
  if (half.dimension != 1) fail(ErrorKind::Domain, "lengths are defined for 1D doubles only");
  return 2 * half.symplectic_length;
}

Rat DoubledBase::doubled_complex_length() const {
  if (half.dimension != 1) fail(ErrorKind::Domain, "lengths are defined for 1D doubles only");
  return 2 * half.complex_length;
}

void validate_double(const DoubledBase& d) {
  validate_base(d.half);
  if (d.half.dimension == 1) {
    if (d.half.topology != Topology::Interval)
      fail(ErrorKind::Topology, "1D doubling needs an interval half");
    if (!d.seam_points.empty())
      fail(ErrorKind::Placement, "1D doubles carry no seam singularities");
    return;
  }
  if (d.half.topology != Topology::Disc)
    fail(ErrorKind::Topology, "2D doubling needs a disc half");
  std::set<std::string> ids;
  for (const SingularPoint& p : d.half.points) ids.insert(p.id);
  for (const SingularPoint& s : d.seam_points) {
    validate_singular_core(s);
    if (!ids.insert(s.id).second)
      fail(ErrorKind::Invariant, "duplicate singular point id '" + s.id + "' on the seam");
    if (locate_point(d.half.boundary, s.position) != Location::Boundary)
      fail(ErrorKind::Placement, "seam singularity '" + s.id + "' is off the seam");
    if (!(s.cut_to == s.position))
      fail(ErrorKind::Invariant, "seam singularity '" + s.id + "' must not carry a cut");
    for (std::size_t v = 0; v < d.half.boundary.size(); ++v)
      if (s.position == d.half.boundary.vertex(v))
        fail(ErrorKind::Placement, "seam singularity '" + s.id + "' sits on a corner");
    for (const SingularPoint& p : d.half.points)
      if (s.position == p.cut_to)
        fail(ErrorKind::Presentation, "seam singularity '" + s.id + "' blocks the cut of '" + p.id + "'");
    // The doubling involution fixes the seam pointwise, so a seam
    // singularity only has a reflection-symmetric germ when its edge is
    // axis-parallel and its vanishing cycle is parallel or perpendicular
    // to that edge.
    const auto edge = boundary_edge_of(d.half.boundary, s.position);
    const QVec2 ev = q_sub(d.half.boundary.edge_end(*edge), d.half.boundary.edge_start(*edge));
    if (ev.x != 0 && ev.y != 0)
      fail(ErrorKind::Placement,
           "seam singularity '" + s.id + "' sits on an edge that is not axis-parallel");
    const QVec2 cyc = q_from_ivec(s.vanishing_cycle);
    if (q_cross(ev, cyc) != 0 && q_dot(ev, cyc) != 0)
      fail(ErrorKind::Placement, "seam singularity '" + s.id +
                                     "' has a vanishing cycle misaligned with its edge");
  }
  for (std::size_t i = 0; i < d.seam_points.size(); ++i)
    for (std::size_t j = i + 1; j < d.seam_points.size(); ++j)
      if (d.seam_points[i].position == d.seam_points[j].position)
        fail(ErrorKind::Placement, "seam singularities '" + d.seam_points[i].id + "' and '" +
                                       d.seam_points[j].id + "' coincide");
}

DoubledBase make_double(const AffineBase& half, std::vector<SingularPoint> seam_points,
                        const std::string& name) {
  DoubledBase d;
  d.name = name.empty() ? half.name + "-double" : name;
  d.half = half;
  d.seam_points = std::move(seam_points);
  validate_double(d);
  return d;
}

UnimodularMap seam_reflect(const UnimodularMap& m) {
  const UnimodularMap inv = m.inverse();
  UnimodularMap out;
  out.a = inv.a;
  out.b = -inv.b;
  out.c = -inv.c;
  out.d = inv.d;
  out.tx = inv.tx;
  out.ty = -inv.ty;
  return out;
}

ConsistencyReport check_total_monodromy(const DoubledBase& d) {
  validate_double(d);
  ConsistencyReport report;
  if (d.half.dimension == 1) {
    report.consistent = true;
    return report;
  }
  const std::vector<std::size_t> cut_order = ccw_cut_order(d.half);
  for (std::size_t i : cut_order)
    report.factors.push_back({d.half.points[i].id, monodromy_for(d.half.tag, d.half.points[i])});

  std::vector<std::size_t> seam_order(d.seam_points.size());
  std::vector<std::pair<std::size_t, Rat>> keys(d.seam_points.size());
  for (std::size_t i = 0; i < d.seam_points.size(); ++i) {
    seam_order[i] = i;
    keys[i] = boundary_order_key(d.half.boundary, d.seam_points[i].position);
  }
  std::sort(seam_order.begin(), seam_order.end(), [&](std::size_t i, std::size_t j) {
    if (keys[i].first != keys[j].first) return keys[i].first < keys[j].first;
    return keys[i].second < keys[j].second;
  });
  for (std::size_t i : seam_order)
    report.factors.push_back({d.seam_points[i].id, monodromy_for(d.half.tag, d.seam_points[i])});

  for (auto it = cut_order.rbegin(); it != cut_order.rend(); ++it)
    report.factors.push_back(
        {d.half.points[*it].id + "'", seam_reflect(monodromy_for(d.half.tag, d.half.points[*it]))});

  UnimodularMap product;
  for (const MonodromyFactor& f : report.factors) product = compose(product, f.matrix);
  report.product = product;
  report.boundary = UnimodularMap::identity();
  report.consistent = product.is_identity();
  return report;
}

}  // namespace syz
