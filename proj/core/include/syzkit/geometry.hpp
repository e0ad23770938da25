#pragma once

// Exact planar primitives over the rationals. Everything here is
// predicate-exact: no epsilons, no doubles, so the combinatorial
// decisions downstream (cut ordering, ray crossings, census counts)
// are reproducible bit for bit.

#include <optional>
#include <vector>

#include "syzkit/rational.hpp"
#include "syzkit/unimodular.hpp"

namespace syz {

struct QVec2 {
  Rat x;
  Rat y;
  bool operator==(const QVec2&) const = default;
};

QVec2 q_add(const QVec2& a, const QVec2& b);
QVec2 q_sub(const QVec2& a, const QVec2& b);
QVec2 q_scale(const Rat& s, const QVec2& v);
Rat q_cross(const QVec2& a, const QVec2& b);
Rat q_dot(const QVec2& a, const QVec2& b);
QVec2 q_from_ivec(const IVec2& v);

// Sign of the signed area of triangle (a, b, c): +1 ccw, -1 cw, 0 collinear.
int orientation(const QVec2& a, const QVec2& b, const QVec2& c);

bool point_on_segment(const QVec2& p, const QVec2& a, const QVec2& b);

// Proper or improper intersection point of segments [a,b] and [c,d] when it
// is unique; nullopt when disjoint or overlapping along a line.
std::optional<QVec2> segment_intersection(const QVec2& a, const QVec2& b,
                                          const QVec2& c, const QVec2& d);

bool segments_overlap(const QVec2& a, const QVec2& b,
                      const QVec2& c, const QVec2& d);

struct Polygon {
  std::vector<QVec2> vertices;  // simple, listed ccw

  bool operator==(const Polygon&) const = default;

  std::size_t size() const { return vertices.size(); }
  const QVec2& vertex(std::size_t i) const { return vertices[i % vertices.size()]; }
  QVec2 edge_start(std::size_t e) const { return vertex(e); }
  QVec2 edge_end(std::size_t e) const { return vertex(e + 1); }
};

// Twice the signed area; positive for ccw.
Rat polygon_signed_area2(const Polygon& poly);
bool polygon_is_ccw(const Polygon& poly);
bool polygon_is_simple(const Polygon& poly);

enum class Location { Inside, Boundary, Outside };
Location locate_point(const Polygon& poly, const QVec2& p);

// Index of the boundary edge containing p, if any; vertices belong to the
// edge they start.
std::optional<std::size_t> boundary_edge_of(const Polygon& poly, const QVec2& p);

struct RayHit {
  Rat t;                  // parameter along the ray, > 0
  QVec2 point;
  std::size_t edge;       // polygon edge hit
  bool at_vertex = false;
};

// First boundary point met by p + t*dir for t > 0. p may be interior or on
// the boundary (the latter finds the far exit, not the edge p sits on).
std::optional<RayHit> first_boundary_hit(const Polygon& poly, const QVec2& p,
                                         const QVec2& dir);

// Axis-aligned bounding box extents.
void polygon_bbox(const Polygon& poly, QVec2& lo, QVec2& hi);

}  // namespace syz
