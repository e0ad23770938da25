#include "syzkit/geometry.hpp"

#include <algorithm>

#include "syzkit/errors.hpp"

namespace syz {

QVec2 q_add(const QVec2& a, const QVec2& b) { return {a.x + b.x, a.y + b.y}; }
QVec2 q_sub(const QVec2& a, const QVec2& b) { return {a.x - b.x, a.y - b.y}; }
QVec2 q_scale(const Rat& s, const QVec2& v) { return {s * v.x, s * v.y}; }
Rat q_cross(const QVec2& a, const QVec2& b) { return a.x * b.y - a.y * b.x; }
Rat q_dot(const QVec2& a, const QVec2& b) { return a.x * b.x + a.y * b.y; }
QVec2 q_from_ivec(const IVec2& v) { return {Rat(v.x), Rat(v.y)}; }

int orientation(const QVec2& a, const QVec2& b, const QVec2& c) {
  return rat_sign(q_cross(q_sub(b, a), q_sub(c, a)));
}

bool point_on_segment(const QVec2& p, const QVec2& a, const QVec2& b) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

std::optional<QVec2> segment_intersection(const QVec2& a, const QVec2& b,
                                          const QVec2& c, const QVec2& d) {
  const QVec2 r = q_sub(b, a);
  const QVec2 s = q_sub(d, c);
  const Rat denom = q_cross(r, s);
  if (denom == 0) {
    if (orientation(a, b, c) != 0) return std::nullopt;  // parallel, apart
    // Collinear: a unique point only when the segments touch end to end.
    if (segments_overlap(a, b, c, d)) return std::nullopt;
    for (const QVec2& p : {c, d})
      if (point_on_segment(p, a, b)) return p;
    for (const QVec2& p : {a, b})
      if (point_on_segment(p, c, d)) return p;
    return std::nullopt;
  }
  const Rat t = q_cross(q_sub(c, a), s) / denom;
  const Rat u = q_cross(q_sub(c, a), r) / denom;
  if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
  return q_add(a, q_scale(t, r));
}

bool segments_overlap(const QVec2& a, const QVec2& b,
                      const QVec2& c, const QVec2& d) {
  if (orientation(a, b, c) != 0 || orientation(a, b, d) != 0) return false;
  const QVec2 r = q_sub(b, a);
  const Rat rr = q_dot(r, r);
  if (rr == 0) return false;
  Rat t0 = q_dot(q_sub(c, a), r) / rr;
  Rat t1 = q_dot(q_sub(d, a), r) / rr;
  if (t0 > t1) std::swap(t0, t1);
  const Rat lo = std::max(t0, Rat(0));
  const Rat hi = std::min(t1, Rat(1));
  return lo < hi;  // positive-length common piece
}

Rat polygon_signed_area2(const Polygon& poly) {
  Rat acc = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) acc += q_cross(poly.vertex(i), poly.vertex(i + 1));
  return acc;
}

bool polygon_is_ccw(const Polygon& poly) {
  return polygon_signed_area2(poly) > 0;
}

bool polygon_is_simple(const Polygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (poly.vertex(i) == poly.vertex(i + 1)) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      const QVec2 a = poly.edge_start(i), b = poly.edge_end(i);
      const QVec2 c = poly.edge_start(j), d = poly.edge_end(j);
      if (adjacent) {
        if (segments_overlap(a, b, c, d)) return false;
        continue;
      }
      if (segments_overlap(a, b, c, d)) return false;
      if (segment_intersection(a, b, c, d)) return false;
    }
  }
  return true;
}

Location locate_point(const Polygon& poly, const QVec2& p) {
  const std::size_t n = poly.size();
  for (std::size_t e = 0; e < n; ++e)
    if (point_on_segment(p, poly.edge_start(e), poly.edge_end(e))) return Location::Boundary;
  // Half-open crossing parity against the horizontal ray to +x.
  bool inside = false;
  for (std::size_t e = 0; e < n; ++e) {
    const QVec2 a = poly.edge_start(e);
    const QVec2 b = poly.edge_end(e);
    if ((a.y > p.y) == (b.y > p.y)) continue;
    const Rat x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
    if (p.x < x_cross) inside = !inside;
  }
  return inside ? Location::Inside : Location::Outside;
}

std::optional<std::size_t> boundary_edge_of(const Polygon& poly, const QVec2& p) {
  const std::size_t n = poly.size();
  for (std::size_t e = 0; e < n; ++e) {
    if (p == poly.edge_end(e)) continue;  // belongs to the next edge
    if (point_on_segment(p, poly.edge_start(e), poly.edge_end(e))) return e;
  }
  return std::nullopt;
}

std::optional<RayHit> first_boundary_hit(const Polygon& poly, const QVec2& p,
                                         const QVec2& dir) {
  if (dir.x == 0 && dir.y == 0) fail(ErrorKind::Domain, "ray direction must be nonzero");
  std::optional<RayHit> best;
  const std::size_t n = poly.size();
  for (std::size_t e = 0; e < n; ++e) {
    const QVec2 s = poly.edge_start(e);
    const QVec2 t_end = poly.edge_end(e);
    const QVec2 seg = q_sub(t_end, s);
    const Rat denom = q_cross(dir, seg);
    if (denom == 0) {
      if (orientation(s, t_end, p) != 0) continue;
      // Ray runs along this edge; the first endpoint ahead of p wins.
      const Rat dd = q_dot(dir, dir);
      for (const QVec2& q : {s, t_end}) {
        const Rat t = q_dot(q_sub(q, p), dir) / dd;
        if (t <= 0) continue;
        if (!best || t < best->t) best = RayHit{t, q, e, true};
      }
      continue;
    }
    const Rat t = q_cross(q_sub(s, p), seg) / denom;
    const Rat u = q_cross(q_sub(s, p), dir) / denom;
    if (t <= 0 || u < 0 || u > 1) continue;
    if (!best || t < best->t) {
      const QVec2 hit = q_add(p, q_scale(t, dir));
      best = RayHit{t, hit, e, u == 0 || u == 1};
    }
  }
  return best;
}

void polygon_bbox(const Polygon& poly, QVec2& lo, QVec2& hi) {
  if (poly.size() == 0) fail(ErrorKind::Domain, "empty polygon has no bounding box");
  lo = hi = poly.vertices.front();
  for (const QVec2& v : poly.vertices) {
    lo.x = std::min(lo.x, v.x);
    lo.y = std::min(lo.y, v.y);
    hi.x = std::max(hi.x, v.x);
    hi.y = std::max(hi.y, v.y);
  }
}

}  // namespace syz
