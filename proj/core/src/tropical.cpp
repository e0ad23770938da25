#include "syzkit/tropical.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

#include "syzkit/errors.hpp"

namespace syz {

namespace {

// Pieces are capped so a malformed chart cannot loop forever; the length
// budget normally ends the ray long before this bites.
constexpr int kMaxPieces = 4096;

Rat linf(const QVec2& v) { return std::max(rat_abs(v.x), rat_abs(v.y)); }

struct CutData {
  const SingularPoint* owner = nullptr;
  QVec2 base;
  QVec2 to;
  QVec2 vec;  // to - base
};

struct Site {
  const SingularPoint* point = nullptr;
  bool interior = true;  // interior sites repeat on both sheets of a double
};

struct TraceContext {
  const Polygon* chart = nullptr;
  std::vector<CutData> cuts;
  std::vector<Site> sites;
  bool doubled = false;
  Rat budget;
};

Rat resolve_budget(const Polygon& chart, const TraceOptions& options) {
  if (options.budget) {
    if (!(*options.budget > 0))
      fail(ErrorKind::Domain, "ray length budget must be positive");
    return *options.budget;
  }
  return default_budget(chart);
}

TraceContext make_context(const AffineBase& half, bool doubled,
                          const std::vector<SingularPoint>* seam,
                          const TraceOptions& options) {
  TraceContext ctx;
  ctx.chart = &half.boundary;
  ctx.doubled = doubled;
  ctx.budget = resolve_budget(half.boundary, options);
  for (const auto& p : half.points) {
    ctx.sites.push_back({&p, true});
    ctx.cuts.push_back({&p, p.position, p.cut_to, q_sub(p.cut_to, p.position)});
  }
  if (seam)
    for (const auto& s : *seam) ctx.sites.push_back({&s, false});
  return ctx;
}

bool lex_less(const QVec2& a, const QVec2& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// One straight-line trace. pos/dir/sheet describe the first piece; the Ray
// metadata (origin, tag, sign, seam flag) is already filled in.
void run_trace(const TraceContext& ctx, Ray& ray, QVec2 pos, IVec2 dir, int sheet) {
  ray.trace.push_back(pos);
  Rat spent = 0;

  // Event priorities on a time tie. A singular hit beats the boundary
  // (relevant when a seam singularity sits exactly at a bounce point) and
  // the boundary beats a cut (relevant at cut endpoints, which do not count
  // as crossings anyway).
  enum { kSingular = 0, kSeamStop = 1, kBoundary = 2, kCut = 3 };

  for (int piece = 0; piece < kMaxPieces; ++piece) {
    const QVec2 dq = q_from_ivec(dir);

    bool have = false;
    Rat best_t;
    int best_pri = 0;
    std::size_t best_idx = 0;
    RayHit best_hit;
    auto better = [&](const Rat& t, int pri) {
      return !have || t < best_t || (t == best_t && pri < best_pri);
    };

    for (std::size_t i = 0; i < ctx.sites.size(); ++i) {
      const QVec2& sp = ctx.sites[i].point->position;
      if (sp == pos) continue;
      const QVec2 delta = q_sub(sp, pos);
      if (q_cross(dq, delta) != 0) continue;
      const Rat t = dq.x != 0 ? delta.x / dq.x : delta.y / dq.y;
      if (!(t > 0)) continue;
      if (better(t, kSingular)) {
        have = true;
        best_t = t;
        best_pri = kSingular;
        best_idx = i;
      }
    }

    if (ray.seam_ray) {
      // A ray running along the seam stops if it meets the boundary
      // endpoint of a cut: continuing would need side bookkeeping for the
      // cut germs on both sheets at once.
      for (std::size_t k = 0; k < ctx.cuts.size(); ++k) {
        const QVec2 delta = q_sub(ctx.cuts[k].to, pos);
        if (q_cross(dq, delta) != 0) continue;
        const Rat t = dq.x != 0 ? delta.x / dq.x : delta.y / dq.y;
        if (!(t > 0)) continue;
        if (better(t, kSeamStop)) {
          have = true;
          best_t = t;
          best_pri = kSeamStop;
          best_idx = k;
        }
      }
    }

    if (auto hit = first_boundary_hit(*ctx.chart, pos, dq)) {
      if (better(hit->t, kBoundary)) {
        have = true;
        best_t = hit->t;
        best_pri = kBoundary;
        best_hit = *hit;
      }
    }

    for (std::size_t k = 0; k < ctx.cuts.size(); ++k) {
      const CutData& cut = ctx.cuts[k];
      const Rat denom = q_cross(dq, cut.vec);
      if (denom == 0) continue;  // parallel or collinear: not a crossing
      const QVec2 rel = q_sub(cut.base, pos);
      const Rat t = q_cross(rel, cut.vec) / denom;
      if (!(t > 0)) continue;
      const Rat u = q_cross(rel, dq) / denom;
      if (!(u > 0 && u < 1)) continue;  // endpoints do not count
      if (better(t, kCut)) {
        have = true;
        best_t = t;
        best_pri = kCut;
        best_idx = k;
      }
    }

    if (!have)
      fail(ErrorKind::Invariant,
           "ray found no event inside the chart; boundary data is inconsistent");

    const Rat rate = linf(dq);
    const Rat remaining = ctx.budget - spent;
    if (best_t * rate > remaining) {
      const Rat tb = remaining / rate;
      if (tb > 0) {
        ray.trace.push_back(q_add(pos, q_scale(tb, dq)));
        ray.directions.push_back(dir);
        ray.sheets.push_back(sheet);
      }
      ray.end = RayEnd::Budget;
      ray.end_detail = "length budget exhausted";
      ray.length = ctx.budget;
      return;
    }

    spent += best_t * rate;
    ray.length = spent;

    if (best_pri == kSingular) {
      const Site& site = ctx.sites[best_idx];
      ray.trace.push_back(site.point->position);
      ray.directions.push_back(dir);
      ray.sheets.push_back(sheet);
      ray.end = RayEnd::HeadOn;
      ray.end_detail = site.point->id;
      if (ctx.doubled && site.interior && sheet == 1) ray.end_detail += "'";
      return;
    }

    if (best_pri == kSeamStop) {
      ray.trace.push_back(ctx.cuts[best_idx].to);
      ray.directions.push_back(dir);
      ray.sheets.push_back(sheet);
      ray.end = RayEnd::SeamUnsupported;
      ray.end_detail =
          "seam ray reaches the cut endpoint of '" + ctx.cuts[best_idx].owner->id + "'";
      return;
    }

    if (best_pri == kBoundary) {
      ray.trace.push_back(best_hit.point);
      ray.directions.push_back(dir);
      ray.sheets.push_back(sheet);

      if (!ctx.doubled) {
        ray.end = RayEnd::Boundary;
        return;
      }
      if (best_hit.at_vertex) {
        ray.end = RayEnd::Corner;
        for (std::size_t v = 0; v < ctx.chart->size(); ++v)
          if (ctx.chart->vertex(v) == best_hit.point) {
            ray.end_detail = "vertex " + std::to_string(v);
            break;
          }
        return;
      }
      // Bouncing exactly where a cut meets the seam is only well defined
      // when the cut's monodromy fixes the direction (then the side
      // bookkeeping cannot matter).
      for (const auto& cut : ctx.cuts) {
        if (best_hit.point == cut.to) {
          const UnimodularMap m = monodromy_for(ray.tag, *cut.owner);
          if (!(m.apply(dir) == dir)) {
            ray.end = RayEnd::SeamUnsupported;
            ray.end_detail =
                "seam contact at the cut endpoint of '" + cut.owner->id + "'";
            return;
          }
          break;
        }
      }
      const QVec2 es = ctx.chart->edge_start(best_hit.edge);
      const QVec2 ee = ctx.chart->edge_end(best_hit.edge);
      if (es.y == ee.y) {
        dir = IVec2{dir.x, -dir.y};
      } else if (es.x == ee.x) {
        dir = IVec2{-dir.x, dir.y};
      } else {
        ray.end = RayEnd::SeamUnsupported;
        ray.end_detail = "edge " + std::to_string(best_hit.edge) + " is not axis-parallel";
        return;
      }
      pos = best_hit.point;
      sheet ^= 1;
      continue;
    }

    // Transversal cut crossing: transport the direction by the cut's
    // monodromy, signed by the side the cut is crossed from.
    const CutData& cut = ctx.cuts[best_idx];
    const QVec2 x = q_add(pos, q_scale(best_t, dq));
    ray.trace.push_back(x);
    ray.directions.push_back(dir);
    ray.sheets.push_back(sheet);
    const int sigma = q_cross(cut.vec, dq) > 0 ? 1 : -1;
    const UnimodularMap m = monodromy_for(ray.tag, *cut.owner);
    dir = (sigma > 0 ? m : m.inverse()).apply(dir);
    if (!is_primitive(dir))
      fail(ErrorKind::Invariant, "cut transport produced an imprimitive direction");
    pos = x;
  }

  ray.end = RayEnd::Budget;
  ray.end_detail = "segment cap reached";
  ray.length = spent;
}

Ray start_ray(const std::string& origin, int origin_sheet, StructureTag tag, int sign,
              bool seam_ray) {
  Ray r;
  r.origin = origin;
  r.origin_sheet = origin_sheet;
  r.tag = tag;
  r.sign = sign;
  r.seam_ray = seam_ray;
  return r;
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1) fail(ErrorKind::Domain, "ray sign must be +1 or -1");
}

// Classification of a seam point's eigen-direction against its edge:
// +1 parallel, 0 transverse-inward-is-positive-sign unused; we return the
// edge vector instead and let callers take cross/dot.
QVec2 seam_edge_vector(const Polygon& chart, const SingularPoint& s) {
  const auto edge = boundary_edge_of(chart, s.position);
  if (!edge)
    fail(ErrorKind::Placement, "seam singularity '" + s.id + "' is not on the boundary");
  return q_sub(chart.edge_end(*edge), chart.edge_start(*edge));
}

}  // namespace

const char* ray_end_name(RayEnd e) {
  switch (e) {
    case RayEnd::Boundary: return "boundary";
    case RayEnd::HeadOn: return "head-on";
    case RayEnd::Budget: return "budget";
    case RayEnd::Corner: return "corner";
    case RayEnd::SeamUnsupported: return "seam-unsupported";
  }
  return "?";
}

const char* alignment_kind_name(AlignmentKind k) {
  return k == AlignmentKind::LagrangianSphere ? "lagrangian-sphere" : "minus-2-curve";
}

Rat default_budget(const Polygon& chart) {
  QVec2 lo, hi;
  polygon_bbox(chart, lo, hi);
  const QVec2 d = q_sub(hi, lo);
  return 4 * std::max(d.x, d.y);
}

IVec2 eigen_direction(StructureTag tag, const SingularPoint& p) {
  return tag == StructureTag::Symplectic ? p.vanishing_cycle : perp_ccw(p.vanishing_cycle);
}

Ray trace_ray(const AffineBase& base, const std::string& origin, StructureTag tag,
              int sign, const TraceOptions& options) {
  validate_base(base);
  if (base.dimension != 2)
    fail(ErrorKind::Topology, "eigen-rays need a 2-dimensional chart");
  check_sign(sign);
  const SingularPoint& p = base.point(origin);
  const TraceContext ctx = make_context(base, false, nullptr, options);
  Ray ray = start_ray(origin, 0, tag, sign, false);
  IVec2 dir = eigen_direction(tag, p);
  if (sign < 0) dir = negate(dir);
  run_trace(ctx, ray, p.position, dir, 0);
  return ray;
}

Ray trace_ray(const DoubledBase& d, const std::string& origin, StructureTag tag, int sign,
              int origin_sheet, const TraceOptions& options) {
  validate_double(d);
  if (d.half.dimension != 2)
    fail(ErrorKind::Topology, "eigen-rays need a 2-dimensional chart");
  check_sign(sign);
  if (origin_sheet != 0 && origin_sheet != 1)
    fail(ErrorKind::Domain, "origin sheet must be 0 or 1");
  const TraceContext ctx = make_context(d.half, true, &d.seam_points, options);

  for (const auto& p : d.half.points) {
    if (p.id != origin) continue;
    Ray ray = start_ray(origin, origin_sheet, tag, sign, false);
    IVec2 dir = eigen_direction(tag, p);
    if (sign < 0) dir = negate(dir);
    run_trace(ctx, ray, p.position, dir, origin_sheet);
    return ray;
  }

  for (const auto& s : d.seam_points) {
    if (s.id != origin) continue;
    const QVec2 ev = seam_edge_vector(d.half.boundary, s);
    IVec2 dir = eigen_direction(tag, s);
    if (sign < 0) dir = negate(dir);
    const QVec2 dq = q_from_ivec(dir);
    if (q_cross(ev, dq) == 0) {
      // Runs along the seam; the two sheets see the same ray.
      if (origin_sheet != 0)
        fail(ErrorKind::Placement,
             "seam ray of '" + origin + "' runs along the seam; use origin sheet 0");
      Ray ray = start_ray(origin, 0, tag, sign, true);
      run_trace(ctx, ray, s.position, dir, 0);
      return ray;
    }
    // Transverse: only the inward germ lives on this sheet. The inward
    // normal of a ccw chart is the ccw quarter turn of the edge vector.
    const QVec2 inward{-ev.y, ev.x};
    if (!(q_dot(dq, inward) > 0))
      fail(ErrorKind::Placement, "seam ray of '" + origin +
                                     "' points out of the chart; the outward germ is "
                                     "the mirror ray on the other sheet");
    Ray ray = start_ray(origin, origin_sheet, tag, sign, false);
    run_trace(ctx, ray, s.position, dir, origin_sheet);
    return ray;
  }

  fail(ErrorKind::NotFound, "no singular point named '" + origin + "'");
}

std::vector<Ray> trace_all_rays(const AffineBase& base, const TraceOptions& options) {
  validate_base(base);
  if (base.dimension != 2)
    fail(ErrorKind::Topology, "eigen-rays need a 2-dimensional chart");
  std::vector<Ray> rays;
  for (const auto& p : base.points)
    for (StructureTag tag : {StructureTag::Symplectic, StructureTag::Complex})
      for (int sign : {1, -1}) rays.push_back(trace_ray(base, p.id, tag, sign, options));
  return rays;
}

std::vector<Ray> trace_all_rays(const DoubledBase& d, const TraceOptions& options) {
  validate_double(d);
  if (d.half.dimension != 2)
    fail(ErrorKind::Topology, "eigen-rays need a 2-dimensional chart");
  std::vector<Ray> rays;
  for (const auto& p : d.half.points)
    for (StructureTag tag : {StructureTag::Symplectic, StructureTag::Complex})
      for (int sign : {1, -1})
        for (int sheet : {0, 1})
          rays.push_back(trace_ray(d, p.id, tag, sign, sheet, options));
  for (const auto& s : d.seam_points) {
    const QVec2 ev = seam_edge_vector(d.half.boundary, s);
    for (StructureTag tag : {StructureTag::Symplectic, StructureTag::Complex}) {
      const QVec2 dq = q_from_ivec(eigen_direction(tag, s));
      if (q_cross(ev, dq) == 0) {
        for (int sign : {1, -1}) rays.push_back(trace_ray(d, s.id, tag, sign, 0, options));
      } else {
        const QVec2 inward{-ev.y, ev.x};
        const int sign_in = q_dot(dq, inward) > 0 ? 1 : -1;
        for (int sheet : {0, 1})
          rays.push_back(trace_ray(d, s.id, tag, sign_in, sheet, options));
      }
    }
  }
  return rays;
}

std::vector<Alignment> alignments_from_rays(const std::vector<Ray>& rays,
                                            const Polygon& chart) {
  std::vector<Alignment> out;
  std::set<std::tuple<std::size_t, std::size_t, int, Rat, Rat, Rat, Rat>> seen;

  for (std::size_t a = 0; a < rays.size(); ++a) {
    for (std::size_t b = a + 1; b < rays.size(); ++b) {
      if (rays[a].tag != rays[b].tag) continue;
      const Ray& ra = rays[a];
      const Ray& rb = rays[b];
      for (std::size_t i = 0; i < ra.directions.size(); ++i) {
        for (std::size_t j = 0; j < rb.directions.size(); ++j) {
          if (ra.sheets[i] != rb.sheets[j]) continue;
          if (!(ra.directions[i] == negate(rb.directions[j]))) continue;
          const QVec2& a1 = ra.trace[i];
          const QVec2& a2 = ra.trace[i + 1];
          const QVec2& b1 = rb.trace[j];
          const QVec2& b2 = rb.trace[j + 1];
          if (!segments_overlap(a1, a2, b1, b2)) continue;

          // Common closed sub-segment, ordered along the dominant axis.
          const bool use_x = ra.directions[i].x != 0;
          auto coord = [&](const QVec2& p) { return use_x ? p.x : p.y; };
          const QVec2& alo = coord(a1) < coord(a2) ? a1 : a2;
          const QVec2& ahi = coord(a1) < coord(a2) ? a2 : a1;
          const QVec2& blo = coord(b1) < coord(b2) ? b1 : b2;
          const QVec2& bhi = coord(b1) < coord(b2) ? b2 : b1;
          const QVec2& from = coord(alo) < coord(blo) ? blo : alo;
          const QVec2& to = coord(ahi) < coord(bhi) ? ahi : bhi;
          if (!(coord(from) < coord(to))) continue;  // endpoint touch only

          Alignment al;
          al.ray_a = a;
          al.ray_b = b;
          al.seg_from = from;
          al.seg_to = to;
          if (lex_less(al.seg_to, al.seg_from)) std::swap(al.seg_from, al.seg_to);
          al.sheet = ra.sheets[i];
          al.tag = ra.tag;
          al.kind = ra.tag == StructureTag::Symplectic ? AlignmentKind::LagrangianSphere
                                                       : AlignmentKind::Minus2Curve;
          for (std::size_t e = 0; e < chart.size(); ++e) {
            if (point_on_segment(al.seg_from, chart.edge_start(e), chart.edge_end(e)) &&
                point_on_segment(al.seg_to, chart.edge_start(e), chart.edge_end(e))) {
              al.on_seam = true;
              break;
            }
          }
          if (seen.insert({a, b, al.sheet, al.seg_from.x, al.seg_from.y, al.seg_to.x,
                           al.seg_to.y})
                  .second)
            out.push_back(al);
        }
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const Alignment& l, const Alignment& r) {
    if (l.ray_a != r.ray_a) return l.ray_a < r.ray_a;
    if (l.ray_b != r.ray_b) return l.ray_b < r.ray_b;
    if (l.sheet != r.sheet) return l.sheet < r.sheet;
    if (!(l.seg_from == r.seg_from)) return lex_less(l.seg_from, r.seg_from);
    return lex_less(l.seg_to, r.seg_to);
  });
  return out;
}

std::vector<Alignment> detect_alignments(const AffineBase& base,
                                         const TraceOptions& options) {
  return alignments_from_rays(trace_all_rays(base, options), base.boundary);
}

std::vector<Alignment> detect_alignments(const DoubledBase& d, const TraceOptions& options) {
  return alignments_from_rays(trace_all_rays(d, options), d.half.boundary);
}

SeamCensus seam_census(const DoubledBase& d, const TraceOptions& options) {
  SeamCensus c;
  c.rays = trace_all_rays(d, options);
  c.alignments = alignments_from_rays(c.rays, d.half.boundary);
  c.seam_singular_count = d.seam_points.size();
  c.interior_pair_count = d.half.points.size();

  std::set<std::string> interior_ids;
  for (const auto& p : d.half.points) interior_ids.insert(p.id);

  std::set<std::string> matched;
  for (const auto& al : c.alignments) {
    const Ray& ra = c.rays[al.ray_a];
    const Ray& rb = c.rays[al.ray_b];
    if (ra.origin == rb.origin && ra.origin_sheet != rb.origin_sheet &&
        interior_ids.count(ra.origin))
      matched.insert(ra.origin);
    if (al.on_seam) {
      if (al.kind == AlignmentKind::LagrangianSphere)
        ++c.seam_sphere_alignments;
      else
        ++c.seam_curve_alignments;
    }
  }
  c.matched_ids.assign(matched.begin(), matched.end());
  c.matched_pair_count = c.matched_ids.size();

  for (const auto& s : d.seam_points)
    if (s.multiplicity >= 2)
      c.notes.push_back("seam point '" + s.id + "' has multiplicity " +
                        std::to_string(s.multiplicity) +
                        "; smoothing separates it into " +
                        std::to_string(s.multiplicity) + " simple seam points");
  return c;
}

}  // namespace syz
