#pragma once

// Eigen-rays of singular points traced through the cut presentation, the
// alignment detector, and the seam census for doubled bases.
//
// All tracing is exact rational geometry. A ray advances in straight pieces;
// each piece ends at the earliest of: a singular position on its line
// (head-on hit), the chart boundary, or a transversal cut crossing, with
// that priority on ties. Crossing a cut multiplies the direction by the
// cut's monodromy (as read through the ray's structure tag), to the power
// +1 or -1 according to the side the cut is crossed from.
//
// On a doubled base the chart is shared by the two sheets: cuts and
// singular positions repeat on both, and transport works out to the same
// rule on either sheet (the seam reflections cancel in conjugation). The
// boundary is the seam: hitting an axis-parallel edge flips the sheet and
// reflects the direction across the edge; hitting a corner stops the ray;
// hitting a slanted edge stops it with an unsupported-seam event. Rays of
// seam singularities run along the seam when their direction is parallel
// to their edge, and otherwise start inward on each of the two sheets.

#include <optional>
#include <string>
#include <vector>

#include "syzkit/affine_base.hpp"
#include "syzkit/geometry.hpp"
#include "syzkit/rational.hpp"
#include "syzkit/unimodular.hpp"

namespace syz {

enum class RayEnd {
  Boundary,         // plain chart boundary (no doubling)
  HeadOn,           // ran into a singular position
  Budget,           // length budget exhausted
  Corner,           // doubled: reached a chart corner
  SeamUnsupported,  // doubled: hit a non-axis-parallel seam edge
};

const char* ray_end_name(RayEnd e);

struct Ray {
  std::string origin;  // singular point id
  int origin_sheet = 0;
  StructureTag tag = StructureTag::Symplectic;
  int sign = 1;
  bool seam_ray = false;  // runs along the seam of a double

  std::vector<QVec2> trace;       // piece endpoints, first entry = origin position
  std::vector<IVec2> directions;  // one primitive direction per piece
  std::vector<int> sheets;        // one sheet label per piece
  RayEnd end = RayEnd::Boundary;
  std::string end_detail;  // head-on target id, corner vertex, ...
  Rat length;              // total L-infinity length actually traced
};

struct TraceOptions {
  // L-infinity length budget in chart units; zero or negative is a domain
  // error. Default: 4 x the bounding-box L-infinity diameter.
  std::optional<Rat> budget;
};

Rat default_budget(const Polygon& chart);

// Direction of the (tag, +1) eigen-ray at a singular point: the vanishing
// cycle for a symplectic chart, its quarter turn for a complex one. Both are
// fixed by the monodromy the corresponding chart reads.
IVec2 eigen_direction(StructureTag tag, const SingularPoint& p);

Ray trace_ray(const AffineBase& base, const std::string& origin, StructureTag tag, int sign,
              const TraceOptions& options = {});

// Doubled version. origin_sheet picks the copy the ray starts on. For a seam
// origin whose eigen-direction is transverse to its edge, sign must point
// into the chart (the outward germ is the same ray seen from the other
// sheet); for a parallel eigen-direction the ray runs along the seam and
// origin_sheet must be 0.
Ray trace_ray(const DoubledBase& d, const std::string& origin, StructureTag tag, int sign,
              int origin_sheet, const TraceOptions& options = {});

// Every eigen-ray of every singular point, in a fixed deterministic order:
// points as stored, symplectic before complex, sign +1 before -1 (and for
// doubles, sheet 0 before sheet 1 within that).
std::vector<Ray> trace_all_rays(const AffineBase& base, const TraceOptions& options = {});
std::vector<Ray> trace_all_rays(const DoubledBase& d, const TraceOptions& options = {});

enum class AlignmentKind { LagrangianSphere, Minus2Curve };

const char* alignment_kind_name(AlignmentKind k);

struct Alignment {
  std::size_t ray_a = 0;  // indices into the traced ray list, ray_a < ray_b
  std::size_t ray_b = 0;
  QVec2 seg_from;  // common straight segment, endpoints in lexicographic order
  QVec2 seg_to;
  int sheet = 0;
  StructureTag tag = StructureTag::Symplectic;
  AlignmentKind kind = AlignmentKind::LagrangianSphere;
  bool on_seam = false;
  // Remark-level caveat: matching rays certify a sphere/curve only if the
  // fiber translations also match, which this model does not track.
  bool fiber_translation_caveat = true;
};

// All unordered ray pairs of equal tag sharing a positive-length segment on
// one sheet with opposite directions, deduplicated and sorted.
std::vector<Alignment> alignments_from_rays(const std::vector<Ray>& rays, const Polygon& chart);

std::vector<Alignment> detect_alignments(const AffineBase& base,
                                         const TraceOptions& options = {});
std::vector<Alignment> detect_alignments(const DoubledBase& d,
                                         const TraceOptions& options = {});

struct SeamCensus {
  std::size_t seam_singular_count = 0;
  std::size_t interior_pair_count = 0;   // mirror pairs, one per interior point
  std::size_t matched_pair_count = 0;    // mirror pairs joined by an alignment
  std::size_t seam_sphere_alignments = 0;
  std::size_t seam_curve_alignments = 0;
  std::vector<std::string> matched_ids;
  std::vector<std::string> notes;
  std::vector<Ray> rays;
  std::vector<Alignment> alignments;
};

SeamCensus seam_census(const DoubledBase& d, const TraceOptions& options = {});

}  // namespace syz
