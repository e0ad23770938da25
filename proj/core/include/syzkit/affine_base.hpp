#pragma once

// Singular integral affine bases in cut presentation, their monodromy
// bookkeeping, the symplectic/complex structure exchange, and the doubling
// construction.
//
// Conventions fixed here (they make every downstream check deterministic):
//  - 2D bases are a single ccw polygon chart; vertex 0 is the distinguished
//    base vertex for boundary orderings.
//  - each singular point carries one straight cut from its position to a
//    boundary point (cut_to).
//  - the total-monodromy check composes cut monodromies in ccw order of
//    their boundary endpoints and multiplies the boundary matrix on the
//    right; the presentation is consistent when that product is the
//    identity.
//  - a complex-tagged chart reads the transposed monodromy, so a pair of
//    charts over the same data satisfies the transpose duality exactly.
//  - 1D bases carry no singular points, just the two affine lengths.

#include <optional>
#include <string>
#include <vector>

#include "syzkit/geometry.hpp"
#include "syzkit/rational.hpp"
#include "syzkit/unimodular.hpp"

namespace syz {

enum class StructureTag { Symplectic, Complex };
enum class Topology { Interval, Disc, Circle, Sphere };

const char* structure_tag_name(StructureTag t);
const char* topology_name(Topology t);
std::optional<StructureTag> structure_tag_from_name(const std::string& s);
std::optional<Topology> topology_from_name(const std::string& s);

struct SingularPoint {
  std::string id;
  QVec2 position;
  IVec2 vanishing_cycle{1, 0};
  long long multiplicity = 1;  // k: monodromy class [[1,k],[0,1]]
  QVec2 cut_to;                // boundary endpoint of the straight cut
  bool operator==(const SingularPoint&) const = default;
};

QVec2 cut_direction(const SingularPoint& p);

struct AffineBase {
  std::string name;
  int dimension = 2;
  Topology topology = Topology::Disc;
  StructureTag tag = StructureTag::Symplectic;

  // 2D data
  Polygon boundary;
  std::vector<SingularPoint> points;
  long long normal_degree = 0;

  // 1D data: the two affine lengths of the interval/circle pair
  Rat symplectic_length = 0;
  Rat complex_length = 0;

  bool operator==(const AffineBase&) const = default;

  std::size_t index_of(const std::string& point_id) const;  // not-found error
  const SingularPoint& point(const std::string& point_id) const;
};

// Throws on an ill-formed base: bad polygon (topology error), points off the
// interior (placement), cuts that overlap or graze other singular points
// (presentation), imprimitive cycles (invariant).
void validate_base(const AffineBase& b);

// Key for ccw boundary ordering measured from vertex 0: (edge index,
// fraction along the edge). Throws placement error if p is not on the
// boundary.
std::pair<std::size_t, Rat> boundary_order_key(const Polygon& poly, const QVec2& p);

// Indices of b.points sorted by the ccw boundary position of their cut
// endpoints.
std::vector<std::size_t> ccw_cut_order(const AffineBase& b);

// Monodromy attached to a singular point as read through a chart tag:
// symplectic reads I + k v v_perp^T, complex reads the transpose.
UnimodularMap monodromy_for(StructureTag tag, const SingularPoint& p);
UnimodularMap monodromy_around(const AffineBase& b, const std::string& point_id);

// [[1,d],[0,1]] in the (longitude, meridian) basis; disc only.
UnimodularMap boundary_monodromy(const AffineBase& b);

struct MonodromyFactor {
  std::string point_id;
  UnimodularMap matrix;
};

struct ConsistencyReport {
  bool consistent = false;
  UnimodularMap product;   // ordered product of the factors below
  UnimodularMap boundary;  // boundary contribution the product must cancel
  std::vector<MonodromyFactor> factors;
};

ConsistencyReport check_total_monodromy(const AffineBase& b);

struct BasePair {
  std::string name;
  AffineBase symplectic_base;  // tag Symplectic
  AffineBase complex_base;     // tag Complex, points matched by index
  bool operator==(const BasePair&) const = default;
};

void validate_pair(const BasePair& p);

// Pair built over one set of chart data, differing only in tag; the
// transpose correspondence then holds by construction.
BasePair pair_over(const AffineBase& b, const std::string& pair_name = "");

// Swap the two structures. Exact involution; for 1D members the stored
// (symplectic, complex) lengths swap along with the roles.
BasePair exchange_structures(const BasePair& p);

struct DoubledBase {
  std::string name;
  AffineBase half;                        // disc (2D) or interval (1D)
  std::vector<SingularPoint> seam_points; // on the boundary of half

  bool operator==(const DoubledBase&) const = default;

  Topology topology() const;              // Sphere or Circle
  std::size_t total_singular_count() const;
  Rat doubled_symplectic_length() const;  // 1D only
  Rat doubled_complex_length() const;
};

// Glue two copies of `half` along the boundary, inserting the given seam
// singularities. Seam points must sit on the boundary (placement error).
DoubledBase make_double(const AffineBase& half, std::vector<SingularPoint> seam_points,
                        const std::string& name = "");

void validate_double(const DoubledBase& d);

// Conjugation by the seam reflection composed with inversion: the monodromy
// a cut contributes when traversed on the mirrored copy.
UnimodularMap seam_reflect(const UnimodularMap& m);

// Factor list: half cuts in ccw order, seam points in ccw order, then the
// mirrored cuts in reversed order (each seam-reflected). Consistent when
// the product is the identity.
ConsistencyReport check_total_monodromy(const DoubledBase& d);

}  // namespace syz
