#pragma once

// Moment polytopes cut out by inward facet inequalities <nu,x> + c >= 0 and
// the toric superpotential they define: one monomial q^{c_F} z^{nu_F} per
// facet.

#include <vector>

#include "syzkit/geometry.hpp"
#include "syzkit/laurent.hpp"
#include "syzkit/rational.hpp"

namespace syz {

struct Facet {
  std::vector<long long> normal;  // primitive, points into the polytope
  Rat offset;

  bool operator==(const Facet&) const = default;
};

struct MomentPolytope {
  std::vector<Facet> facets;

  std::size_t dimension() const;

  bool operator==(const MomentPolytope&) const = default;
};

// Checks: ambient dimension 1 or 2, primitive normals, bounded, and
// full-dimensional (an actual interval or an actual polygon, not a slab,
// point, or segment). Throws a geometry error otherwise.
void validate_polytope(const MomentPolytope& p);

// Vertices of a valid 2D polytope, deduplicated, in no promised order.
std::vector<QVec2> polytope_vertices(const MomentPolytope& p);

LaurentElement toric_superpotential(const MomentPolytope& p);

}  // namespace syz
