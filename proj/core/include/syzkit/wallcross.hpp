#pragma once

// Walls in the base plane, the chamber-crossing substitutions they induce on
// Laurent elements, and the instanton-corrected gluing relations of the
// blowup model.
//
// Conventions. A wall carries a segment support, a primitive integer normal
// n0 perpendicular to it, and a function f with unit constant term whose
// monomials pair to zero with n0. Crossing in the direction of n0 sends
// z^m to z^m f^{<m,n0>}; crossing against n0 uses the inverse exponent.
// When a wall renames coordinates (u on one side, v on the other), the
// renaming is applied after the substitution when crossing along n0 and its
// inverse is applied before when crossing back, so a round trip is the
// identity modulo truncation.

#include <optional>
#include <string>
#include <vector>

#include "syzkit/geometry.hpp"
#include "syzkit/laurent.hpp"
#include "syzkit/unimodular.hpp"

namespace syz {

struct Wall {
  std::string name;
  QVec2 support_a;
  QVec2 support_b;
  IVec2 normal;             // primitive, perpendicular to the support
  LaurentElement function;  // unit constant term, invariant under the crossing
  std::optional<std::vector<std::vector<long long>>> renaming;  // |det| = 1

  bool operator==(const Wall&) const = default;
};

struct GluingRelation {
  std::string left;       // label of the glued product, e.g. "u*v"
  LaurentElement right;   // one variable z; q^0 z^0 coefficient is 1

  bool operator==(const GluingRelation&) const = default;
};

struct WallChamber {
  std::string name;
  QVec2 point;

  bool operator==(const WallChamber&) const = default;
};

// A self-contained wall-crossing scene: walls, the gluing relations they
// certify, named chamber probe points, and enough framing to draw it.
struct WallScenario {
  std::string name;
  std::vector<std::string> variable_names;
  std::vector<Wall> walls;
  std::vector<GluingRelation> relations;
  std::vector<WallChamber> chambers;
  QVec2 frame_lo;
  QVec2 frame_hi;
  std::optional<QVec2> singular_position;
  std::optional<IVec2> vanishing_cycle;
  std::optional<QVec2> cut_to;

  bool operator==(const WallScenario&) const = default;
};

void validate_wall(const Wall& w);
void validate_gluing(const GluingRelation& r);

// z^m -> z^m f^{orientation * <m,n0>} on a single monomial with coefficient c.
// A negative total exponent needs the series inverse of f, hence a truncation
// order; without one that case is a truncation-required error.
LaurentElement cross_monomial(const Wall& w, const std::vector<long long>& exponents,
                              const EnergyScalar& c, int orientation,
                              const std::optional<Rat>& truncation = std::nullopt);

// Multiplicative extension of cross_monomial, term by term.
LaurentElement cross_element(const Wall& w, const LaurentElement& x, int orientation,
                             const std::optional<Rat>& truncation = std::nullopt);

// u*v = 1 + q^eps z^{-1}.
GluingRelation corrected_gluing_single(const Rat& eps);

// u*v = (1 + q^eps z^{-1})(1 + q^eps z), expanded.
GluingRelation corrected_gluing_double(const Rat& eps);

// Does z -> z^{-1} fix the right-hand side?
bool involution_compatible(const GluingRelation& r);

// u = v^{-1}(1 + q^eps z^{-1}) substituted into u*v reproduces the
// single-wall right side exactly.
bool single_substitution_holds(const Rat& eps);

// The double relation minus the single relation is divisible by q^eps z
// within non-negative energy exponents.
bool double_specializes_to_single(const Rat& eps);

// Transport w along the waypoint path, applying each transversal wall
// crossing in path order. Tangential contact, a waypoint on a wall, a
// crossing at a support endpoint, or two simultaneous crossings are path
// errors. When a crossing needs a series inverse and no truncation order was
// given, the order defaults to 10 times the smallest positive energy
// exponent appearing across the wall functions.
LaurentElement continue_superpotential(const LaurentElement& w, const std::vector<Wall>& walls,
                                       const std::vector<QVec2>& path,
                                       std::optional<Rat> truncation = std::nullopt);

// Smallest positive energy exponent among terms of f - 1 over the walls,
// times ten. Domain error when no wall carries a positive exponent.
Rat default_truncation_order(const std::vector<Wall>& walls);

}  // namespace syz
