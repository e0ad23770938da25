#pragma once

// Disc classes on a Lagrangian torus fiber and the superpotential they sum
// to. Counts are inputs here, not something we compute.

#include <vector>

#include "syzkit/laurent.hpp"
#include "syzkit/rational.hpp"

namespace syz {

struct DiscClass {
  std::vector<long long> boundary_class;  // class of the boundary circle in the fiber torus
  Rat area;                               // symplectic area, must be positive
  long long count = 1;                    // how many such discs
  long long divisor_intersection = 1;     // algebraic intersection with the divisor

  bool operator==(const DiscClass&) const = default;
};

// Twice the divisor intersection number.
long long maslov_index(const DiscClass& beta);

// q^{area} z^{boundary_class}. The holonomy of the flat connection is folded
// into the torus variables, so the weight is a bare monomial.
LaurentElement disc_weight(const DiscClass& beta);

// Sum of count * weight over the list. All classes must share one variable
// count and all areas must be positive.
LaurentElement superpotential_from_discs(const std::vector<DiscClass>& classes);

}  // namespace syz
