#pragma once

// Period integrals between closed leaves of a quadratic differential. The
// symplectic length is the mass of the annulus between the leaves under a
// rotation-invariant area density, computed as a circulation difference
// (Green's theorem on the two loops); the complex length is the square-root
// differential integrated along a straight transverse path with branch
// continuation. The double cover doubles both periods formally, so that
// identity is exact.

#include "syzkit/quad_diff.hpp"

namespace syz {

// Fubini-Study density profile scaled to a prescribed total plane mass:
// rho(r^2) = A / (pi (1 + r^2)^2).
struct AreaDensity {
  double total_area = 1.0;
};

double density_at(const AreaDensity& d, double r_squared);

// Mass of the disc |z| <= radius in closed form: A r^2 / (1 + r^2). This is
// the quadrature oracle for the circulation integrals.
double disc_mass(const AreaDensity& d, double radius);

struct PeriodPair {
  double symplectic_length = 0.0;
  double complex_length = 0.0;
};

// pre: both leaves closed and non-crossing, inner inside outer. Identical
// leaves are the degenerate case and give (0, 0); crossing leaves are a
// geometry error. complex_length is |integral of Re(sqrt(p) dz)| along the
// straight path between the leaves' first points, adaptively refined to
// 1e-8.
PeriodPair period_pair(const QuadDifferential& theta, const AreaDensity& density,
                       const Trajectory& inner, const Trajectory& outer);

PeriodPair double_cover_periods(const PeriodPair& base);

}  // namespace syz
