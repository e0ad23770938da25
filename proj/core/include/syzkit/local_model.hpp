#pragma once

// Pointwise numerical verification of the hypersurface local model: on
// Y = { z^2 = u^2 - eps * q(v) } the two-parameter family
// L_{a,b} = { Re(v) = a, Re(u conj z) = b } should be Lagrangian for the
// standard Kahler form omega_0 and special for Im(z^{-1} du ^ dv). The check
// samples the family, builds an exact tangent basis from the linearized
// constraints, and reports the restricted forms together with the tangency
// and contraction identities of the rotation field xi = (iu, iz, 0) and the
// involution (z,u,v) -> (-z,u,v) that flips the sign of b.

#include <vector>

#include "syzkit/quad_diff.hpp"

namespace syz {

struct LocalModelOptions {
  int samples = 100;
  unsigned long long seed = 1;
  double fd_step = 1e-2;  // finite-difference step for the convergence pair
};

struct LocalModelSample {
  Cx z, u, v;
  bool singular = false;    // z = u = 0: the fiber point where the family degenerates
  bool degenerate = false;  // constraint rank dropped; excluded like singular ones
  double constraint_residual = 0.0;  // defining equations at the sample
  double omega_residual = 0.0;       // |omega_0(X1, X2)| on the tangent basis
  double im_omega_residual = 0.0;    // |Im(z^{-1} du^dv)(X1, X2)|
};

// One explicit family point: v = a + i*y and s = u + z = sqrt(sigma) e^{i
// theta} with sigma the positive root of sigma^2 - 4 b sigma = |eps q(v)|^2.
LocalModelSample local_model_sample(double eps, const Polynomial& q, double a,
                                    double b, double y, double theta);

struct LocalModelReport {
  double eps = 0.0, a = 0.0, b = 0.0;
  std::vector<LocalModelSample> samples;
  int singular_count = 0;
  int degenerate_count = 0;
  double max_constraint_residual = 0.0;
  double max_omega_residual = 0.0;
  double max_im_omega_residual = 0.0;
  double max_xi_tangency_residual = 0.0;   // linearized constraints applied to xi
  double max_xi_omega_residual = 0.0;      // omega_0(xi, X) over tangent X
  double max_xi_im_omega_identity = 0.0;   // Im Omega(xi, X) - Re(X_v)
  double max_involution_residual = 0.0;    // (-z,u,v) against the b -> -b slice
  // Residual of the forms on a central-difference tangent basis of the
  // explicit parametrization, at fd_step and fd_step/2; the pair shrinks
  // quadratically, which pins the analytic basis as the h -> 0 limit.
  double fd_step = 0.0;
  double fd_residual = 0.0;
  double fd_residual_half = 0.0;
};

// eps must be nonzero and samples positive. Singular and rank-degenerate
// samples are flagged and excluded from the residual maxima.
LocalModelReport local_model_check(double eps, const Polynomial& q, double a, double b,
                                   const LocalModelOptions& options = {});

}  // namespace syz
