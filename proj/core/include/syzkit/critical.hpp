#pragma once

// Numeric critical points of a Laurent superpotential in one or two torus
// variables. Works in logarithmic coordinates, where the gradient is an
// exponential sum and Newton steps stay well scaled.

#include <complex>
#include <string>
#include <vector>

#include "syzkit/laurent.hpp"

namespace syz {

struct CriticalPoint {
  std::vector<std::complex<double>> point;
  std::complex<double> value;
  double residual = 0.0;  // max |z_i dW/dz_i| recomputed from the exact derivative

  bool operator==(const CriticalPoint&) const = default;
};

struct CriticalSearchResult {
  std::vector<CriticalPoint> points;  // sorted by (Re, Im) of the coordinates
  bool warning = false;
  std::string note;
};

// The logarithmic partial derivative z_var dW/dz_var, still exact.
LaurentElement log_derivative(const LaurentElement& w, std::size_t var);

// Multi-start damped Newton on the logarithmic gradient. Starts cover a
// fixed grid of log-moduli and phases, so the output is deterministic.
// A constant potential or a search with no converged start returns an empty
// list with the warning flag set; both are answers, not errors.
CriticalSearchResult critical_points(const LaurentElement& w, double q_value);

}  // namespace syz
