#pragma once

// Constant-phase trajectories of a quadratic differential p(z) dz^2 on the
// plane: the 1-dimensional model of a special Lagrangian foliation. The
// integrator follows z' = e^{i phase} / sqrt(p(z)) with fourth-order
// Runge-Kutta steps and continuous square-root branch tracking (nearest
// continuation, no fixed cuts), detects closure through a Poincare section
// at the start point, and stops early when the leaf drifts into a zero or
// pole of p.

#include <complex>
#include <string>
#include <vector>

namespace syz {

using Cx = std::complex<double>;

struct Polynomial {
  std::vector<Cx> coeffs;  // ascending: coeffs[k] multiplies z^k

  static Polynomial from_real(const std::vector<double>& c);

  int degree() const;  // index of the highest nonzero coefficient, -1 if zero
  bool is_zero() const { return degree() < 0; }
  Cx eval(Cx z) const;
  Polynomial derivative() const;

  bool operator==(const Polynomial&) const = default;
};

// All complex roots (with multiplicity) by Durand-Kerner iteration, sorted
// by (re, im). The zero and constant polynomials have no roots.
std::vector<Cx> polynomial_roots(const Polynomial& p);

struct QuadDifferential {
  Polynomial numerator;    // p = numerator / denominator
  Polynomial denominator;
  double phase = 0.0;      // leaves satisfy arg(p(z) z'^2) = 2 * phase

  bool operator==(const QuadDifferential&) const = default;
};

// Rejects a vanishing numerator or denominator and any pair of roots closer
// than 1e-10 (a common factor would change the differential's divisor).
void validate_quad_differential(const QuadDifferential& theta);

Cx quad_value(const QuadDifferential& theta, Cx z);

// One square-root branch continuation event: the step index where the
// tracked branch crossed to the other sheet relative to the principal
// square root.
struct BranchEvent {
  int step = 0;
  int sign = 1;  // chosen branch vs principal after the crossing
};

struct Trajectory {
  std::vector<Cx> points;
  std::vector<Cx> velocities;  // the field values actually integrated
  std::vector<double> times;   // parameter value at each sample
  bool closed = false;
  double closure_gap = 0.0;        // distance to the start at the section return
  double max_phase_deviation = 0.0;  // max |arg(p v^2) - 2 phase| over samples
  std::vector<BranchEvent> branch_log;
  std::string stopped;  // "closed", "open section return", "singular approach
                        // near ...", "max steps", "numerical overflow"
};

// pre: p(start) finite and nonzero, step > 0, max_steps >= 1.
// The leaf is closed when it returns to the start section within 1e-6 of the
// start point on the same square-root branch; the returned gap is the
// distance itself (fourth-order small for a genuinely closed leaf). Passing
// within 10*step of a zero or pole of p terminates the trace with a
// singular-approach diagnostic instead.
Trajectory trace_leaf(const QuadDifferential& theta, Cx start, double step,
                      int max_steps);

// A named trace configuration: differential, seeds, and step control.
struct LeafScenario {
  std::string name;
  QuadDifferential theta;
  std::vector<Cx> starts;
  double step = 0.01;
  int max_steps = 200000;

  bool operator==(const LeafScenario&) const = default;
};

}  // namespace syz
