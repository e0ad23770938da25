#include "syzkit/quad_diff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "syzkit/errors.hpp"

namespace syz {

namespace {

bool finite(Cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::string cx_str(Cx z) {
  std::ostringstream os;
  os << "(" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

}  // namespace

Polynomial Polynomial::from_real(const std::vector<double>& c) {
  Polynomial p;
  p.coeffs.reserve(c.size());
  for (double x : c) p.coeffs.emplace_back(x, 0.0);
  return p;
}

int Polynomial::degree() const {
  for (std::size_t k = coeffs.size(); k > 0; --k)
    if (coeffs[k - 1] != Cx(0.0)) return static_cast<int>(k - 1);
  return -1;
}

Cx Polynomial::eval(Cx z) const {
  Cx acc = 0.0;
  for (std::size_t k = coeffs.size(); k > 0; --k) acc = acc * z + coeffs[k - 1];
  return acc;
}

Polynomial Polynomial::derivative() const {
  Polynomial d;
  for (std::size_t k = 1; k < coeffs.size(); ++k)
    d.coeffs.push_back(static_cast<double>(k) * coeffs[k]);
  return d;
}

std::vector<Cx> polynomial_roots(const Polynomial& p) {
  const int deg = p.degree();
  if (deg <= 0) return {};

  std::vector<Cx> a(p.coeffs.begin(), p.coeffs.begin() + deg + 1);
  const Cx lead = a.back();
  for (auto& c : a) c /= lead;

  std::vector<Cx> x(deg);
  const Cx seed(0.4, 0.9);  // standard Durand-Kerner spread, not a root of unity
  Cx g = 1.0;
  for (int i = 0; i < deg; ++i) {
    g *= seed;
    x[i] = g;
  }

  auto horner = [&](Cx z) {
    Cx acc = 0.0;
    for (int k = deg; k >= 0; --k) acc = acc * z + a[k];
    return acc;
  };

  for (int iter = 0; iter < 600; ++iter) {
    double max_update = 0.0;
    for (int i = 0; i < deg; ++i) {
      Cx den = 1.0;
      for (int j = 0; j < deg; ++j)
        if (j != i) den *= x[i] - x[j];
      if (std::abs(den) < 1e-300) {
        x[i] += Cx(1e-8, 1e-8);
        max_update = 1.0;
        continue;
      }
      const Cx upd = horner(x[i]) / den;
      x[i] -= upd;
      max_update = std::max(max_update, std::abs(upd));
    }
    if (max_update < 1e-13) break;
  }

  std::sort(x.begin(), x.end(), [](Cx l, Cx r) {
    return l.real() < r.real() || (l.real() == r.real() && l.imag() < r.imag());
  });
  return x;
}

void validate_quad_differential(const QuadDifferential& theta) {
  if (theta.numerator.is_zero())
    fail(ErrorKind::Domain, "the differential's numerator vanishes identically");
  if (theta.denominator.is_zero())
    fail(ErrorKind::Domain, "the differential's denominator vanishes identically");
  const auto zeros = polynomial_roots(theta.numerator);
  const auto poles = polynomial_roots(theta.denominator);
  for (Cx z : zeros)
    for (Cx p : poles)
      if (std::abs(z - p) < 1e-10)
        fail(ErrorKind::Invariant,
             "numerator and denominator share a root near z = " + cx_str(z));
}

Cx quad_value(const QuadDifferential& theta, Cx z) {
  return theta.numerator.eval(z) / theta.denominator.eval(z);
}

Trajectory trace_leaf(const QuadDifferential& theta, Cx start, double step,
                      int max_steps) {
  validate_quad_differential(theta);
  if (!(step > 0)) fail(ErrorKind::Domain, "step size must be positive");
  if (max_steps < 1) fail(ErrorKind::Domain, "max_steps must be at least 1");

  const Cx p_start = quad_value(theta, start);
  if (!finite(p_start) || std::abs(p_start) < 1e-13)
    fail(ErrorKind::Domain,
         "start point must avoid the zeros and poles of the differential");

  std::vector<Cx> singular = polynomial_roots(theta.numerator);
  {
    const auto poles = polynomial_roots(theta.denominator);
    singular.insert(singular.end(), poles.begin(), poles.end());
  }

  const Cx eiphi = std::polar(1.0, theta.phase);

  // Branch-tracked velocity: pick the square root of p nearest the running
  // reference, commit it, and return e^{i phase} over it.
  auto vel = [&](Cx z, Cx& ref) {
    const Cx p = quad_value(theta, z);
    Cx s = std::sqrt(p);
    if (ref != Cx(0.0) && std::abs(s - ref) > std::abs(-s - ref)) s = -s;
    ref = s;
    return eiphi / s;
  };

  // One RK4 step of size h from (z, ref); the branch reference advances
  // stage by stage and is settled at the landing point.
  auto rk4 = [&](Cx z, Cx ref, double h, Cx& ref_out) {
    Cx r = ref;
    const Cx k1 = vel(z, r);
    const Cx k2 = vel(z + 0.5 * h * k1, r);
    const Cx k3 = vel(z + 0.5 * h * k2, r);
    const Cx k4 = vel(z + h * k3, r);
    const Cx zn = z + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    vel(zn, r);
    ref_out = r;
    return zn;
  };

  auto branch_sign = [&](Cx z, Cx w) {
    const Cx s = std::sqrt(quad_value(theta, z));
    return std::abs(w - s) <= std::abs(w + s) ? 1 : -1;
  };

  Trajectory tr;
  Cx z = start;
  Cx wref = 0.0;
  const Cx v0 = vel(z, wref);
  const Cx w0 = wref;
  tr.points.push_back(z);
  tr.velocities.push_back(v0);
  tr.times.push_back(0.0);
  int prev_sign = branch_sign(z, w0);

  // Poincare section through the start, oriented by the initial velocity;
  // the leaf is back when this height crosses zero from below near enough
  // to the start.
  auto section = [&](Cx p) { return (std::conj(v0) * (p - start)).real(); };
  const double gate = 20.0 * step * std::max(1.0, std::abs(v0));

  auto phase_dev = [&](Cx at, Cx v) {
    const Cx val = quad_value(theta, at) * v * v;
    return std::abs(std::remainder(std::arg(val) - 2.0 * theta.phase,
                                   2.0 * std::numbers::pi));
  };
  tr.max_phase_deviation = phase_dev(z, v0);

  tr.stopped = "max steps";
  for (int n = 1; n <= max_steps; ++n) {
    Cx ref_next = wref;
    const Cx zn = rk4(z, wref, step, ref_next);
    if (!finite(zn)) {
      tr.stopped = "numerical overflow";
      break;
    }

    bool hit_singular = false;
    for (Cx s : singular) {
      if (std::abs(zn - s) < 10.0 * step) {
        tr.points.push_back(zn);
        tr.velocities.push_back(eiphi / ref_next);
        tr.times.push_back(n * step);
        tr.stopped = "singular approach near z = " + cx_str(s);
        hit_singular = true;
        break;
      }
    }
    if (hit_singular) break;

    if (n >= 10 && section(z) < 0.0 && section(zn) >= 0.0 &&
        std::abs(zn - start) <= gate) {
      double lo = 0.0, hi = step;
      for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        Cx rm = wref;
        const Cx zm = rk4(z, wref, mid, rm);
        (section(zm) < 0.0 ? lo : hi) = mid;
      }
      Cx ref_land = wref;
      const Cx z_land = rk4(z, wref, hi, ref_land);
      tr.points.push_back(z_land);
      tr.velocities.push_back(eiphi / ref_land);
      tr.times.push_back((n - 1) * step + hi);
      tr.closure_gap = std::abs(z_land - start);
      const bool branch_ok = std::abs(ref_land - w0) <= std::abs(ref_land + w0);
      tr.closed = branch_ok && tr.closure_gap < 1e-6;
      tr.stopped = tr.closed ? "closed" : "open section return";
      tr.max_phase_deviation =
          std::max(tr.max_phase_deviation, phase_dev(z_land, eiphi / ref_land));
      return tr;
    }

    z = zn;
    wref = ref_next;
    tr.points.push_back(z);
    tr.velocities.push_back(eiphi / wref);
    tr.times.push_back(n * step);
    tr.max_phase_deviation = std::max(tr.max_phase_deviation, phase_dev(z, eiphi / wref));

    const int sign = branch_sign(z, wref);
    if (sign != prev_sign) {
      tr.branch_log.push_back({n, sign});
      prev_sign = sign;
    }
  }

  return tr;
}

}  // namespace syz
