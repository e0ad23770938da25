#include "syzkit/periods.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "syzkit/errors.hpp"

namespace syz {

namespace {

constexpr double kGaussNode[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                  0.5384693101056831, 0.9061798459386640};
constexpr double kGaussWeight[5] = {0.2369268850561891, 0.4786286704993665,
                                    0.5688888888888889, 0.4786286704993665,
                                    0.2369268850561891};

// Circulation field whose curl is the density: V(z) = f(|z|^2)/2 * iz with
// (s f(s))' = rho(s), so f(s) = (A/pi) / (1 + s).
Cx field(const AreaDensity& d, Cx z) {
  const double s = std::norm(z);
  const double f = d.total_area / std::numbers::pi / (1.0 + s);
  return Cx(0.0, 0.5 * f) * z;
}

// Loop circulation of the density field along the leaf polyline. Segments
// with velocity data integrate a cubic Hermite reconstruction; otherwise a
// straight midpoint rule is used. The tiny tie back to the first point
// closes the loop.
double circulation(const AreaDensity& d, const Trajectory& leaf) {
  const auto& pts = leaf.points;
  const bool hermite = leaf.velocities.size() == pts.size() &&
                       leaf.times.size() == pts.size();
  double total = 0.0;
  for (std::size_t n = 0; n + 1 < pts.size(); ++n) {
    const Cx z0 = pts[n], z1 = pts[n + 1];
    if (hermite) {
      const double dt = leaf.times[n + 1] - leaf.times[n];
      const Cx m0 = leaf.velocities[n] * dt;
      const Cx m1 = leaf.velocities[n + 1] * dt;
      for (int g = 0; g < 5; ++g) {
        const double x = 0.5 * (kGaussNode[g] + 1.0);
        const double x2 = x * x, x3 = x2 * x;
        const Cx z = (2 * x3 - 3 * x2 + 1) * z0 + (x3 - 2 * x2 + x) * m0 +
                     (-2 * x3 + 3 * x2) * z1 + (x3 - x2) * m1;
        const Cx dz = (6 * x2 - 6 * x) * z0 + (3 * x2 - 4 * x + 1) * m0 +
                      (-6 * x2 + 6 * x) * z1 + (3 * x2 - 2 * x) * m1;
        total += 0.5 * kGaussWeight[g] * (std::conj(field(d, z)) * dz).real();
      }
    } else {
      const Cx mid = 0.5 * (z0 + z1);
      total += (std::conj(field(d, mid)) * (z1 - z0)).real();
    }
  }
  if (pts.size() >= 2 && pts.back() != pts.front()) {
    const Cx mid = 0.5 * (pts.back() + pts.front());
    total += (std::conj(field(d, mid)) * (pts.front() - pts.back())).real();
  }
  return total;
}

bool segments_cross(Cx a, Cx b, Cx c, Cx e) {
  auto orient = [](Cx p, Cx q, Cx r) {
    const double v = (q.real() - p.real()) * (r.imag() - p.imag()) -
                     (q.imag() - p.imag()) * (r.real() - p.real());
    return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
  };
  const int o1 = orient(a, b, c), o2 = orient(a, b, e);
  const int o3 = orient(c, e, a), o4 = orient(c, e, b);
  return o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

bool leaves_cross(const Trajectory& x, const Trajectory& y) {
  for (std::size_t i = 0; i + 1 < x.points.size(); ++i)
    for (std::size_t j = 0; j + 1 < y.points.size(); ++j)
      if (segments_cross(x.points[i], x.points[i + 1], y.points[j], y.points[j + 1]))
        return true;
  return false;
}

// Even-odd crossing parity of a rightward ray from p against the closed
// polyline.
bool point_inside(Cx p, const std::vector<Cx>& poly) {
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Cx a = poly[i], b = poly[j];
    if ((a.imag() > p.imag()) != (b.imag() > p.imag())) {
      const double x = a.real() + (p.imag() - a.imag()) / (b.imag() - a.imag()) *
                                      (b.real() - a.real());
      if (p.real() < x) inside = !inside;
    }
  }
  return inside;
}

// Straight-path integral of Re(sqrt(p) dz) with sequential branch tracking,
// panel count doubled until two refinements agree to 1e-9.
double transverse_complex_length(const QuadDifferential& theta, Cx from, Cx to) {
  const Cx span = to - from;
  auto integrate = [&](int panels) {
    Cx ref = 0.0;
    double total = 0.0;
    for (int panel = 0; panel < panels; ++panel) {
      for (int g = 0; g < 5; ++g) {
        const double u = (panel + 0.5 * (kGaussNode[g] + 1.0)) / panels;
        const Cx z = from + u * span;
        Cx w = std::sqrt(quad_value(theta, z));
        if (ref != Cx(0.0) && std::abs(w - ref) > std::abs(-w - ref)) w = -w;
        ref = w;
        total += 0.5 * kGaussWeight[g] / panels * (w * span).real();
      }
    }
    return total;
  };
  int panels = 8;
  double value = integrate(panels);
  for (; panels <= 4096; ) {
    panels *= 2;
    const double refined = integrate(panels);
    if (std::abs(refined - value) < 1e-9) return refined;
    value = refined;
  }
  return value;
}

}  // namespace

double density_at(const AreaDensity& d, double r_squared) {
  const double t = 1.0 + r_squared;
  return d.total_area / (std::numbers::pi * t * t);
}

double disc_mass(const AreaDensity& d, double radius) {
  const double s = radius * radius;
  return d.total_area * s / (1.0 + s);
}

PeriodPair period_pair(const QuadDifferential& theta, const AreaDensity& density,
                       const Trajectory& inner, const Trajectory& outer) {
  validate_quad_differential(theta);
  if (inner.points.size() < 2 || outer.points.size() < 2)
    fail(ErrorKind::Domain, "period_pair needs traced leaves");

  if (inner.points.size() == outer.points.size()) {
    double gap = 0.0;
    for (std::size_t i = 0; i < inner.points.size(); ++i)
      gap = std::max(gap, std::abs(inner.points[i] - outer.points[i]));
    if (gap < 1e-9) return {0.0, 0.0};
  }

  if (!inner.closed || !outer.closed)
    fail(ErrorKind::Domain, "period_pair needs closed leaves");
  if (leaves_cross(inner, outer))
    fail(ErrorKind::Geometry, "the two leaves intersect");
  if (!point_inside(inner.points.front(), outer.points))
    fail(ErrorKind::Geometry, "the inner leaf must lie inside the outer leaf");

  PeriodPair out;
  out.symplectic_length =
      std::abs(circulation(density, outer)) - std::abs(circulation(density, inner));
  out.complex_length = std::abs(
      transverse_complex_length(theta, inner.points.front(), outer.points.front()));
  return out;
}

PeriodPair double_cover_periods(const PeriodPair& base) {
  return {2.0 * base.symplectic_length, 2.0 * base.complex_length};
}

}  // namespace syz
