#include <doctest.h>

#include <cmath>
#include <numbers>

#include "syzkit/catalog.hpp"
#include "syzkit/errors.hpp"
#include "syzkit/periods.hpp"

using namespace syz;

namespace {

QuadDifferential inverse_square() {
  QuadDifferential t;
  t.numerator = Polynomial::from_real({1});
  t.denominator = Polynomial::from_real({0, 0, 1});
  t.phase = std::numbers::pi / 2;
  return t;
}

Trajectory circle(double radius) {
  return trace_leaf(inverse_square(), Cx(radius, 0), 0.01, 200000);
}

}  // namespace

TEST_CASE("density integrates to the closed-form disc mass") {
  AreaDensity d;
  CHECK(disc_mass(d, 1.0) == doctest::Approx(0.5));
  CHECK(disc_mass(d, 2.0) == doctest::Approx(0.8));
  // numeric radial quadrature of 2 pi r rho(r^2)
  double r = 1.7, acc = 0, n = 200000;
  for (int i = 0; i < n; ++i) {
    double x = (i + 0.5) * r / n;
    acc += 2 * std::numbers::pi * x * density_at(d, x * x) * (r / n);
  }
  CHECK(std::abs(acc - disc_mass(d, r)) < 1e-9);

  AreaDensity scaled{3.0};
  CHECK(disc_mass(scaled, 1.0) == doctest::Approx(1.5));
}

TEST_CASE("symplectic length is the annulus mass") {
  Trajectory inner = circle(1.0);
  Trajectory outer = circle(2.0);
  AreaDensity d;
  PeriodPair p = period_pair(inverse_square(), d, inner, outer);
  CHECK(std::abs(p.symplectic_length - (disc_mass(d, 2.0) - disc_mass(d, 1.0))) < 1e-6);
}

TEST_CASE("complex length of 1/z^2 is the log of the radii ratio") {
  Trajectory inner = circle(1.0);
  Trajectory outer = circle(std::exp(1.0));
  PeriodPair p = period_pair(inverse_square(), AreaDensity{}, inner, outer);
  CHECK(std::abs(p.complex_length - 1.0) < 1e-8);

  Trajectory mid = circle(2.0);
  PeriodPair q = period_pair(inverse_square(), AreaDensity{}, inner, mid);
  CHECK(std::abs(q.complex_length - std::log(2.0)) < 1e-8);
}

TEST_CASE("the double cover doubles both periods exactly") {
  PeriodPair p{0.3807, 1.004519};
  PeriodPair d = double_cover_periods(p);
  CHECK(d.symplectic_length == 2 * p.symplectic_length);
  CHECK(d.complex_length == 2 * p.complex_length);
}

TEST_CASE("identical leaves are the degenerate annulus") {
  Trajectory one = circle(1.0);
  PeriodPair p = period_pair(inverse_square(), AreaDensity{}, one, one);
  CHECK(p.symplectic_length == 0.0);
  CHECK(p.complex_length == 0.0);
}

TEST_CASE("bad leaf pairs are geometry errors") {
  Trajectory inner = circle(1.0);
  Trajectory outer = circle(2.0);

  // crossing: shift the outer leaf so the loops intersect
  Trajectory shifted = outer;
  for (Cx& z : shifted.points) z += Cx(1.5, 0);
  try {
    period_pair(inverse_square(), AreaDensity{}, inner, shifted);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Geometry);
  }

  // disjoint but side by side: inner is not inside outer
  Trajectory far = inner;
  for (Cx& z : far.points) z += Cx(5.0, 0);
  try {
    period_pair(inverse_square(), AreaDensity{}, far, outer);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Geometry);
  }

  // open trajectories cannot bound an annulus
  Trajectory open_leaf = inner;
  open_leaf.closed = false;
  CHECK_THROWS_AS(period_pair(inverse_square(), AreaDensity{}, open_leaf, outer), Error);
}

TEST_CASE("the packaged scenario yields nested leaves") {
  LeafScenario s = catalog_leaf_scenario("cp1");
  REQUIRE(s.starts.size() >= 2);
  Trajectory inner = trace_leaf(s.theta, s.starts[0], s.step, s.max_steps);
  Trajectory outer = trace_leaf(s.theta, s.starts[1], s.step, s.max_steps);
  CHECK(inner.closed);
  CHECK(outer.closed);
  PeriodPair p = period_pair(s.theta, AreaDensity{}, inner, outer);
  CHECK(p.symplectic_length > 0);
  CHECK(p.complex_length > 0);
  PeriodPair d = double_cover_periods(p);
  CHECK(d.symplectic_length == 2 * p.symplectic_length);
}
