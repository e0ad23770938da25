#include <doctest.h>

#include <cmath>
#include <complex>

#include "syzkit/catalog.hpp"
#include "syzkit/critical.hpp"
#include "syzkit/polytope.hpp"

using namespace syz;

using Cd = std::complex<double>;

TEST_CASE("logarithmic derivative stays exact") {
  LaurentElement w = LaurentElement::monomial({1}, EnergyScalar::one()) +
                     LaurentElement::monomial({-1}, EnergyScalar::monomial(1, 1));
  LaurentElement d = log_derivative(w, 0);
  CHECK(d == LaurentElement::monomial({1}, EnergyScalar::one()) -
                 LaurentElement::monomial({-1}, EnergyScalar::monomial(1, 1)));

  LaurentElement w2 = LaurentElement::monomial({2, -3}, EnergyScalar::monomial(5, Rat(1, 2)));
  CHECK(log_derivative(w2, 0) ==
        LaurentElement::monomial({2, -3}, EnergyScalar::monomial(10, Rat(1, 2))));
  CHECK(log_derivative(w2, 1) ==
        LaurentElement::monomial({2, -3}, EnergyScalar::monomial(-15, Rat(1, 2))));
}

TEST_CASE("interval superpotential has the two square-root critical points") {
  // z + q z^{-1}: critical where z^2 = q, so z = +-sqrt(q) with value +-2 sqrt(q)
  LaurentElement w = LaurentElement::monomial({1}, EnergyScalar::one()) +
                     LaurentElement::monomial({-1}, EnergyScalar::monomial(1, 1));
  double q = std::exp(-1.0);
  CriticalSearchResult res = critical_points(w, q);
  CHECK_FALSE(res.warning);
  REQUIRE(res.points.size() == 2);

  double root = std::sqrt(q);
  // sorted by (Re, Im): the negative point first
  CHECK(std::abs(res.points[0].point[0] - Cd(-root, 0)) < 1e-10);
  CHECK(std::abs(res.points[1].point[0] - Cd(root, 0)) < 1e-10);
  CHECK(std::abs(res.points[0].value - Cd(-2 * root, 0)) < 1e-10);
  CHECK(std::abs(res.points[1].value - Cd(2 * root, 0)) < 1e-10);
  CHECK(res.points[0].residual < 1e-12);
  CHECK(res.points[1].residual < 1e-12);
}

TEST_CASE("triangle superpotential has the three cube-root critical points") {
  // x + y + q^5 x^-1 y^-1: the log gradient forces x = y and x^3 = q^5
  LaurentElement w = toric_superpotential(catalog_polytope("toric-cp2"));
  double q = std::exp(-1.0);
  CriticalSearchResult res = critical_points(w, q);
  CHECK_FALSE(res.warning);
  REQUIRE(res.points.size() == 3);

  double q5 = std::pow(q, 5);
  for (const CriticalPoint& cp : res.points) {
    REQUIRE(cp.point.size() == 2);
    Cd x = cp.point[0];
    CHECK(std::abs(x - cp.point[1]) < 1e-9);
    CHECK(std::abs(x * x * x - q5) < 1e-9);
    CHECK(std::abs(cp.value - 3.0 * x) < 1e-9);
    CHECK(cp.residual < 1e-10);
  }
}

TEST_CASE("a constant potential is a warning, not an error") {
  LaurentElement w = LaurentElement::constant(1, EnergyScalar::monomial(2, 1));
  CriticalSearchResult res = critical_points(w, std::exp(-1.0));
  CHECK(res.warning);
  CHECK(res.points.empty());
  CHECK_FALSE(res.note.empty());
}

TEST_CASE("the search is deterministic") {
  LaurentElement w = toric_superpotential(catalog_polytope("toric-cp2"));
  CriticalSearchResult a = critical_points(w, std::exp(-1.0));
  CriticalSearchResult b = critical_points(w, std::exp(-1.0));
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) CHECK(a.points[i] == b.points[i]);
}
