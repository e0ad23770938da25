#include <doctest.h>

#include "syzkit/catalog.hpp"
#include "syzkit/disc.hpp"
#include "syzkit/errors.hpp"
#include "syzkit/polytope.hpp"

using namespace syz;

namespace {

ErrorKind kind_of(void (*f)()) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Invariant;
}

}  // namespace

TEST_CASE("maslov index doubles the divisor intersection") {
  DiscClass beta{{1}, Rat(2), 1, 1};
  CHECK(maslov_index(beta) == 2);
  beta.divisor_intersection = 3;
  CHECK(maslov_index(beta) == 6);
}

TEST_CASE("disc weight is a bare monomial") {
  DiscClass beta{{1}, Rat(2), 1, 1};
  CHECK(disc_weight(beta) == LaurentElement::monomial({1}, EnergyScalar::monomial(1, 2)));
  DiscClass gamma{{-1, 2}, Rat(1, 2), 1, 1};
  CHECK(disc_weight(gamma) ==
        LaurentElement::monomial({-1, 2}, EnergyScalar::monomial(1, Rat(1, 2))));
}

TEST_CASE("opposite disc weights multiply to the total area") {
  // the two discs through a fiber of the sphere: boundary classes cancel,
  // areas add up to the whole
  auto discs = catalog_discs("cp1");
  REQUIRE(discs.size() == 2);
  CHECK(discs[0].boundary_class == std::vector<long long>{1});
  CHECK(discs[1].boundary_class == std::vector<long long>{-1});
  CHECK(discs[0].area + discs[1].area == Rat(5));

  LaurentElement product = disc_weight(discs[0]) * disc_weight(discs[1]);
  CHECK(product == LaurentElement::constant(1, EnergyScalar::monomial(1, 5)));
}

TEST_CASE("superpotential sums counted weights") {
  auto discs = catalog_discs("cp1");
  LaurentElement w = superpotential_from_discs(discs);
  CHECK(w == disc_weight(discs[0]) + disc_weight(discs[1]));

  DiscClass twice = discs[0];
  twice.count = 3;
  LaurentElement w3 = superpotential_from_discs({twice});
  CHECK(w3 == LaurentElement::monomial({1}, EnergyScalar::monomial(3, discs[0].area)));

  CHECK(kind_of([] {
          superpotential_from_discs({DiscClass{{1}, Rat(-1), 1, 1}});
        }) == ErrorKind::Domain);
  CHECK(kind_of([] {
          superpotential_from_discs({DiscClass{{1}, Rat(1), 1, 1}, DiscClass{{1, 0}, Rat(1), 1, 1}});
        }) == ErrorKind::Invariant);
}

TEST_CASE("polytope validation rejects degenerate data") {
  CHECK(kind_of([] {
          validate_polytope(MomentPolytope{{Facet{{1}, 0}}});  // half line
        }) == ErrorKind::Geometry);
  CHECK(kind_of([] {
          // slab: bounded in x only
          validate_polytope(MomentPolytope{{Facet{{1, 0}, 0}, Facet{{-1, 0}, 5}}});
        }) == ErrorKind::Geometry);
  CHECK(kind_of([] {
          validate_polytope(MomentPolytope{{Facet{{2, 0}, 0}, Facet{{-1, 0}, 5}}});
        }) == ErrorKind::Geometry);
  CHECK(kind_of([] {
          // empty interior
          validate_polytope(MomentPolytope{{Facet{{1}, 0}, Facet{{-1}, 0}}});
        }) == ErrorKind::Geometry);
}

TEST_CASE("triangle vertices") {
  MomentPolytope p = catalog_polytope("toric-cp2");
  validate_polytope(p);
  auto verts = polytope_vertices(p);
  REQUIRE(verts.size() == 3);
  for (const QVec2& v : {QVec2{0, 0}, QVec2{5, 0}, QVec2{0, 5}}) {
    CHECK(std::count(verts.begin(), verts.end(), v) == 1);
  }
}

TEST_CASE("toric superpotential of the interval") {
  MomentPolytope p = catalog_polytope("cp1");
  LaurentElement w = toric_superpotential(p);
  LaurentElement expected = LaurentElement::monomial({1}, EnergyScalar::one()) +
                            LaurentElement::monomial({-1}, EnergyScalar::monomial(1, 5));
  CHECK(w == expected);
}

TEST_CASE("toric superpotential of the triangle") {
  MomentPolytope p = catalog_polytope("toric-cp2");
  LaurentElement w = toric_superpotential(p);
  LaurentElement expected =
      LaurentElement::monomial({1, 0}, EnergyScalar::one()) +
      LaurentElement::monomial({0, 1}, EnergyScalar::one()) +
      LaurentElement::monomial({-1, -1}, EnergyScalar::monomial(1, 5));
  CHECK(w == expected);
}

TEST_CASE("facet offsets move into the energy exponents") {
  // interval [1, 4]: x - 1 >= 0 and -x + 4 >= 0
  MomentPolytope p{{Facet{{1}, -1}, Facet{{-1}, 4}}};
  validate_polytope(p);
  LaurentElement w = toric_superpotential(p);
  CHECK(w == LaurentElement::monomial({1}, EnergyScalar::monomial(1, -1)) +
                 LaurentElement::monomial({-1}, EnergyScalar::monomial(1, 4)));
}
