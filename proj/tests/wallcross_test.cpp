#include <doctest.h>

#include <random>

#include "syzkit/catalog.hpp"
#include "syzkit/errors.hpp"
#include "syzkit/wallcross.hpp"

using namespace syz;

namespace {

LaurentElement mono(std::vector<long long> e, EnergyScalar c = EnergyScalar::one()) {
  return LaurentElement::monomial(std::move(e), c);
}

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Invariant;
}

}  // namespace

TEST_CASE("the built-in wall validates and rejects tampering") {
  WallScenario s = catalog_wall_scenario("blowup-wall");
  REQUIRE(s.walls.size() == 1);
  Wall w = s.walls[0];
  CHECK_NOTHROW(validate_wall(w));
  for (const GluingRelation& r : s.relations) CHECK_NOTHROW(validate_gluing(r));

  Wall imprimitive = w;
  imprimitive.normal = {2, 0};
  CHECK(kind_of([&] { validate_wall(imprimitive); }) == ErrorKind::Invariant);

  Wall skew = w;
  skew.normal = {1, 1};  // no longer perpendicular to the vertical support
  CHECK(kind_of([&] { validate_wall(skew); }) == ErrorKind::Invariant);

  Wall drifting = w;
  drifting.function = mono({0, 0}) + mono({1, 0}, EnergyScalar::monomial(1, 1));
  // u pairs with the normal, so f would not be invariant under its own crossing
  CHECK(kind_of([&] { validate_wall(drifting); }) == ErrorKind::Invariant);

  Wall no_unit = w;
  no_unit.function = mono({0, -1}, EnergyScalar::monomial(1, Rat(1, 2)));
  CHECK(kind_of([&] { validate_wall(no_unit); }) == ErrorKind::Invariant);
}

TEST_CASE("crossing multiplies by the wall function") {
  Wall w = catalog_wall_scenario("blowup-wall").walls[0];

  // u pairs to one with the normal and picks up a single factor of f
  LaurentElement crossed = cross_monomial(w, {1, 0}, EnergyScalar::one(), 1);
  LaurentElement expected =
      mono({1, 0}) + mono({1, -1}, EnergyScalar::monomial(1, Rat(1, 2)));
  CHECK(crossed == expected);

  // z pairs to zero with the normal: unchanged
  CHECK(cross_element(w, mono({0, 1}), 1) == mono({0, 1}));
  CHECK(cross_element(w, mono({0, -3}), -1) == mono({0, -3}));
}

TEST_CASE("negative pairing needs a truncation order") {
  Wall w = catalog_wall_scenario("blowup-wall").walls[0];
  CHECK(kind_of([&] { cross_monomial(w, {-1, 0}, EnergyScalar::one(), 1); }) ==
        ErrorKind::Truncation);
  LaurentElement inv = cross_monomial(w, {-1, 0}, EnergyScalar::one(), 1, Rat(3));
  // u^{-1} f^{-1}: the geometric series alternates
  CHECK(inv.coefficient({-1, 0}) == EnergyScalar::one());
  CHECK(inv.coefficient({-1, -1}) == EnergyScalar::monomial(-1, Rat(1, 2)));
}

TEST_CASE("a round trip across the wall is the identity") {
  Wall w = catalog_wall_scenario("blowup-wall").walls[0];
  Rat order(4);
  for (const LaurentElement& x :
       {mono({1, 0}), mono({0, 1}), mono({1, -1}), mono({0, 0}) + mono({1, 0}),
        mono({-2, 1}), mono({3, 2}, EnergyScalar::monomial(2, Rat(1, 2)))}) {
    LaurentElement there = cross_element(w, x, 1, order);
    LaurentElement back = cross_element(w, there, -1, order);
    CHECK(back.truncated(order) == x.truncated(order));
  }
}

TEST_CASE("crossing is multiplicative") {
  Wall w = catalog_wall_scenario("blowup-wall").walls[0];
  Rat order(4);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 10; ++i) {
    auto draw = [&rng](long long n) { return static_cast<long long>(rng() % n); };
    LaurentElement a = mono({draw(5) - 2, draw(5) - 2});
    LaurentElement b = mono({draw(5) - 2, draw(5) - 2},
                            EnergyScalar::monomial(draw(5) + 1, Rat(draw(4), 2)));
    LaurentElement lhs = cross_element(w, a * b, 1, order).truncated(order);
    LaurentElement rhs =
        (cross_element(w, a, 1, order) * cross_element(w, b, 1, order)).truncated(order);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("superpotential continuation follows the chamber path") {
  WallScenario s = catalog_wall_scenario("blowup-wall");
  std::vector<QVec2> path{s.chambers[0].point, s.chambers[1].point};
  LaurentElement u = mono({1, 0});
  LaurentElement moved = continue_superpotential(u, s.walls, path);
  CHECK(moved == mono({-1, 0}) + mono({-1, -1}, EnergyScalar::monomial(1, Rat(1, 2))));

  // back again is the identity on the nose here (no series inverse involved)
  std::vector<QVec2> back{s.chambers[1].point, s.chambers[0].point};
  CHECK(continue_superpotential(moved, s.walls, back) == u);

  // a path that dodges the support keeps the element
  std::vector<QVec2> above{s.chambers[0].point, QVec2{0, 3}, s.chambers[1].point};
  CHECK(continue_superpotential(u, s.walls, above) == u);
}

TEST_CASE("ill-posed paths are rejected") {
  WallScenario s = catalog_wall_scenario("blowup-wall");
  LaurentElement u = mono({1, 0});
  auto run = [&](std::vector<QVec2> path) {
    return continue_superpotential(u, s.walls, path);
  };

  CHECK(kind_of([&] { run({{-2, Rat(1, 2)}, {0, Rat(1, 2)}, {2, Rat(1, 2)}}); }) ==
        ErrorKind::Path);  // waypoint on the wall
  CHECK(kind_of([&] { run({{-1, 1}, {1, 1}}); }) == ErrorKind::Path);  // endpoint crossing
  CHECK(kind_of([&] { run({{0, -2}, {0, 2}}); }) == ErrorKind::Path);  // runs along the support

  // two walls crossed at one point
  Wall second = s.walls[0];
  second.name = "diagonal";
  second.support_a = {-1, 0};
  second.support_b = {1, 1};
  second.normal = {1, -2};
  second.function = mono({0, 0}) + mono({2, 1}, EnergyScalar::monomial(1, 1));
  second.renaming.reset();
  CHECK_NOTHROW(validate_wall(second));
  CHECK(kind_of([&] {
          continue_superpotential(u, {s.walls[0], second},
                                  {{-2, Rat(1, 2)}, {2, Rat(1, 2)}});
        }) == ErrorKind::Path);
}

TEST_CASE("default truncation order comes from the smallest exponent") {
  WallScenario s = catalog_wall_scenario("blowup-wall");
  CHECK(default_truncation_order(s.walls) == Rat(5));

  Wall trivial = s.walls[0];
  trivial.function = mono({0, 0});
  trivial.renaming.reset();
  CHECK(kind_of([&] { default_truncation_order({trivial}); }) == ErrorKind::Domain);
}

TEST_CASE("corrected gluing relations") {
  GluingRelation single = corrected_gluing_single(Rat(1, 2));
  CHECK(single.left == "u*v");
  CHECK(single.right ==
        mono({0}) + mono({-1}, EnergyScalar::monomial(1, Rat(1, 2))));
  CHECK_FALSE(involution_compatible(single));

  GluingRelation both = corrected_gluing_double(Rat(1, 2));
  CHECK(both.right == mono({0}) + mono({0}, EnergyScalar::monomial(1, 1)) +
                          mono({1}, EnergyScalar::monomial(1, Rat(1, 2))) +
                          mono({-1}, EnergyScalar::monomial(1, Rat(1, 2))));
  CHECK(involution_compatible(both));

  CHECK(kind_of([] { corrected_gluing_single(Rat(0)); }) == ErrorKind::Domain);
  CHECK(kind_of([] { corrected_gluing_double(Rat(-1)); }) == ErrorKind::Domain);
}

TEST_CASE("gluing identities hold for random parameters") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    Rat eps(1 + static_cast<long long>(rng() % 999), 1000);
    CHECK(single_substitution_holds(eps));
    CHECK(double_specializes_to_single(eps));
    CHECK(involution_compatible(corrected_gluing_double(eps)));
    CHECK_FALSE(involution_compatible(corrected_gluing_single(eps)));
  }
}
