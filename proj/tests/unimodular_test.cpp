#include <doctest.h>

#include <random>

#include "syzkit/unimodular.hpp"

using namespace syz;

namespace {

UnimodularMap random_sl2(std::mt19937_64& rng) {
  // Random word in the standard generators keeps the determinant at 1.
  UnimodularMap s = UnimodularMap::linear(1, 1, 0, 1);
  UnimodularMap t = UnimodularMap::linear(1, 0, 1, 1);
  UnimodularMap m = UnimodularMap::identity();
  int len = 1 + int(rng() % 5);
  for (int i = 0; i < len; ++i) {
    const UnimodularMap& g = (rng() % 2) ? s : t;
    m = (rng() % 2) ? compose(m, g) : compose(m, g.inverse());
  }
  return m;
}

}  // namespace

TEST_CASE("lattice vector helpers") {
  CHECK(gcd_ll(12, -18) == 6);
  CHECK(gcd_ll(0, 7) == 7);
  CHECK(is_primitive({2, 3}));
  CHECK_FALSE(is_primitive({2, 4}));
  CHECK_FALSE(is_primitive({0, 0}));
  CHECK(perp_ccw({1, 0}) == IVec2{0, 1});
  CHECK(perp_ccw({3, -1}) == IVec2{1, 3});
  CHECK(cross({1, 0}, {0, 1}) == 1);
  CHECK(cross({2, 3}, {4, 6}) == 0);
}

TEST_CASE("group axioms on random words") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    UnimodularMap a = random_sl2(rng);
    UnimodularMap b = random_sl2(rng);
    UnimodularMap c = random_sl2(rng);
    CHECK(a.det() == 1);
    CHECK(compose(a, a.inverse()) == UnimodularMap::identity());
    CHECK(compose(a.inverse(), a) == UnimodularMap::identity());
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, b).transposed() == compose(b.transposed(), a.transposed()));
  }
}

TEST_CASE("powers match repeated composition") {
  UnimodularMap t = UnimodularMap::linear(1, 1, 0, 1);
  UnimodularMap acc = UnimodularMap::identity();
  for (int k = 0; k <= 6; ++k) {
    CHECK(t.power(k) == acc);
    acc = compose(acc, t);
  }
  CHECK(t.power(-9) == UnimodularMap::linear(1, -9, 0, 1));
  CHECK(compose(t.power(-9), t.power(9)) == UnimodularMap::identity());
}

TEST_CASE("affine part composes and inverts") {
  UnimodularMap f = UnimodularMap::linear(1, 1, 0, 1);
  f.tx = Rat(1, 2);
  f.ty = 3;
  Rat x, y;
  f.apply_point(Rat(1), Rat(2), x, y);
  CHECK(x == Rat(7, 2));  // 1 + 2 + 1/2
  CHECK(y == Rat(5));
  UnimodularMap g = f.inverse();
  Rat bx, by;
  g.apply_point(x, y, bx, by);
  CHECK(bx == Rat(1));
  CHECK(by == Rat(2));
}

TEST_CASE("focus-focus monodromy has the expected normal form") {
  UnimodularMap m = focus_focus_monodromy({1, 0});
  CHECK(m == UnimodularMap::linear(1, 1, 0, 1));

  for (IVec2 v : {IVec2{0, 1}, IVec2{1, 1}, IVec2{2, 1}, IVec2{3, -1}, IVec2{-3, 2}}) {
    UnimodularMap mv = focus_focus_monodromy(v);
    CHECK(mv.det() == 1);
    CHECK(mv.trace() == 2);
    CHECK(mv.apply(v) == v);  // vanishing cycle is fixed
    // conjugate to the standard shear
    auto conj = find_conjugator(mv, focus_focus_monodromy({1, 0}), 4);
    REQUIRE(conj.has_value());
    CHECK(conj->det() == 1);
    CHECK(compose(compose(*conj, mv), conj->inverse()) == focus_focus_monodromy({1, 0}));
  }

  // multiplicity k multiplies the shear, not the fixed direction
  UnimodularMap m2 = focus_focus_monodromy({1, 0}, 2);
  CHECK(m2 == UnimodularMap::linear(1, 2, 0, 1));
  CHECK(m2.apply({1, 0}) == IVec2{1, 0});
}

TEST_CASE("normal degree transport") {
  CHECK(normal_degree_to_monodromy(0) == UnimodularMap::identity());
  CHECK(normal_degree_to_monodromy(9) == UnimodularMap::linear(1, 9, 0, 1));
  CHECK(normal_degree_to_monodromy(-2) == UnimodularMap::linear(1, -2, 0, 1));
}

TEST_CASE("conjugator search certifies its output") {
  UnimodularMap a = focus_focus_monodromy({2, 1});
  UnimodularMap b = focus_focus_monodromy({1, 2});
  auto c = find_conjugator(a, b);
  REQUIRE(c.has_value());
  CHECK(compose(compose(*c, a), c->inverse()) == b);

  // trace separates conjugacy classes: a shear is never conjugate to -I
  CHECK_FALSE(find_conjugator(a, UnimodularMap::linear(-1, 0, 0, -1), 6).has_value());
}
