#include <doctest.h>

#include <algorithm>

#include "syzkit/catalog.hpp"
#include "syzkit/errors.hpp"
#include "syzkit/io_json.hpp"

using namespace syz;

namespace {

template <typename F>
std::string message_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Input);
    return e.what();
  }
  FAIL("expected an input error");
  return "";
}

}  // namespace

TEST_CASE("the catalog lists nine entries and validates them all") {
  std::vector<std::string> names = list_examples();
  CHECK(names.size() == 9);
  for (const char* expected : {"cp1", "elliptic", "cp2-cubic", "res-e1", "toric-cp2",
                               "k3-double", "sextic-double", "odp-k3", "blowup-wall"}) {
    CHECK(std::count(names.begin(), names.end(), expected) == 1);
  }

  for (const char* n : {"cp1", "elliptic", "cp2-cubic", "res-e1"}) {
    CHECK_NOTHROW(validate_base(catalog_base(n)));
    CHECK_NOTHROW(validate_pair(catalog_pair(n)));
  }
  for (const char* n : {"cp1", "k3-double", "sextic-double", "odp-k3"}) {
    CHECK_NOTHROW(validate_double(catalog_double(n)));
  }
  for (const char* n : {"cp1", "toric-cp2"}) {
    CHECK_NOTHROW(validate_polytope(catalog_polytope(n)));
  }
  CHECK_NOTHROW(validate_quad_differential(catalog_leaf_scenario("cp1").theta));
  for (const Wall& w : catalog_wall_scenario("blowup-wall").walls) {
    CHECK_NOTHROW(validate_wall(w));
  }
}

TEST_CASE("unknown names list what exists") {
  try {
    catalog_base("nope");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFound);
    CHECK(std::string(e.what()).find("cp1") != std::string::npos);
  }
  CHECK_THROWS_AS(catalog_double("cp2-cubic"), Error);
  CHECK_THROWS_AS(catalog_discs("elliptic"), Error);
}

TEST_CASE("every artifact survives a JSON round trip") {
  for (const char* n : {"cp1", "elliptic", "cp2-cubic", "res-e1"}) {
    AffineBase b = catalog_base(n);
    CHECK(base_from_json(base_to_json(b)) == b);
    BasePair p = catalog_pair(n);
    CHECK(pair_from_json(pair_to_json(p)) == p);
  }
  for (const char* n : {"cp1", "k3-double", "sextic-double", "odp-k3"}) {
    DoubledBase d = catalog_double(n);
    CHECK(double_from_json(double_to_json(d)) == d);
  }
  for (const char* n : {"cp1", "toric-cp2"}) {
    MomentPolytope p = catalog_polytope(n);
    CHECK(polytope_from_json(polytope_to_json(p)) == p);
  }
  CHECK(discs_from_json(discs_to_json(catalog_discs("cp1"))) == catalog_discs("cp1"));
  WallScenario w = catalog_wall_scenario("blowup-wall");
  CHECK(wall_scenario_from_json(wall_scenario_to_json(w)) == w);
  LeafScenario l = catalog_leaf_scenario("cp1");
  CHECK(leaf_scenario_from_json(leaf_scenario_to_json(l)) == l);
}

TEST_CASE("serialization is canonical, byte for byte") {
  AffineBase b = catalog_base("cp2-cubic");
  std::string once = base_to_json(b);
  CHECK(once == base_to_json(b));
  CHECK(once == base_to_json(base_from_json(once)));
  CHECK(once.back() == '\n');

  WallScenario w = catalog_wall_scenario("blowup-wall");
  CHECK(wall_scenario_to_json(w) ==
        wall_scenario_to_json(wall_scenario_from_json(wall_scenario_to_json(w))));
}

TEST_CASE("parse failures name the problem") {
  CHECK(message_of([] { base_from_json("{oops"); }) == "malformed JSON document");
  CHECK(message_of([] { base_from_json("[1, 2]"); }) == "expected an object with field 'kind'");
  CHECK(message_of([] { base_from_json("{}"); }) == "missing field 'kind'");
  CHECK(message_of([] { base_from_json(R"({"kind": "affine-base"})"); }) ==
        "missing field 'name'");
  CHECK(message_of([] { base_from_json(polytope_to_json(catalog_polytope("cp1"))); }) ==
        "expected a document of kind 'affine-base'");

  std::string bad_rat = base_to_json(catalog_base("cp1"));
  bad_rat.replace(bad_rat.find("\"5\""), 3, "\"5/x\"");
  CHECK(message_of([&] { base_from_json(bad_rat); }) ==
        "cannot parse rational symplectic_length: '5/x'");

  std::string bad_topology = base_to_json(catalog_base("cp1"));
  bad_topology.replace(bad_topology.find("interval"), 8, "pretzel");
  CHECK(message_of([&] { base_from_json(bad_topology); }) == "unknown topology 'pretzel'");

  CHECK_THROWS_AS(polytope_from_json(base_to_json(catalog_base("cp1"))), Error);
  CHECK_THROWS_AS(discs_from_json("42"), Error);
  CHECK_THROWS_AS(wall_scenario_from_json("{\"kind\": \"wall-scenario\"}"), Error);
  CHECK_THROWS_AS(leaf_scenario_from_json("null"), Error);
}

TEST_CASE("the laurent serializer embeds a display form") {
  LaurentElement w = LaurentElement::monomial({1, 0}, EnergyScalar::one()) +
                     LaurentElement::monomial({-1, -1}, EnergyScalar::monomial(1, 5));
  std::string text = laurent_to_json(w, {"x", "y"});
  CHECK(text.find("\"display\": \"q^5*x^-1*y^-1 + x\"") != std::string::npos);
  CHECK(text.find("\"nvars\": 2") != std::string::npos);
}
