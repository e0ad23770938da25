#include <doctest.h>

#include <algorithm>

#include "syzkit/catalog.hpp"
#include "syzkit/errors.hpp"
#include "syzkit/tropical.hpp"

using namespace syz;

namespace {

// two-point chart where the symplectic ray of `a` crosses the cut of `b`
AffineBase bent_base() {
  AffineBase b;
  b.name = "bent";
  b.boundary = Polygon{{{0, 0}, {8, 0}, {8, 8}, {0, 8}}};
  b.points = {SingularPoint{"a", {2, 5}, {1, 0}, 1, {2, 8}},
              SingularPoint{"b", {6, 4}, {0, 1}, 1, {6, 8}}};
  return b;
}

// both cycles horizontal: the +/- rays meet head-on along y = 4
AffineBase facing_base() {
  AffineBase b = bent_base();
  b.name = "facing";
  b.points = {SingularPoint{"a", {2, 4}, {1, 0}, 1, {2, 8}},
              SingularPoint{"b", {6, 4}, {1, 0}, 1, {6, 8}}};
  return b;
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

TEST_CASE("eigen directions by tag") {
  SingularPoint p{"p", {1, 1}, {3, -1}, 1, {1, 0}};
  CHECK(eigen_direction(StructureTag::Symplectic, p) == IVec2{3, -1});
  CHECK(eigen_direction(StructureTag::Complex, p) == IVec2{1, 3});
  // both are fixed by the monodromy the tag reads
  CHECK(monodromy_for(StructureTag::Symplectic, p).apply({3, -1}) == IVec2{3, -1});
  CHECK(monodromy_for(StructureTag::Complex, p).apply({1, 3}) == IVec2{1, 3});
}

TEST_CASE("a ray bends by the cut monodromy it crosses") {
  AffineBase b = bent_base();
  validate_base(b);

  // crossing the cut of b at (6,5) turns (1,0) into (1,1)
  Ray r = trace_ray(b, "a", StructureTag::Symplectic, 1);
  CHECK(r.end == RayEnd::Boundary);
  CHECK(r.trace == std::vector<QVec2>{{2, 5}, {6, 5}, {8, 7}});
  CHECK(r.directions == std::vector<IVec2>{{1, 0}, {1, 1}});
  CHECK(r.length == Rat(6));

  Ray back = trace_ray(b, "a", StructureTag::Symplectic, -1);
  CHECK(back.trace == std::vector<QVec2>{{2, 5}, {0, 5}});
  CHECK(back.length == Rat(2));

  // the complex ray runs along its own cut, unbent
  Ray up = trace_ray(b, "a", StructureTag::Complex, 1);
  CHECK(up.trace == std::vector<QVec2>{{2, 5}, {2, 8}});
  CHECK(up.directions == std::vector<IVec2>{{0, 1}});
}

TEST_CASE("rays stop head-on at singular positions") {
  AffineBase b = facing_base();
  validate_base(b);
  Ray r = trace_ray(b, "a", StructureTag::Symplectic, 1);
  CHECK(r.end == RayEnd::HeadOn);
  CHECK(r.end_detail == "b");
  CHECK(r.trace == std::vector<QVec2>{{2, 4}, {6, 4}});
  CHECK(r.length == Rat(4));
}

TEST_CASE("length budget cuts a ray short") {
  AffineBase b = facing_base();
  TraceOptions opt;
  opt.budget = Rat(3);
  Ray r = trace_ray(b, "a", StructureTag::Symplectic, 1, opt);
  CHECK(r.end == RayEnd::Budget);
  CHECK(r.trace == std::vector<QVec2>{{2, 4}, {5, 4}});
  CHECK(r.length == Rat(3));

  opt.budget = Rat(0);
  CHECK(kind_of([&] { trace_ray(b, "a", StructureTag::Symplectic, 1, opt); }) ==
        ErrorKind::Domain);
  CHECK(default_budget(b.boundary) == Rat(32));
}

TEST_CASE("bad ray requests") {
  AffineBase b = bent_base();
  CHECK(kind_of([&] { trace_ray(b, "zz", StructureTag::Symplectic, 1); }) ==
        ErrorKind::NotFound);
  CHECK(kind_of([&] { trace_ray(b, "a", StructureTag::Symplectic, 2); }) == ErrorKind::Domain);
  CHECK(kind_of([&] { trace_ray(catalog_base("cp1"), "a", StructureTag::Symplectic, 1); }) ==
        ErrorKind::Topology);
}

TEST_CASE("all rays come out in a fixed order") {
  AffineBase b = bent_base();
  std::vector<Ray> rays = trace_all_rays(b);
  REQUIRE(rays.size() == 8);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(rays[i].origin == "a");
    CHECK(rays[i + 4].origin == "b");
  }
  CHECK(rays[0].tag == StructureTag::Symplectic);
  CHECK(rays[0].sign == 1);
  CHECK(rays[1].sign == -1);
  CHECK(rays[2].tag == StructureTag::Complex);

  std::vector<Ray> again = trace_all_rays(b);
  REQUIRE(again.size() == rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) {
    CHECK(again[i].trace == rays[i].trace);
    CHECK(again[i].end == rays[i].end);
  }
}

TEST_CASE("facing rays certify one lagrangian sphere") {
  std::vector<Alignment> al = detect_alignments(facing_base());
  REQUIRE(al.size() == 1);
  CHECK(al[0].seg_from == QVec2{2, 4});
  CHECK(al[0].seg_to == QVec2{6, 4});
  CHECK(al[0].tag == StructureTag::Symplectic);
  CHECK(al[0].kind == AlignmentKind::LagrangianSphere);
  CHECK(al[0].ray_a < al[0].ray_b);
  CHECK_FALSE(al[0].on_seam);
  CHECK(al[0].fiber_translation_caveat);

  // the bent configuration has no antiparallel overlap at all
  CHECK(detect_alignments(bent_base()).empty());
}

TEST_CASE("seam bounce flips the sheet and reflects the direction") {
  AffineBase tri;
  tri.name = "tri";
  tri.boundary = Polygon{{{0, 0}, {4, 0}, {0, 4}}};
  tri.points = {SingularPoint{"p", {1, 1}, {1, 0}, 1, {1, 0}}};
  validate_base(tri);
  DoubledBase d = make_double(tri, {});

  // bounce off the vertical seam edge, return to the mirror copy of p
  Ray r = trace_ray(d, "p", StructureTag::Symplectic, -1, 0);
  CHECK(r.end == RayEnd::HeadOn);
  CHECK(r.end_detail == "p'");
  CHECK(r.trace == std::vector<QVec2>{{1, 1}, {0, 1}, {1, 1}});
  CHECK(r.directions == std::vector<IVec2>{{-1, 0}, {1, 0}});
  CHECK(r.sheets == std::vector<int>{0, 1});
  CHECK(r.length == Rat(2));

  // down its own cut, bounce at the bottom seam, back up on the other sheet
  Ray down = trace_ray(d, "p", StructureTag::Complex, -1, 0);
  CHECK(down.end == RayEnd::HeadOn);
  CHECK(down.end_detail == "p'");
  CHECK(down.sheets == std::vector<int>{0, 1});

  // the hypotenuse is not axis-parallel, so the seam cannot absorb this ray
  Ray slant = trace_ray(d, "p", StructureTag::Complex, 1, 0);
  CHECK(slant.end == RayEnd::SeamUnsupported);
  CHECK(slant.end_detail == "edge 1 is not axis-parallel");
  CHECK(slant.trace == std::vector<QVec2>{{1, 1}, {1, 3}});
}

TEST_CASE("corner hits stop a ray") {
  DoubledBase odp = catalog_double("odp-k3");
  // o1 sits at (1,0); its seam ray runs along the step edge into the corner
  Ray r = trace_ray(odp, "o1", StructureTag::Symplectic, 1, 0);
  CHECK(r.seam_ray);
  CHECK(r.end == RayEnd::Corner);
  CHECK(r.end_detail.substr(0, 6) == "vertex");
}

TEST_CASE("sheet-1 rays mirror sheet-0 rays") {
  DoubledBase k3 = catalog_double("k3-double");
  Ray r0 = trace_ray(k3, "t0", StructureTag::Symplectic, 1, 0);
  Ray r1 = trace_ray(k3, "t0", StructureTag::Symplectic, 1, 1);
  CHECK(r0.trace == r1.trace);
  CHECK(r0.directions == r1.directions);
  CHECK(r0.end == RayEnd::HeadOn);
  CHECK(r0.end_detail == "t0'");
  CHECK(r1.end_detail == "t0");
  REQUIRE(r0.sheets.size() == r1.sheets.size());
  for (std::size_t i = 0; i < r0.sheets.size(); ++i) CHECK(r0.sheets[i] == 1 - r1.sheets[i]);
}

TEST_CASE("seam rays meet their partner") {
  DoubledBase sextic = catalog_double("sextic-double");
  Ray r = trace_ray(sextic, "s1", StructureTag::Symplectic, 1, 0);
  CHECK(r.seam_ray);
  CHECK(r.end == RayEnd::HeadOn);
  CHECK(r.end_detail == "s2");
  CHECK(r.trace == std::vector<QVec2>{{Rat(1, 2), 0}, {Rat(3, 2), 0}});

  // a transverse seam ray must start into the chart
  CHECK(kind_of([&] { trace_ray(sextic, "s1", StructureTag::Complex, -1, 0); }) ==
        ErrorKind::Placement);
}

TEST_CASE("seam census of the sextic double") {
  SeamCensus c = seam_census(catalog_double("sextic-double"));
  CHECK(c.seam_singular_count == 18);
  CHECK(c.interior_pair_count == 3);
  CHECK(c.seam_sphere_alignments == 9);
  CHECK(c.seam_curve_alignments == 0);
  for (const Alignment& a : c.alignments) CHECK(a.ray_a < a.ray_b);
}

TEST_CASE("seam census of the k3 double") {
  SeamCensus c = seam_census(catalog_double("k3-double"));
  CHECK(c.seam_singular_count == 0);
  CHECK(c.interior_pair_count == 12);
  CHECK(c.matched_pair_count == 11);
  REQUIRE(c.matched_ids.size() == 11);
  CHECK(std::count(c.matched_ids.begin(), c.matched_ids.end(), "p") == 1);
  CHECK(std::count(c.matched_ids.begin(), c.matched_ids.end(), "r") == 1);
  CHECK(std::count(c.matched_ids.begin(), c.matched_ids.end(), "q") == 0);
  for (int k = 0; k < 9; ++k) {
    std::string id = "t" + std::to_string(k);
    CHECK(std::count(c.matched_ids.begin(), c.matched_ids.end(), id) == 1);
  }
}

TEST_CASE("multiplicity-2 seam points earn smoothing notes") {
  SeamCensus c = seam_census(catalog_double("odp-k3"));
  CHECK(c.seam_singular_count == 9);
  REQUIRE(c.notes.size() == 9);
  for (const std::string& n : c.notes) {
    CHECK(n.find("multiplicity 2") != std::string::npos);
    CHECK(n.find("separates") != std::string::npos);
  }
  CHECK(c.seam_sphere_alignments == 0);
}
