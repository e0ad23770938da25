#include <doctest.h>

#include "syzkit/geometry.hpp"

using namespace syz;

namespace {

Polygon unit_square() {
  return Polygon{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
}

QVec2 qv(Rat x, Rat y) { return QVec2{x, y}; }

}  // namespace

TEST_CASE("orientation and segment predicates are exact") {
  CHECK(orientation(qv(0, 0), qv(1, 0), qv(0, 1)) == 1);
  CHECK(orientation(qv(0, 0), qv(0, 1), qv(1, 0)) == -1);
  CHECK(orientation(qv(0, 0), qv(Rat(1, 3), Rat(1, 3)), qv(Rat(2, 3), Rat(2, 3))) == 0);

  CHECK(point_on_segment(qv(Rat(1, 2), 0), qv(0, 0), qv(1, 0)));
  CHECK(point_on_segment(qv(1, 0), qv(0, 0), qv(1, 0)));
  CHECK_FALSE(point_on_segment(qv(Rat(3, 2), 0), qv(0, 0), qv(1, 0)));

  auto hit = segment_intersection(qv(0, 0), qv(2, 2), qv(0, 2), qv(2, 0));
  REQUIRE(hit.has_value());
  CHECK(*hit == qv(1, 1));
  CHECK_FALSE(segment_intersection(qv(0, 0), qv(1, 0), qv(0, 1), qv(1, 1)).has_value());
  // collinear overlap has no unique intersection point
  CHECK_FALSE(segment_intersection(qv(0, 0), qv(2, 0), qv(1, 0), qv(3, 0)).has_value());
  CHECK(segments_overlap(qv(0, 0), qv(2, 0), qv(1, 0), qv(3, 0)));
  CHECK_FALSE(segments_overlap(qv(0, 0), qv(1, 0), qv(2, 0), qv(3, 0)));
}

TEST_CASE("polygon area, orientation, simplicity") {
  Polygon sq = unit_square();
  CHECK(polygon_signed_area2(sq) == Rat(2));
  CHECK(polygon_is_ccw(sq));
  CHECK(polygon_is_simple(sq));

  Polygon cw{{ {0, 0}, {0, 1}, {1, 1}, {1, 0} }};
  CHECK(polygon_signed_area2(cw) == Rat(-2));
  CHECK_FALSE(polygon_is_ccw(cw));

  Polygon bowtie{{ {0, 0}, {2, 2}, {2, 0}, {0, 2} }};
  CHECK_FALSE(polygon_is_simple(bowtie));
}

TEST_CASE("point location distinguishes inside, boundary, outside") {
  Polygon sq = unit_square();
  CHECK(locate_point(sq, qv(Rat(1, 2), Rat(1, 2))) == Location::Inside);
  CHECK(locate_point(sq, qv(Rat(1, 3), 0)) == Location::Boundary);
  CHECK(locate_point(sq, qv(0, 0)) == Location::Boundary);
  CHECK(locate_point(sq, qv(2, Rat(1, 2))) == Location::Outside);
  CHECK(locate_point(sq, qv(Rat(1, 2), Rat(-1, 1000000))) == Location::Outside);
}

TEST_CASE("boundary edges own their starting vertex") {
  Polygon sq = unit_square();
  CHECK(boundary_edge_of(sq, qv(Rat(1, 2), 0)) == 0);
  CHECK(boundary_edge_of(sq, qv(1, Rat(1, 2))) == 1);
  CHECK(boundary_edge_of(sq, qv(0, 0)) == 0);
  CHECK(boundary_edge_of(sq, qv(1, 0)) == 1);
  CHECK_FALSE(boundary_edge_of(sq, qv(Rat(1, 2), Rat(1, 2))).has_value());
}

TEST_CASE("first boundary hit from the interior") {
  Polygon sq = unit_square();
  auto hit = first_boundary_hit(sq, qv(Rat(1, 2), Rat(1, 2)), qv(1, 0));
  REQUIRE(hit.has_value());
  CHECK(hit->point == qv(1, Rat(1, 2)));
  CHECK(hit->t == Rat(1, 2));
  CHECK(hit->edge == 1);
  CHECK_FALSE(hit->at_vertex);

  auto diag = first_boundary_hit(sq, qv(Rat(1, 2), Rat(1, 2)), qv(1, 1));
  REQUIRE(diag.has_value());
  CHECK(diag->point == qv(1, 1));
  CHECK(diag->at_vertex);
}

TEST_CASE("first boundary hit from the boundary finds the far exit") {
  Polygon sq = unit_square();
  auto hit = first_boundary_hit(sq, qv(0, Rat(1, 2)), qv(1, 0));
  REQUIRE(hit.has_value());
  CHECK(hit->point == qv(1, Rat(1, 2)));
  CHECK(hit->t == 1);

  // along an edge: the ray leaves at the next vertex
  auto along = first_boundary_hit(sq, qv(0, 0), qv(0, 1));
  REQUIRE(along.has_value());
  CHECK(along->point == qv(0, 1));
  CHECK(along->at_vertex);

  // pointing straight out of the polygon there is nothing to hit
  CHECK_FALSE(first_boundary_hit(sq, qv(0, Rat(1, 2)), qv(-1, 0)).has_value());
}

TEST_CASE("bounding box") {
  Polygon tri{{ {-1, Rat(1, 2)}, {3, -2}, {0, 4} }};
  QVec2 lo, hi;
  polygon_bbox(tri, lo, hi);
  CHECK(lo == qv(-1, -2));
  CHECK(hi == qv(3, 4));
}
