#include <doctest.h>

#include "geometry.hpp"
#include "test_util.hpp"

using namespace terrafold;
using terrafold::testutil::rat;

namespace {

Polygon2 square(const Rat& x0, const Rat& y0, const Rat& side) {
  return {{x0, y0}, {x0 + side, y0}, {x0 + side, y0 + side}, {x0, y0 + side}};
}

}  // namespace

TEST_CASE("signed area and convexity") {
  Polygon2 sq = square(0, 0, 1);
  CHECK(signed_area2(sq) == Rat(2));
  CHECK(polygon_area(sq) == Rat(1));
  CHECK(is_convex_ccw(sq));

  Polygon2 cw = sq;
  std::reverse(cw.begin(), cw.end());
  CHECK_FALSE(is_convex_ccw(cw));
  CHECK(is_convex_ccw(ensure_ccw(cw)));

  Polygon2 degenerate = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(0)}};
  CHECK_FALSE(is_convex_ccw(degenerate));

  Polygon2 dart = {{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(1), rat("1/4")}, {Rat(1), Rat(2)}};
  CHECK_FALSE(is_convex_ccw(dart));
}

TEST_CASE("convex intersection of overlapping squares") {
  Polygon2 a = square(0, 0, 1);
  Polygon2 b = square(rat("1/2"), rat("1/2"), 1);
  Polygon2 inter = convex_intersection(a, b);
  CHECK(polygon_area(inter) == rat("1/4"));
  Vec2 c = polygon_centroid(inter);
  CHECK(c.x == rat("3/4"));
  CHECK(c.y == rat("3/4"));
}

TEST_CASE("contact classification distinguishes touch from overlap") {
  Polygon2 a = square(0, 0, 1);

  SUBCASE("edge-sharing squares touch along a segment") {
    Contact c = classify_contact(a, square(1, 0, 1));
    CHECK(c.kind == ContactKind::Segment);
  }
  SUBCASE("corner-sharing squares touch at a point") {
    Contact c = classify_contact(a, square(1, 1, 1));
    CHECK(c.kind == ContactKind::Point);
  }
  SUBCASE("separated squares are disjoint") {
    Contact c = classify_contact(a, square(3, 3, 1));
    CHECK(c.kind == ContactKind::Disjoint);
  }
  SUBCASE("offset squares overlap with an interior witness") {
    Contact c = classify_contact(a, square(rat("1/2"), rat("1/2"), 1));
    CHECK(c.kind == ContactKind::Overlap);
    CHECK(c.area == rat("1/4"));
    REQUIRE(c.interior_point.has_value());
    CHECK(c.interior_point->x == rat("3/4"));
    CHECK(c.interior_point->y == rat("3/4"));
  }
  SUBCASE("containment counts as overlap") {
    Contact c = classify_contact(a, square(rat("1/4"), rat("1/4"), rat("1/2")));
    CHECK(c.kind == ContactKind::Overlap);
    CHECK(c.area == rat("1/4"));
  }
  SUBCASE("parallelogram leaning across a neighbor overlaps") {
    Polygon2 lean = {{Rat(1), Rat(0)}, {Rat(2), Rat(0)}, {rat("3/2"), Rat(1)}, {rat("1/2"), Rat(1)}};
    Contact c = classify_contact(a, lean);
    CHECK(c.kind == ContactKind::Overlap);
  }
}

TEST_CASE("intersection area is symmetric and bounded (random quads)") {
  SplitMix64 rng(7);
  auto rand_square = [&]() {
    Rat x(static_cast<long>(rng.next_in(8)), static_cast<long>(rng.next_in(4)));
    Rat y(static_cast<long>(rng.next_in(8)), static_cast<long>(rng.next_in(4)));
    Rat s(static_cast<long>(rng.next_in(5)), 1);
    x.canonicalize();
    y.canonicalize();
    return square(x, y, s);
  };
  for (int k = 0; k < 100; ++k) {
    Polygon2 a = rand_square(), b = rand_square();
    Rat ab = polygon_area(convex_intersection(a, b));
    Rat ba = polygon_area(convex_intersection(b, a));
    CHECK(ab == ba);
    CHECK(ab <= polygon_area(a));
    CHECK(ab <= polygon_area(b));
    // Self-intersection is identity.
    CHECK(polygon_area(convex_intersection(a, a)) == polygon_area(a));
  }
}

TEST_CASE("point_on_segment is exact at endpoints and off-line") {
  Vec2 a{Rat(0), Rat(0)}, b{Rat(2), Rat(2)};
  CHECK(point_on_segment(a, a, b));
  CHECK(point_on_segment(b, a, b));
  Vec2 mid{Rat(1), Rat(1)}, beyond{Rat(3), Rat(3)}, near_miss{Rat(1), rat("9999999/10000000")};
  CHECK(point_on_segment(mid, a, b));
  CHECK_FALSE(point_on_segment(beyond, a, b));
  CHECK_FALSE(point_on_segment(near_miss, a, b));
}
