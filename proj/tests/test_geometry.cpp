#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mcp/geometry.hpp"
#include "test_util.hpp"

using namespace mcp;
using test_util::inst_of;

namespace {
Point pt(Coord x, Coord y, int id = -1) { return Point{id, x, y}; }
}  // namespace

TEST_CASE("orient basic triples") {
  CHECK(orient(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
  CHECK(orient(pt(0, 0), pt(1, 1), pt(2, 2)) == 0);
  CHECK(orient(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
}

TEST_CASE("orient is antisymmetric and exact") {
  test_util::Rng rng(42);
  for (int it = 0; it < 500; ++it) {
    const Point a = pt(rng.range(-1000000, 1000000), rng.range(-1000000, 1000000));
    const Point b = pt(rng.range(-1000000, 1000000), rng.range(-1000000, 1000000));
    const Point c = pt(rng.range(-1000000, 1000000), rng.range(-1000000, 1000000));
    CHECK(orient(a, b, c) == -orient(b, a, c));
    CHECK(orient(a, b, c) == -orient(a, c, b));
    CHECK(orient(a, b, c) == orient(b, c, a));
  }
  // exactness at the 32-bit coordinate extremes
  const Coord big = 2147483647;
  CHECK(orient(pt(-big, -big), pt(big, big), pt(big - 1, big)) == 1);
  CHECK(orient(pt(-big, -big), pt(0, 0), pt(big, big)) == 0);
}

TEST_CASE("side_of_arc follows the >= 0 convention") {
  const Point i = pt(0, 0, 0), j = pt(2, 0, 1);
  CHECK(side_of_arc(i, j, pt(1, 1, 2)) == Side::Right);
  CHECK(side_of_arc(i, j, pt(1, -1, 2)) == Side::Left);
  CHECK(side_of_arc(i, j, pt(3, 0, 2)) == Side::Right);  // collinear lands Right
  CHECK_THROWS_AS((void)side_of_arc(i, j, pt(2, 0, 1)), Error);
}

TEST_CASE("side_of_arc is translation invariant") {
  test_util::Rng rng(7);
  for (int it = 0; it < 200; ++it) {
    Point i = pt(rng.range(-500, 500), rng.range(-500, 500), 0);
    Point j = pt(rng.range(-500, 500), rng.range(-500, 500), 1);
    Point k = pt(rng.range(-500, 500), rng.range(-500, 500), 2);
    if (same_coords(i, j) || same_coords(i, k) || same_coords(j, k)) continue;
    const Coord dx = rng.range(-1000, 1000), dy = rng.range(-1000, 1000);
    const Side s = side_of_arc(i, j, k);
    i.x += dx; i.y += dy; j.x += dx; j.y += dy; k.x += dx; k.y += dy;
    CHECK(side_of_arc(i, j, k) == s);
  }
}

TEST_CASE("convex hull of a square") {
  const Instance inst = test_util::square();
  CHECK(inst.hull_ring == std::vector<int>{0, 1, 2, 3});
  CHECK(inst.interior_ids.empty());
}

TEST_CASE("convex hull with an exact center point") {
  const Instance inst = test_util::square_center();
  CHECK(inst.hull_ring.size() == 4);
  CHECK(inst.interior_ids == std::vector<int>{4});
}

TEST_CASE("collinear boundary points stay on the ring") {
  const Instance inst = inst_of({{0, 0}, {2, 0}, {4, 0}, {2, 3}});
  CHECK(inst.hull_ring == std::vector<int>{0, 1, 2, 3});
  CHECK(inst.interior_ids.empty());
  CHECK(inst.on_hull(1));
}

TEST_CASE("degenerate instances are rejected") {
  CHECK_THROWS_AS(inst_of({{0, 0}, {1, 0}}), Error);
  CHECK_THROWS_AS(inst_of({{0, 0}, {1, 1}, {2, 2}, {5, 5}}), Error);
  CHECK_THROWS_AS(inst_of({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), Error);          // duplicate
  CHECK_THROWS_AS(inst_of({{0, 0}, {1, 0}, {0, 5000000000LL}}), Error);       // overflow
}

TEST_CASE("hull ring properties on random instances") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const Instance inst = generate_uniform(20, seed, 40);  // small grid forces collinearity
    std::vector<Point> ring;
    for (int id : inst.hull_ring) ring.push_back(inst.pt(id));
    const int h = static_cast<int>(ring.size());
    for (int k = 0; k < h; ++k)
      CHECK(orient(ring[k], ring[(k + 1) % h], ring[(k + 2) % h]) >= 0);
    CHECK(ring_doubled_area(ring) > 0);
    for (int id : inst.interior_ids) CHECK(locate_in_convex(ring, inst.pt(id)) == 1);
    for (int id : inst.hull_ring) CHECK(!std::count(inst.interior_ids.begin(),
                                                    inst.interior_ids.end(), id));
  }
}

TEST_CASE("segments_properly_cross") {
  CHECK(segments_properly_cross(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)));
  CHECK(!segments_properly_cross(pt(0, 0), pt(1, 0), pt(1, 0), pt(2, 1)));   // shared endpoint
  CHECK(segments_properly_cross(pt(0, 0), pt(3, 0), pt(1, 0), pt(2, 0)));    // collinear overlap
  CHECK(!segments_properly_cross(pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 5)));   // T-touch
  CHECK(!segments_properly_cross(pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0)));   // collinear apart
  CHECK(!segments_properly_cross(pt(0, 0), pt(1, 0), pt(1, 0), pt(2, 0)));   // collinear chained
  CHECK(segments_properly_cross(pt(0, 0), pt(2, 0), pt(0, 0), pt(2, 0)));    // identical
}

TEST_CASE("polygon_is_weakly_convex") {
  auto ring = [](std::vector<std::pair<Coord, Coord>> pts) {
    std::vector<Point> out;
    int id = 0;
    for (auto [x, y] : pts) out.push_back(Point{id++, x, y});
    return out;
  };
  CHECK(polygon_is_weakly_convex(ring({{0, 0}, {2, 0}, {0, 2}})));
  CHECK(polygon_is_weakly_convex(ring({{0, 0}, {1, 0}, {1, 1}, {0, 1}})));
  CHECK(polygon_is_weakly_convex(ring({{0, 0}, {1, 0}, {2, 0}, {0, 2}})));      // 180-degree vertex
  CHECK(polygon_is_weakly_convex(ring({{0, 0}, {2, 0}, {1, 1}, {0, 2}})));      // (1,1) on the chord
  CHECK(!polygon_is_weakly_convex(ring({{0, 0}, {3, 0}, {1, 1}, {0, 3}})));     // reflex
  CHECK(!polygon_is_weakly_convex(ring({{0, 0}, {0, 2}, {2, 0}})));             // clockwise
  CHECK(!polygon_is_weakly_convex(ring({{0, 0}, {2, 0}, {1, 0}})));             // spike
  // two revolutions with only left turns
  CHECK(!polygon_is_weakly_convex(ring({{0, 0}, {2, 0}, {1, 2}, {0, 0}, {2, 0}, {1, 2}})));
}

TEST_CASE("locate_in_convex") {
  const std::vector<Point> tri = {pt(0, 0, 0), pt(4, 0, 1), pt(0, 4, 2)};
  CHECK(locate_in_convex(tri, pt(1, 1)) == 1);
  CHECK(locate_in_convex(tri, pt(2, 0)) == 0);
  CHECK(locate_in_convex(tri, pt(2, 2)) == 0);
  CHECK(locate_in_convex(tri, pt(5, 0)) == -1);
  CHECK(locate_in_convex(tri, pt(-1, 2)) == -1);
}
