#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "compatri/oracles.hpp"
#include "testutil.hpp"

using namespace compatri;
using testutil::poly;

TEST_CASE("orientation basic signs") {
  CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orientation({0, 0}, {1, 1}, {2, 2}) == 0);
  CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == -1);
}

TEST_CASE("orientation symmetry properties") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<i64> c(-1000, 1000);
  for (int it = 0; it < 500; ++it) {
    Point a{c(rng), c(rng)}, b{c(rng), c(rng)}, d{c(rng), c(rng)};
    int o = orientation(a, b, d);
    CHECK(orientation(b, d, a) == o);   // cyclic rotation
    CHECK(orientation(d, a, b) == o);
    CHECK(orientation(b, a, d) == -o);  // swap flips
    CHECK(orientation(a, d, b) == -o);
  }
}

TEST_CASE("orientation is exact at the coordinate bound") {
  const i64 m = kCoordinateBound;
  CHECK(orientation({-m, -m}, {m, m - 1}, {m, m}) == 1);
  CHECK(orientation({-m, -m}, {0, 0}, {m, m}) == 0);
  CHECK(orientation({-m, -m}, {m, m}, {m, m - 1}) == -1);
}

TEST_CASE("segment classification") {
  CHECK(classify_segments({0, 0}, {2, 2}, {0, 2}, {2, 0}) ==
        SegmentRelation::ProperCrossing);
  CHECK(classify_segments({0, 0}, {1, 0}, {2, 0}, {3, 0}) == SegmentRelation::Disjoint);
  CHECK(classify_segments({0, 0}, {2, 0}, {1, 0}, {3, 0}) ==
        SegmentRelation::CollinearOverlap);
  CHECK(classify_segments({0, 0}, {2, 0}, {2, 0}, {3, 1}) ==
        SegmentRelation::EndpointTouch);
  CHECK(classify_segments({0, 0}, {2, 0}, {1, 0}, {1, 5}) ==
        SegmentRelation::EndpointTouch);  // T contact
  CHECK(classify_segments({0, 0}, {2, 0}, {2, 0}, {4, 0}) ==
        SegmentRelation::EndpointTouch);  // collinear, single shared point
}

TEST_CASE("validate accepts the unit square") {
  Polygon p = testutil::unit_square();
  CHECK(p.size() == 4);
  CHECK_FALSE(p.was_reversed());
}

TEST_CASE("validate rejects the bowtie with the offending edge pair") {
  std::vector<Point> bowtie{{0, 0}, {2, 2}, {2, 0}, {0, 2}};
  CHECK_THROWS_WITH_AS(Polygon::validate(bowtie), "NotSimple(0,2)", Error);
}

TEST_CASE("validate reverses clockwise input") {
  Polygon p = Polygon::validate({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  CHECK(p.was_reversed());
  CHECK(p.size() == 4);
  CHECK(p[0] == Point{0, 0});
  // CCW afterwards: vertex 1 is the old last vertex
  CHECK(p[1] == Point{1, 0});
  CHECK(orientation(p[0], p[1], p[2]) == 1);
}

TEST_CASE("validate rejects duplicates, spikes, vertex-on-edge") {
  CHECK_THROWS_WITH_AS(Polygon::validate({{0, 0}, {1, 0}, {0, 0}, {1, 1}}),
                       "DuplicateVertex(0,2)", Error);
  CHECK_THROWS_WITH_AS(Polygon::validate({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {0, 1}}),
                       "DegenerateSpike(1)", Error);
  // vertex 3 = (1,0) lies in the interior of edge (0,1)
  CHECK_THROWS_AS(Polygon::validate({{0, 0}, {2, 0}, {2, 2}, {1, 0}, {0, 2}}).size(),
                  Error);
  CHECK_THROWS_AS(Polygon::validate({{0, 0}, {1, 0}}).size(), Error);
  CHECK_THROWS_AS(Polygon::validate({{0, 0}, {kCoordinateBound + 1, 0}, {0, 1}}).size(),
                  Error);
}

TEST_CASE("is_reflex") {
  Polygon hex = testutil::l_hexagon();
  CHECK(is_reflex(hex, 3));
  CHECK_FALSE(is_reflex(hex, 0));
  CHECK(reflex_count(hex) == 1);
  Polygon sq = testutil::unit_square();
  for (int i = 0; i < 4; ++i) CHECK_FALSE(is_reflex(sq, i));
  Polygon d = testutil::dart();
  CHECK(is_reflex(d, 2));
  CHECK(reflex_count(d) == 1);
}

TEST_CASE("is_diagonal reference cases") {
  Polygon sq = testutil::unit_square();
  CHECK(is_diagonal(sq, {0, 2}));
  CHECK(is_diagonal(sq, {1, 3}));
  CHECK_THROWS_AS(is_diagonal(sq, {0, 1}), Error);

  Polygon hex = testutil::l_hexagon();
  CHECK_FALSE(is_diagonal(hex, {1, 4}));  // exits through edge (2,3)
  CHECK(is_diagonal(hex, {0, 2}));
  CHECK(is_diagonal(hex, {0, 3}));
  CHECK_FALSE(is_diagonal(hex, {1, 5}));  // passes exactly through vertex 3
  CHECK_FALSE(is_diagonal(hex, {2, 5}));  // touches edge (3,4) interior
  CHECK_FALSE(is_diagonal(hex, {2, 4}));  // outside the corner
}

TEST_CASE("is_diagonal is symmetric and total on convex polygons") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (int n : {4, 7, 12}) {
      Polygon p = generate_convex_polygon(n, seed);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (p.adjacent(i, j)) continue;
          CHECK(is_diagonal(p, {i, j}));
          CHECK(is_diagonal(p, {j, i}));
        }
    }
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Polygon p = testutil::random_polygon(12, 100 + seed);
    for (int i = 0; i < p.size(); ++i)
      for (int j = 0; j < p.size(); ++j) {
        if (i == j || p.adjacent(i, j)) continue;
        CHECK(is_diagonal(p, {i, j}) == is_diagonal(p, {j, i}));
      }
  }
}

TEST_CASE("ray_shoot matches hand geometry on the concave hexagon") {
  Polygon hex = testutil::l_hexagon();
  // extension of edge 2->3 beyond vertex 3
  RayHit h1 = ray_shoot(hex, 3, hex[3] - hex[2]);
  CHECK(h1.edge == 5);
  CHECK(h1.point.x == Rational(0, 1));
  CHECK(h1.point.y == Rational(1, 1));
  CHECK_FALSE(h1.at_vertex);
  // extension of edge 4->3 beyond vertex 3
  RayHit h2 = ray_shoot(hex, 3, hex[3] - hex[4]);
  CHECK(h2.edge == 0);
  CHECK(h2.point.x == Rational(1, 1));
  CHECK(h2.point.y == Rational(0, 1));
}

TEST_CASE("ray_shoot reports exact vertex hits") {
  // Square, shoot from 0 along the main diagonal: hits vertex 2 exactly.
  Polygon sq = testutil::unit_square();
  RayHit h = ray_shoot(sq, 0, Point{1, 1});
  CHECK(h.at_vertex);
  CHECK(h.vertex == 2);
}

TEST_CASE("generated polygons validate; broken transpositions are rejected") {
  std::mt19937_64 rng(42);
  int rejected = 0, skipped = 0;
  for (int it = 0; it < 1000; ++it) {
    int n = 4 + int(rng() % 37);
    Polygon p = testutil::random_polygon(n, 5000 + it);
    CHECK(p.size() == n);  // validated by construction

    // Transpose two random vertices; if simplicity is broken, validation
    // must say so. Transpositions that keep the polygon simple are skipped.
    std::vector<Point> pts = p.vertices();
    int i = int(rng() % n), j = int(rng() % n);
    if (i == j) {
      ++skipped;
      continue;
    }
    std::swap(pts[i], pts[j]);
    bool simple_again = true;
    try {
      Polygon::validate(pts);
    } catch (const Error&) {
      simple_again = false;
    }
    if (simple_again)
      ++skipped;
    else
      ++rejected;
  }
  CHECK(rejected > 500);  // the vast majority of swaps break simplicity
}
