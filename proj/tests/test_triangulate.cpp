#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "compatri/decompose.hpp"
#include "compatri/triangulate.hpp"
#include "testutil.hpp"

using namespace compatri;

namespace {

i128 doubled_area(const Polygon& p, int a, int b, int c) {
  return cross(p[b] - p[a], p[c] - p[a]);
}

void check_triangulation_invariants(const Triangulation& t) {
  const Polygon& p = t.polygon;
  const int n = p.size();
  REQUIRE(int(t.triangles.size()) == n - 2);
  REQUIRE(int(t.diagonals.size()) == n - 3);
  REQUIRE(int(t.dual.size()) == std::max(n - 3, 0));

  // every diagonal is a genuine diagonal and no two cross
  for (const IndexPair& d : t.diagonals) CHECK(is_diagonal(p, d));
  for (size_t i = 0; i < t.diagonals.size(); ++i)
    for (size_t j = i + 1; j < t.diagonals.size(); ++j) {
      const IndexPair a = t.diagonals[i], b = t.diagonals[j];
      if (a.a == b.a || a.a == b.b || a.b == b.a || a.b == b.b) continue;
      CHECK(classify_segments(p[a.a], p[a.b], p[b.a], p[b.b]) !=
            SegmentRelation::ProperCrossing);
    }

  // triangles tile the polygon: doubled signed areas add up
  i128 total = 0;
  for (const Triangle& tr : t.triangles) {
    i128 a2 = doubled_area(p, tr.a, tr.b, tr.c);
    CHECK(a2 > 0);
    total += a2;
  }
  i128 poly2 = 0;
  for (int i = 0; i < n; ++i) poly2 += cross(p[i], p[i + 1]);
  CHECK(total == poly2);

  // dual is a tree: n-2 nodes, n-3 edges, connected
  std::vector<std::vector<int>> adj(t.triangles.size());
  for (const DualEdge& e : t.dual) {
    adj[e.t1].push_back(e.t2);
    adj[e.t2].push_back(e.t1);
    CHECK(t.has_diagonal(e.diag));
  }
  std::vector<char> seen(t.triangles.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    ++visited;
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  CHECK(visited == int(t.triangles.size()));
}

}  // namespace

TEST_CASE("unit square clips the first chain triple") {
  Triangulation t = triangulate(testutil::unit_square());
  REQUIRE(t.diagonals.size() == 1);
  CHECK(t.diagonals[0] == IndexPair{0, 2});
  check_triangulation_invariants(t);
}

TEST_CASE("triangle needs no diagonals") {
  Triangulation t = triangulate(testutil::poly({{0, 0}, {3, 0}, {0, 3}}));
  CHECK(t.diagonals.empty());
  CHECK(t.triangles.size() == 1);
  check_triangulation_invariants(t);
}

TEST_CASE("concave hexagon triangulates into a fan from vertex 0") {
  Triangulation t = triangulate(testutil::l_hexagon());
  CHECK(t.diagonals.size() == 3);
  check_triangulation_invariants(t);
  CHECK(t.has_diagonal({0, 2}));
  CHECK(t.has_diagonal({0, 3}));
  CHECK(t.has_diagonal({0, 4}));
}

TEST_CASE("random polygons triangulate cleanly") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 1000; ++it) {
    double u = double(rng() % 10000) / 10000.0;
    int n = 4 + int(296 * u * u * u);
    Polygon p = testutil::random_polygon(n, 9000 + it);
    check_triangulation_invariants(triangulate(p));
  }
}

TEST_CASE("diagonal fans: examples and structure") {
  Triangulation sq = triangulate(testutil::unit_square());
  DiagonalFans f = diagonal_fans(sq);
  CHECK(f.offsets[0] == std::vector<int>{2});
  CHECK(f.offsets[1].empty());
  CHECK(f.offsets[2] == std::vector<int>{2});
  CHECK(f.offsets[3].empty());

  Triangulation tri = triangulate(testutil::poly({{0, 0}, {3, 0}, {0, 3}}));
  for (const auto& fan : diagonal_fans(tri).offsets) CHECK(fan.empty());

  // star-triangulated convex hexagon: fan at 0 = [2,3,4]
  Polygon hex = generate_convex_polygon(6, 3);
  Triangulation star =
      assemble_triangulation(hex, {IndexPair{0, 2}, IndexPair{0, 3}, IndexPair{0, 4}});
  DiagonalFans sf = diagonal_fans(star);
  CHECK(sf.offsets[0] == std::vector<int>{2, 3, 4});
  CHECK(sf.total() == 2 * (6 - 3));
}

TEST_CASE("fans: consecutive entries span triangles of T") {
  for (int it = 0; it < 50; ++it) {
    Polygon p = testutil::random_polygon(6 + it % 40, 400 + it);
    Triangulation t = triangulate(p);
    DiagonalFans f = diagonal_fans(t);
    const int n = p.size();
    CHECK(f.total() == 2 * (n - 3));

    std::set<std::array<int, 3>> tri_set;
    for (const Triangle& tr : t.triangles) {
      std::array<int, 3> key{tr.a, tr.b, tr.c};
      std::sort(key.begin(), key.end());
      tri_set.insert(key);
    }
    for (int i = 0; i < n; ++i) {
      std::vector<int> aug{1};
      for (int off : f.offsets[i]) aug.push_back(off);
      aug.push_back(n - 1);
      for (size_t k = 0; k + 1 < aug.size(); ++k) {
        CHECK(aug[k] < aug[k + 1]);
        std::array<int, 3> key{i, (i + aug[k]) % n, (i + aug[k + 1]) % n};
        std::sort(key.begin(), key.end());
        CHECK(tri_set.count(key) == 1);
      }
    }
  }
}

TEST_CASE("assemble_triangulation validates and reconstructs") {
  Polygon hex = testutil::l_hexagon();
  Triangulation t = triangulate(hex);
  Triangulation re = assemble_triangulation(hex, t.diagonals);
  CHECK(re.diagonals == t.diagonals);
  CHECK(re.triangles.size() == t.triangles.size());
  check_triangulation_invariants(re);

  CHECK_THROWS_AS(
      assemble_triangulation(hex, {IndexPair{1, 4}, IndexPair{0, 3}, IndexPair{0, 4}}),
      Error);  // (1,4) is not interior
  CHECK_THROWS_AS(assemble_triangulation(hex, {IndexPair{0, 2}}), Error);  // wrong count
}

TEST_CASE("decomposition: unit square splits at its only diagonal") {
  DecompositionTree tree = build_decomposition(triangulate(testutil::unit_square()));
  REQUIRE(tree.node_count() == 3);
  CHECK(tree.nodes[0].splitter == IndexPair{0, 2});
  CHECK(tree.nodes[tree.nodes[0].left].is_leaf());
  CHECK(tree.nodes[tree.nodes[0].right].is_leaf());
  CHECK(tree.height == 1);
}

TEST_CASE("decomposition: triangle is a single leaf") {
  DecompositionTree tree =
      build_decomposition(triangulate(testutil::poly({{0, 0}, {3, 0}, {0, 3}})));
  CHECK(tree.node_count() == 1);
  CHECK(tree.nodes[0].is_leaf());
  CHECK(tree.height == 0);
}

TEST_CASE("concave hexagon splits at (0,3) first") {
  DecompositionTree tree = build_decomposition(triangulate(testutil::l_hexagon()));
  CHECK(tree.nodes[0].splitter == IndexPair{0, 3});
}

TEST_CASE("decomposition balance on convex octagons") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Polygon p = generate_convex_polygon(8, 50 + seed);
    DecompositionTree tree = build_decomposition(triangulate(p));
    CHECK(tree.height <= 5);
  }
}

TEST_CASE("decomposition invariants over random polygons") {
  for (int it = 0; it < 60; ++it) {
    int n = 4 + it * 5 % 200;
    Polygon p = testutil::random_polygon(n, 777 + it);
    Triangulation t = triangulate(p);
    DecompositionTree tree = build_decomposition(t);  // throws if split > 2/3 bound
    CHECK(tree.height <= 2 * std::log2(double(n)) + 2);

    // every diagonal is the splitter of exactly one node
    std::map<IndexPair, int> uses;
    int leaves = 0;
    for (const auto& node : tree.nodes) {
      if (node.is_leaf())
        ++leaves;
      else
        uses[node.splitter]++;
    }
    CHECK(leaves == n - 2);
    CHECK(int(uses.size()) == n - 3);
    for (auto& [d, c] : uses) {
      CHECK(c == 1);
      CHECK(t.has_diagonal(d));
    }

    // children partition the parent's triangles
    for (const auto& node : tree.nodes) {
      if (node.is_leaf()) continue;
      const auto& l = tree.nodes[node.left].region.triangles;
      const auto& r = tree.nodes[node.right].region.triangles;
      std::set<int> all(l.begin(), l.end());
      all.insert(r.begin(), r.end());
      CHECK(all.size() == l.size() + r.size());
      CHECK(all ==
            std::set<int>(node.region.triangles.begin(), node.region.triangles.end()));
    }
  }
}
