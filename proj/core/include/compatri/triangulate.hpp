#pragma once

#include <array>
#include <vector>

#include "compatri/geometry.hpp"

namespace compatri {

struct Triangle {
  int a = 0, b = 0, c = 0;  // CCW original vertex indices
  bool contains(int v) const { return v == a || v == b || v == c; }
};

struct DualEdge {
  int t1 = -1, t2 = -1;  // triangles sharing `diag`
  IndexPair diag;
};

// A triangulation of a simple polygon: n-3 pairwise non-crossing diagonals,
// n-2 triangles tiling the polygon, and the dual tree over the triangles.
struct Triangulation {
  Polygon polygon;
  std::vector<IndexPair> diagonals;  // canonical, sorted
  std::vector<Triangle> triangles;
  std::vector<DualEdge> dual;  // n-3 edges; adjacency = shared diagonal

  bool has_diagonal(IndexPair d) const;
};

// Deterministic ear clipping: after every clip the scan restarts at chain
// position 0, so the first valid triple (chain[k], chain[k+1], chain[k+2])
// is always clipped. O(n^2) on typical inputs; correctness first.
Triangulation triangulate(const Polygon& p);

// Builds a Triangulation record from an explicit diagonal set (validating
// counts and deriving triangles + dual). Used by the CLI when a triangulation
// file is supplied.
Triangulation assemble_triangulation(const Polygon& p, std::vector<IndexPair> diagonals);

// Per-vertex offsets 1 < s_1 < ... < s_l < n-1 such that (i, i+s_k) is a
// diagonal; sorted offsets equal the CCW angular order around the vertex.
struct DiagonalFans {
  std::vector<std::vector<int>> offsets;  // offsets[i] strictly increasing
  int total() const;
};

DiagonalFans diagonal_fans(const Triangulation& t);

}  // namespace compatri
