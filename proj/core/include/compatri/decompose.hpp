#pragma once

#include <vector>

#include "compatri/triangulate.hpp"

namespace compatri {

// A sub-polygon of the decomposition: boundary cycle (original vertex indices,
// CCW) plus the triangles of the base triangulation it contains.
struct Region {
  std::vector<int> cycle;
  std::vector<int> triangles;  // indices into Triangulation::triangles
};

struct DecompNode {
  int parent = -1;
  int left = -1, right = -1;
  int depth = 0;
  Region region;
  IndexPair splitter{-1, -1};  // internal nodes only
  int triangle = -1;           // leaf nodes only
  bool is_leaf() const { return triangle >= 0; }
};

// Balanced binary region tree: every internal node is split by the
// triangulation diagonal that minimises the larger child's triangle count
// (the centroid edge of the dual tree), ties broken by smaller canonical
// pair. Height is asserted <= 2*log2(n) + 2 at build time.
struct DecompositionTree {
  std::vector<DecompNode> nodes;  // nodes[0] is the root
  int height = 0;

  int node_count() const { return int(nodes.size()); }
};

DecompositionTree build_decomposition(const Triangulation& t);

// Cuts a region along one of its internal diagonals: the boundary cycle is
// split into the two arcs between the diagonal endpoints and the triangles
// are flooded on each side of the diagonal's dual edge. Throws NotASplitter
// if d is not shared by two triangles of the region.
std::pair<Region, Region> split_region(const Triangulation& t, const Region& region,
                                       IndexPair d);

}  // namespace compatri
