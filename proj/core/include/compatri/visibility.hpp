#pragma once

#include <functional>
#include <map>
#include <vector>

#include "compatri/decompose.hpp"

namespace compatri {

// Visible portion of a splitting chord from one region vertex, parameterised
// along the chord from endpoint a (param 0) to endpoint b (param 1).
//
// lo/hi are the *closed-region* visibility bounds: x in [lo,hi] iff the
// segment vx stays inside the closed region. A strict flag marks an endpoint
// whose sightline grazes a reflex vertex; such a sightline contains a vertex
// in its open interior and therefore does not count as visible for queries,
// which must match is_diagonal exactly.
struct ChordInterval {
  bool empty = true;
  Rational lo, hi;
  bool lo_strict = false;
  bool hi_strict = false;

  bool contains_closed(const Rational& x) const {
    return !empty && compare(x, lo) >= 0 && compare(x, hi) <= 0;
  }
  bool contains_visible(const Rational& x) const {
    if (empty) return false;
    int cl = compare(x, lo);
    if (cl < 0 || (cl == 0 && lo_strict)) return false;
    int ch = compare(x, hi);
    if (ch > 0 || (ch == 0 && hi_strict)) return false;
    return true;
  }
};

// Chord intervals for every region vertex other than the chord endpoints.
// The default implementation runs two shortest-path-tree funnels per side
// (linear in the region size); the _bruteforce twin evaluates candidate
// sightlines quadratically and exists as an independent test oracle.
std::map<int, ChordInterval> compute_chord_intervals(const Polygon& p,
                                                     const Triangulation& t,
                                                     const Region& region, IndexPair d);
std::map<int, ChordInterval> compute_chord_intervals_bruteforce(const Polygon& p,
                                                                const Triangulation& t,
                                                                const Region& region,
                                                                IndexPair d);

// Shortest-path-tree parents inside one side polygon (boundary cycle with the
// chord as its closing edge). parent[v] is the next vertex on the geodesic
// from v to the source; exposed for the funnel's own tests.
std::vector<int> funnel_parents(const Polygon& p, const std::vector<int>& side_cycle,
                                const std::vector<Triangle>& side_triangles, int source);

// Euler-tour + sparse-table constant-time LCA over the decomposition tree.
class LcaIndex {
 public:
  LcaIndex() = default;
  explicit LcaIndex(const DecompositionTree& tree);
  int lca(int u, int v) const;

 private:
  std::vector<int> first_, tour_, tour_depth_, log2_;
  std::vector<std::vector<int>> table_;  // positions minimising tour depth
};

// Theorem-1 style structure: O(n log n) space, constant-time vertex-to-vertex
// visibility queries answered from the decomposition tree, the per-vertex
// chord-interval arrays and the LCA index.
class VisibilityIndex {
 public:
  using Triangulator = std::function<Triangulation(const Polygon&)>;

  static VisibilityIndex build(const Polygon& p);
  static VisibilityIndex build(const Polygon& p, const Triangulator& tr);

  // True iff the open segment between the two vertices lies in the closed
  // polygon with boundary contact only at its endpoints; adjacent vertices
  // (edges) answer true.
  bool visible(int v, int w) const;

  int size() const { return poly_.size(); }
  const Polygon& polygon() const { return poly_; }
  const DecompositionTree& tree() const { return tree_; }
  int associated_node(int v) const { return assoc_[v]; }
  const std::vector<ChordInterval>& intervals_of(int v) const { return ivals_[v]; }
  int stored_interval_count() const { return stored_; }
  int tree_height() const { return tree_.height; }

 private:
  Polygon poly_;
  DecompositionTree tree_;
  LcaIndex lca_;
  std::vector<int> assoc_;
  std::vector<std::vector<ChordInterval>> ivals_;  // ivals_[v][k]: splitter at depth k
  int stored_ = 0;
};

}  // namespace compatri
