#pragma once

#include "compatri/triangulate.hpp"
#include "compatri/visibility.hpp"

namespace compatri {

// Per reflex vertex q_i: the offset window [sigma_hat, tau_hat) such that a
// diagonal q_i q_{i+t} can lie inside the wedge at q_i only if t falls in the
// window. Derived from shooting the two edge extensions; sigma_hat == tau_hat
// encodes an empty window.
struct WedgeEntry {
  int vertex = -1;  // the reflex vertex i
  int sigma_hat = 0;
  int tau_hat = 0;
  RayHit hit_prev;  // extension of edge q_{i-1} q_i beyond q_i
  RayHit hit_next;  // extension of edge q_{i+1} q_i beyond q_i
};

struct WedgeTable {
  int n = 0;
  std::vector<WedgeEntry> entries;          // ascending by vertex
  std::vector<int> entry_of;                // vertex -> entry index or -1
  const WedgeEntry* find(int vertex) const {
    int e = entry_of[vertex];
    return e < 0 ? nullptr : &entries[e];
  }
};

WedgeTable build_wedge_table(const Polygon& q);

// The defining membership predicate: q_j strictly inside the wedge at reflex
// vertex q_i (strictly left of the extended incoming edge, strictly right of
// the extended outgoing edge).
bool wedge_contains(const Polygon& q, int i, int j);

enum class SatisfiesOutcome { Marked, NotMarked, KillsRotation };

// Does rotation s satisfy reflex vertex q_i? Either a fan diagonal of T at
// the mapped vertex lands inside the wedge window (then that one diagonal
// must be visible in Q, otherwise the rotation is dead), or the fan triangle
// spanning the window must have all three sides present in Q.
SatisfiesOutcome satisfies(int s, int i, const DiagonalFans& fans, const WedgeTable& w,
                           const VisibilityIndex& vis);

// Scoreboard per rotation: counter[s] counts satisfied reflex vertices,
// dead[s] marks rotations excluded by a missing mandatory diagonal.
struct RotationScoreboard {
  std::vector<int> counter;
  std::vector<char> dead;
};

struct RotationSearchResult {
  std::vector<int> rotations;  // sorted ascending
  int reflex_vertices = 0;
  RotationScoreboard scoreboard;

  // Witness triangulation for a reported rotation: T's diagonals shifted.
  static std::vector<IndexPair> witness(const Triangulation& t, int s);
};

// All rotations s of Q's numbering such that T's diagonals all map to
// diagonals of Q. Batched sweep: one merge of each fan against the sorted
// wedge windows, O(n log n + nr) overall.
RotationSearchResult find_rotations(const Triangulation& t, const Polygon& q);

}  // namespace compatri
