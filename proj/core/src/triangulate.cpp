#include "compatri/triangulate.hpp"

#include <algorithm>
#include <map>

namespace compatri {

bool Triangulation::has_diagonal(IndexPair d) const {
  return std::binary_search(diagonals.begin(), diagonals.end(), d);
}

int DiagonalFans::total() const {
  int s = 0;
  for (const auto& f : offsets) s += int(f.size());
  return s;
}

namespace {

// In-cone test against the *current chain* neighbours. Straight chain corners
// (which clipping can create from non-consecutive collinear input vertices)
// take the convex branch: the cone degenerates to an open half-plane.
bool chain_in_cone(const Polygon& p, const std::vector<int>& chain, int pos, int target) {
  const int m = int(chain.size());
  const Point& a0 = p[chain[(pos + m - 1) % m]];
  const Point& a = p[chain[pos]];
  const Point& a1 = p[chain[(pos + 1) % m]];
  const Point& b = p[target];
  if (orientation(a0, a, a1) >= 0)
    return orientation(a, b, a0) > 0 && orientation(b, a, a1) > 0;
  return !(orientation(a, b, a1) >= 0 && orientation(b, a, a0) >= 0);
}

// Is (chain[k], chain[k+1], chain[k+2]) clippable? The candidate diagonal is
// (chain[k], chain[k+2]); both cone tests plus a full contact scan make this
// the exact chain-diagonal predicate.
bool is_ear(const Polygon& p, const std::vector<int>& chain, int k) {
  const int m = int(chain.size());
  const int i0 = chain[k], i1 = chain[(k + 1) % m], i2 = chain[(k + 2) % m];
  if (orientation(p[i0], p[i1], p[i2]) <= 0) return false;
  if (!chain_in_cone(p, chain, k, i2)) return false;
  if (!chain_in_cone(p, chain, (k + 2) % m, i0)) return false;
  for (int t = 0; t < m; ++t) {
    int u = chain[t], u1 = chain[(t + 1) % m];
    if (u == i0 || u == i2 || u1 == i0 || u1 == i2) continue;
    if (classify_segments(p[i0], p[i2], p[u], p[u1]) != SegmentRelation::Disjoint)
      return false;
  }
  for (int t = 0; t < m; ++t) {
    int u = chain[t];
    if (u == i0 || u == i1 || u == i2) continue;
    if (on_segment(p[i0], p[i2], p[u])) return false;
  }
  return true;
}

void build_dual(Triangulation& t) {
  std::map<IndexPair, int> first_owner;
  for (int id = 0; id < int(t.triangles.size()); ++id) {
    const Triangle& tr = t.triangles[id];
    for (IndexPair side : {IndexPair::of(tr.a, tr.b), IndexPair::of(tr.b, tr.c),
                           IndexPair::of(tr.c, tr.a)}) {
      if (t.polygon.adjacent(side.a, side.b)) continue;  // polygon edge
      auto it = first_owner.find(side);
      if (it == first_owner.end()) {
        first_owner.emplace(side, id);
      } else {
        t.dual.push_back(DualEdge{it->second, id, side});
      }
    }
  }
  if (int(t.dual.size()) != int(t.triangles.size()) - 1)
    throw internal_inconsistency("dual tree edge count");
}

}  // namespace

Triangulation triangulate(const Polygon& p) {
  const int n = p.size();
  Triangulation result;
  result.polygon = p;

  std::vector<int> chain(n);
  for (int i = 0; i < n; ++i) chain[i] = i;

  while (int(chain.size()) > 3) {
    const int m = int(chain.size());
    bool clipped = false;
    for (int k = 0; k < m; ++k) {
      if (!is_ear(p, chain, k)) continue;
      int i0 = chain[k], i1 = chain[(k + 1) % m], i2 = chain[(k + 2) % m];
      result.triangles.push_back(Triangle{i0, i1, i2});
      if (!p.adjacent(i0, i2)) result.diagonals.push_back(IndexPair::of(i0, i2));
      chain.erase(chain.begin() + (k + 1) % m);
      clipped = true;
      break;
    }
    if (!clipped) throw internal_inconsistency("no ear found in simple polygon");
  }
  if (orientation(p[chain[0]], p[chain[1]], p[chain[2]]) <= 0)
    throw internal_inconsistency("degenerate final triangle");
  result.triangles.push_back(Triangle{chain[0], chain[1], chain[2]});

  std::sort(result.diagonals.begin(), result.diagonals.end());
  build_dual(result);
  return result;
}

Triangulation assemble_triangulation(const Polygon& p, std::vector<IndexPair> diagonals) {
  const int n = p.size();
  for (auto& d : diagonals) {
    d = IndexPair::of(p.wrap(d.a), p.wrap(d.b));
    if (d.a == d.b) throw Error(Error::Kind::SameVertex, "SameVertex");
    if (p.adjacent(d.a, d.b)) throw Error(Error::Kind::AdjacentPair, "AdjacentPair");
    if (!is_diagonal(p, d))
      throw Error(Error::Kind::NotSimple, "diagonal (" + std::to_string(d.a) + "," +
                                              std::to_string(d.b) + ") is not interior");
  }
  std::sort(diagonals.begin(), diagonals.end());
  if (std::adjacent_find(diagonals.begin(), diagonals.end()) != diagonals.end())
    throw internal_inconsistency("duplicate diagonal");
  if (int(diagonals.size()) != n - 3)
    throw Error(Error::Kind::SizeMismatch,
                "expected " + std::to_string(n - 3) + " diagonals, got " +
                    std::to_string(diagonals.size()));
  for (size_t i = 0; i < diagonals.size(); ++i)
    for (size_t j = i + 1; j < diagonals.size(); ++j) {
      const IndexPair x = diagonals[i], y = diagonals[j];
      if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) continue;
      if (classify_segments(p[x.a], p[x.b], p[y.a], p[y.b]) ==
          SegmentRelation::ProperCrossing)
        throw Error(Error::Kind::NotSimple, "crossing diagonals");
    }

  // Recover the triangles by ear-peeling the chord structure: repeatedly cut
  // at a vertex whose two chain neighbours are joined by an edge or diagonal.
  Triangulation result;
  result.polygon = p;
  result.diagonals = diagonals;
  auto connected = [&](int i, int j) {
    return p.adjacent(i, j) || std::binary_search(diagonals.begin(), diagonals.end(),
                                                  IndexPair::of(i, j));
  };
  std::vector<int> chain(n);
  for (int i = 0; i < n; ++i) chain[i] = i;
  while (int(chain.size()) > 3) {
    const int m = int(chain.size());
    bool cut = false;
    for (int k = 0; k < m; ++k) {
      int i0 = chain[k], i1 = chain[(k + 1) % m], i2 = chain[(k + 2) % m];
      if (!connected(i0, i2)) continue;
      result.triangles.push_back(Triangle{i0, i1, i2});
      chain.erase(chain.begin() + (k + 1) % m);
      cut = true;
      break;
    }
    if (!cut) throw internal_inconsistency("diagonal set does not triangulate");
  }
  result.triangles.push_back(Triangle{chain[0], chain[1], chain[2]});
  build_dual(result);
  return result;
}

DiagonalFans diagonal_fans(const Triangulation& t) {
  const int n = t.polygon.size();
  DiagonalFans fans;
  fans.offsets.assign(n, {});
  for (const IndexPair& d : t.diagonals) {
    fans.offsets[d.a].push_back(int((d.b - d.a + n) % n));
    fans.offsets[d.b].push_back(int((d.a - d.b + n) % n));
  }
  for (auto& f : fans.offsets) std::sort(f.begin(), f.end());
  return fans;
}

}  // namespace compatri
