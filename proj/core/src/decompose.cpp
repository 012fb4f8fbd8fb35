#include "compatri/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace compatri {

namespace {

// Dual adjacency (up to 3 neighbours) restricted to one region's triangles,
// plus the list of internal chords with their two local triangle ids.
struct RegionDual {
  std::vector<std::array<int, 3>> adj;
  std::vector<std::pair<IndexPair, std::pair<int, int>>> chords;
};

RegionDual region_dual(const Triangulation& tri, const Region& region) {
  const int m = int(region.triangles.size());
  RegionDual rd;
  rd.adj.assign(m, {-1, -1, -1});
  std::map<IndexPair, std::pair<int, int>> shared;
  for (int local = 0; local < m; ++local) {
    const Triangle& t = tri.triangles[region.triangles[local]];
    for (IndexPair side : {IndexPair::of(t.a, t.b), IndexPair::of(t.b, t.c),
                           IndexPair::of(t.c, t.a)}) {
      if (tri.polygon.adjacent(side.a, side.b)) continue;
      auto [it, fresh] = shared.emplace(side, std::pair<int, int>{local, -1});
      if (!fresh) it->second.second = local;
    }
  }
  for (auto& [diag, pr] : shared) {
    if (pr.second < 0) continue;  // region boundary chord (an ancestor splitter)
    rd.chords.push_back({diag, pr});
    for (auto [x, y] : {pr, std::pair<int, int>{pr.second, pr.first}}) {
      for (int& slot : rd.adj[x])
        if (slot < 0) {
          slot = y;
          break;
        }
    }
  }
  return rd;
}

std::pair<Region, Region> split_by(const Triangulation& tri, const Region& region,
                                   const RegionDual& rd, IndexPair d,
                                   std::pair<int, int> owners) {
  const int m = int(region.triangles.size());
  std::vector<int> side(m, -1);
  auto flood = [&](int start, int mark) {
    std::vector<int> stack{start};
    side[start] = mark;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : rd.adj[u]) {
        if (v < 0 || side[v] >= 0) continue;
        if ((u == owners.first && v == owners.second) ||
            (u == owners.second && v == owners.first))
          continue;  // never cross the splitter's dual edge
        side[v] = mark;
        stack.push_back(v);
      }
    }
  };
  flood(owners.first, 0);
  flood(owners.second, 1);

  const auto& cyc = region.cycle;
  int pa = -1, pb = -1;
  for (int k = 0; k < int(cyc.size()); ++k) {
    if (cyc[k] == d.a) pa = k;
    if (cyc[k] == d.b) pb = k;
  }
  if (pa < 0 || pb < 0) throw Error(Error::Kind::NotASplitter, "NotASplitter");
  auto arc = [&](int from, int to) {
    std::vector<int> r;
    for (int k = from;; k = (k + 1) % int(cyc.size())) {
      r.push_back(cyc[k]);
      if (k == to) break;
    }
    return r;
  };

  Region r1, r2;
  r1.cycle = arc(pa, pb);
  r2.cycle = arc(pb, pa);
  for (int local = 0; local < m; ++local)
    (side[local] == 0 ? r1 : r2).triangles.push_back(region.triangles[local]);

  // Match triangle sets to arcs via the splitter-adjacent triangle's third
  // vertex, which lies strictly inside exactly one arc.
  const Triangle& t0 = tri.triangles[region.triangles[owners.first]];
  int third = -1;
  for (int v : {t0.a, t0.b, t0.c})
    if (v != d.a && v != d.b) third = v;
  bool third_in_r1 = std::find(r1.cycle.begin(), r1.cycle.end(), third) != r1.cycle.end();
  if (!third_in_r1) std::swap(r1.triangles, r2.triangles);
  if (r1.triangles.empty() || r2.triangles.empty() ||
      int(r1.triangles.size()) + int(r2.triangles.size()) != m)
    throw internal_inconsistency("region partition mismatch");
  return {r1, r2};
}

struct Builder {
  const Triangulation& tri;
  DecompositionTree out;

  int build_node(Region region, int parent, int depth) {
    int id = int(out.nodes.size());
    out.nodes.push_back(DecompNode{});
    out.nodes[id].parent = parent;
    out.nodes[id].depth = depth;
    out.nodes[id].region = region;
    out.height = std::max(out.height, depth);

    if (region.triangles.size() == 1) {
      out.nodes[id].triangle = region.triangles[0];
      return id;
    }

    const int m = int(region.triangles.size());
    RegionDual rd = region_dual(tri, region);

    // Subtree sizes of the region's dual tree rooted at local triangle 0.
    std::vector<int> order, parent_of(m, -2), size(m, 1);
    order.reserve(m);
    order.push_back(0);
    parent_of[0] = -1;
    for (size_t h = 0; h < order.size(); ++h) {
      int u = order[h];
      for (int v : rd.adj[u])
        if (v >= 0 && parent_of[v] == -2) {
          parent_of[v] = u;
          order.push_back(v);
        }
    }
    if (int(order.size()) != m) throw internal_inconsistency("region dual not connected");
    for (int h = m - 1; h >= 1; --h) size[parent_of[order[h]]] += size[order[h]];

    IndexPair best{-1, -1};
    std::pair<int, int> best_pr{-1, -1};
    int best_larger = m + 1;
    for (auto& [diag, pr] : rd.chords) {
      int child = parent_of[pr.second] == pr.first ? pr.second : pr.first;
      int larger = std::max(size[child], m - size[child]);
      if (larger < best_larger || (larger == best_larger && diag < best)) {
        best = diag;
        best_pr = pr;
        best_larger = larger;
      }
    }
    if (best.a < 0) throw internal_inconsistency("no splitter found");
    if (best_larger > (2 * m + 2) / 3)
      throw internal_inconsistency("centroid edge split exceeds 2/3 bound");

    out.nodes[id].splitter = best;
    auto [r1, r2] = split_by(tri, region, rd, best, best_pr);
    out.nodes[id].left = build_node(std::move(r1), id, depth + 1);
    out.nodes[id].right = build_node(std::move(r2), id, depth + 1);
    return id;
  }
};

}  // namespace

std::pair<Region, Region> split_region(const Triangulation& t, const Region& region,
                                       IndexPair d) {
  RegionDual rd = region_dual(t, region);
  for (auto& [diag, pr] : rd.chords)
    if (diag == IndexPair::of(d.a, d.b)) return split_by(t, region, rd, diag, pr);
  throw Error(Error::Kind::NotASplitter, "NotASplitter");
}

DecompositionTree build_decomposition(const Triangulation& t) {
  Region root;
  const int n = t.polygon.size();
  root.cycle.resize(n);
  for (int i = 0; i < n; ++i) root.cycle[i] = i;
  root.triangles.resize(t.triangles.size());
  for (int i = 0; i < int(t.triangles.size()); ++i) root.triangles[i] = i;

  Builder b{t, {}};
  b.build_node(std::move(root), -1, 0);

  double bound = 2.0 * std::log2(double(n)) + 2.0;
  if (b.out.height > bound) throw internal_inconsistency("decomposition height bound");
  return std::move(b.out);
}

}  // namespace compatri
