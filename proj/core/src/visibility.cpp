#include "compatri/visibility.hpp"

#include <algorithm>

namespace compatri {

namespace {

// Sign of (b-a) x (x-a) for an exact rational point x; goes through the
// 256-bit product so mixed integer/rational predicates stay exact.
int orientation_rat(const Point& a, const Point& b, const RationalPoint& x) {
  stats::bump_orientation();
  i128 nx = x.x.num - i128(a.x) * x.x.den;  // (x - a) * den, componentwise
  i128 ny = x.y.num - i128(a.y) * x.y.den;
  i128 ux = b.x - a.x, uy = b.y - a.y;
  // cross(b-a, x-a) = ux*ny/dy - uy*nx/dx; clear the denominators pairwise
  return sign_of_prod_diff(ux * x.x.den, ny, uy * x.y.den, nx);
}

RationalPoint chord_point(const Point& a, const Point& b, const Rational& s) {
  RationalPoint r;
  r.x = Rational(i128(a.x) * s.den + s.num * (b.x - a.x), s.den);
  r.y = Rational(i128(a.y) * s.den + s.num * (b.y - a.y), s.den);
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Funnel shortest-path tree
// ---------------------------------------------------------------------------

namespace {

struct Funnel {
  std::vector<int> chain;  // vertex ids; unexplored territory left of front->back
  int apex = 0;            // position in chain
};

// Tangent position of w on the funnel chain. Grazing sightlines are treated
// as bends at the nearest collinear vertex, which is what makes the interval
// endpoint bookkeeping exact later on.
int tangent_position(const Polygon& p, const std::vector<int>& C, int ap, const Point& w) {
  const int q = int(C.size()) - 1;
  const Point& A = p[C[ap]];
  bool left_ok = (ap == 0) || orientation(A, p[C[0]], w) < 0;
  bool right_ok = (ap == q) || orientation(A, p[C[q]], w) > 0;
  if (left_ok && right_ok) return ap;

  if (!left_ok) {
    for (int t = ap - 1; t >= 1; --t) {
      int o1 = orientation(w, p[C[t]], p[C[t + 1]]);
      bool a1 = o1 > 0 || (o1 == 0 && !on_segment(w, p[C[t]], p[C[t + 1]]));
      int o2 = orientation(w, p[C[t]], p[C[t - 1]]);
      bool b1 = o2 > 0 || (o2 == 0 && on_segment(w, p[C[t - 1]], p[C[t]]));
      if (a1 && b1) return t;
    }
    return 0;
  }
  for (int t = ap + 1; t <= q - 1; ++t) {
    int o1 = orientation(w, p[C[t]], p[C[t - 1]]);
    bool a1 = o1 < 0 || (o1 == 0 && !on_segment(w, p[C[t]], p[C[t - 1]]));
    int o2 = orientation(w, p[C[t]], p[C[t + 1]]);
    bool b1 = o2 < 0 || (o2 == 0 && on_segment(w, p[C[t + 1]], p[C[t]]));
    if (a1 && b1) return t;
  }
  return q;
}

}  // namespace

std::vector<int> funnel_parents(const Polygon& p, const std::vector<int>& side_cycle,
                                const std::vector<Triangle>& side_triangles, int source) {
  std::vector<int> parent(p.size(), -2);

  std::map<std::pair<int, int>, int> far;  // directed CCW edge -> opposite vertex
  for (const Triangle& t : side_triangles) {
    far[{t.a, t.b}] = t.c;
    far[{t.b, t.c}] = t.a;
    far[{t.c, t.a}] = t.b;
  }

  const int F = side_cycle.front(), B = side_cycle.back();
  if (source != F && source != B)
    throw internal_inconsistency("funnel source must be a chord endpoint");
  parent[source] = -1;
  parent[source == F ? B : F] = source;

  std::vector<Funnel> stack;
  stack.push_back(Funnel{{B, F}, source == B ? 0 : 1});
  while (!stack.empty()) {
    Funnel f = std::move(stack.back());
    stack.pop_back();
    auto it = far.find({f.chain.front(), f.chain.back()});
    if (it == far.end()) continue;  // side-polygon boundary edge
    const int w = it->second;
    const auto& C = f.chain;
    const int t = tangent_position(p, C, f.apex, p[w]);
    parent[w] = C[t];

    Funnel left;
    left.chain.assign(C.begin(), C.begin() + t + 1);
    left.chain.push_back(w);
    left.apex = std::min(t, f.apex);
    Funnel right;
    right.chain.push_back(w);
    right.chain.insert(right.chain.end(), C.begin() + t, C.end());
    right.apex = std::max(f.apex - t, 0) + 1;
    stack.push_back(std::move(left));
    stack.push_back(std::move(right));
  }
  return parent;
}

// ---------------------------------------------------------------------------
// Chord intervals
// ---------------------------------------------------------------------------

namespace {

// Param on the chord a->b where the ray from v through u exits, as a value in
// [0,1]. The funnel guarantees the extension meets the chord.
Rational extension_param(const Polygon& p, int v, int u, int a, int b) {
  const Point V = p[v], U = p[u], A = p[a], Bp = p[b];
  const Point D = U - V;
  i128 den = cross(Bp - A, D);
  if (den == 0) throw internal_inconsistency("funnel extension parallel to chord");
  Rational s(cross(V - A, D), den);
  if (compare(s, Rational(0, 1)) < 0 || compare(s, Rational(1, 1)) > 0)
    throw internal_inconsistency("funnel extension misses the chord");
  return s;
}

void intervals_for_side(const Polygon& p, const Region& side,
                        const std::vector<Triangle>& side_tris, IndexPair d,
                        std::map<int, ChordInterval>& out) {
  auto pa = funnel_parents(p, side.cycle, side_tris, d.a);
  auto pb = funnel_parents(p, side.cycle, side_tris, d.b);

  for (int v : side.cycle) {
    if (v == d.a || v == d.b) continue;
    const int ua = pa[v], ub = pb[v];
    if (ua < 0 || ub < 0) throw internal_inconsistency("funnel missed a vertex");

    ChordInterval iv;
    if (ua == ub && ua != d.a && ua != d.b) {
      out[v] = iv;  // first geodesic edge shared: nothing on the chord visible
      continue;
    }
    auto bound = [&](int u) -> std::pair<Rational, bool> {
      if (u == d.a) return {Rational(0, 1), false};
      if (u == d.b) return {Rational(1, 1), false};
      return {extension_param(p, v, u, d.a, d.b), true};
    };
    auto [lo, lo_strict] = bound(ua);
    auto [hi, hi_strict] = bound(ub);
    if (compare(lo, hi) > 0)
      throw internal_inconsistency("funnel: lo > hi");
    iv.empty = false;
    iv.lo = lo;
    iv.hi = hi;
    iv.lo_strict = lo_strict;
    iv.hi_strict = hi_strict;
    out[v] = iv;
  }
}

std::vector<Triangle> materialize(const Triangulation& t, const Region& r) {
  std::vector<Triangle> ts;
  ts.reserve(r.triangles.size());
  for (int id : r.triangles) ts.push_back(t.triangles[id]);
  return ts;
}

}  // namespace

std::map<int, ChordInterval> compute_chord_intervals(const Polygon& p,
                                                     const Triangulation& t,
                                                     const Region& region, IndexPair d) {
  auto [s1, s2] = split_region(t, region, IndexPair::of(d.a, d.b));
  std::map<int, ChordInterval> out;
  intervals_for_side(p, s1, materialize(t, s1), IndexPair::of(d.a, d.b), out);
  intervals_for_side(p, s2, materialize(t, s2), IndexPair::of(d.a, d.b), out);
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracle twin (test support; quadratic per region)
// ---------------------------------------------------------------------------

namespace {

// Closed interior-cone test at region vertex u for a direction given by the
// rational target point x (or the integer point v): may the segment through u
// continue without leaving the closed region?
bool closed_cone_contains_rat(const Polygon& p, int prev, int u, int next,
                              const RationalPoint& x) {
  const Point& a0 = p[prev];
  const Point& a = p[u];
  const Point& a1 = p[next];
  if (orientation(a0, a, a1) > 0) {
    // convex corner: closed cone between the edges
    return orientation_rat(a, a0, x) <= 0 && orientation_rat(a, a1, x) >= 0;
  }
  // reflex corner: complement of the open exterior cone
  return !(orientation_rat(a, a1, x) < 0 && orientation_rat(a, a0, x) > 0);
}

bool closed_cone_contains_int(const Polygon& p, int prev, int u, int next, const Point& w) {
  RationalPoint x{Rational(w.x, 1), Rational(w.y, 1)};
  return closed_cone_contains_rat(p, prev, u, next, x);
}

bool strictly_between_rat(const Point& v, const RationalPoint& x, const Point& u) {
  // u strictly inside the open segment (v, x); collinearity checked by caller.
  auto cmp_coord = [](const Rational& lo, const Rational& t, const Rational& hi) {
    int a = compare(lo, t), b = compare(t, hi);
    return (a < 0 && b < 0) || (a > 0 && b > 0);
  };
  Rational ux(u.x, 1), uy(u.y, 1), vx(v.x, 1), vy(v.y, 1);
  if (compare(vx, x.x) != 0) return cmp_coord(vx, ux, x.x);
  return cmp_coord(vy, uy, x.y);
}

// Does the segment from region vertex v to chord point x stay inside the
// closed region? The segment can fail three ways: properly crossing a
// boundary edge, grazing a vertex on its exterior side, or leaving the
// region right at one of its endpoint vertices.
bool segment_in_region_closed(const Polygon& p, const Region& region, int v,
                              const RationalPoint& x) {
  const Point V = p[v];
  const int m = int(region.cycle.size());

  int pos_v = -1;
  for (int k = 0; k < m; ++k)
    if (region.cycle[k] == v) pos_v = k;
  if (pos_v < 0) throw internal_inconsistency("segment start is not a region vertex");
  if (!closed_cone_contains_rat(p, region.cycle[(pos_v + m - 1) % m], v,
                                region.cycle[(pos_v + 1) % m], x))
    return false;

  for (int k = 0; k < m; ++k) {
    int c = region.cycle[k], cn = region.cycle[(k + 1) % m];
    if (c == v || cn == v) continue;
    int o1 = orientation_rat(p[c], p[cn], RationalPoint{Rational(V.x, 1), Rational(V.y, 1)});
    int o2 = orientation_rat(p[c], p[cn], x);
    if (o1 * o2 >= 0) continue;
    // edge endpoints strictly on opposite sides of line(V, x)?
    int s1 = orientation_rat(V, p[c], x);
    int s2 = orientation_rat(V, p[cn], x);
    if (s1 * s2 < 0) return false;  // proper crossing
  }
  for (int k = 0; k < m; ++k) {
    int u = region.cycle[k];
    if (u == v) continue;
    int prev = region.cycle[(k + m - 1) % m], next = region.cycle[(k + 1) % m];
    RationalPoint up{Rational(p[u].x, 1), Rational(p[u].y, 1)};
    if (up.x == x.x && up.y == x.y) {
      // segment ends exactly at a region vertex (a chord endpoint)
      if (!closed_cone_contains_int(p, prev, u, next, V)) return false;
      continue;
    }
    if (orientation_rat(V, p[u], x) != 0) continue;  // not on the sightline
    if (!strictly_between_rat(V, x, p[u])) continue;
    if (!closed_cone_contains_rat(p, prev, u, next, x)) return false;
    if (!closed_cone_contains_int(p, prev, u, next, V)) return false;
  }
  return true;
}

}  // namespace

std::map<int, ChordInterval> compute_chord_intervals_bruteforce(const Polygon& p,
                                                                const Triangulation& t,
                                                                const Region& region,
                                                                IndexPair dd) {
  IndexPair d = IndexPair::of(dd.a, dd.b);
  split_region(t, region, d);  // validates NotASplitter the same way
  const Point A = p[d.a], B = p[d.b];

  std::map<int, ChordInterval> out;
  for (int v : region.cycle) {
    if (v == d.a || v == d.b) continue;
    const Point V = p[v];

    std::vector<Rational> params{Rational(0, 1), Rational(1, 1)};
    for (int u : region.cycle) {
      if (u == v) continue;
      Point D = p[u] - V;
      i128 den = cross(B - A, D);
      if (den == 0) continue;
      Rational s(cross(V - A, D), den);
      i128 tden = cross(D, B - A);
      Rational tr(cross(A - V, B - A), tden);
      if (compare(tr, Rational(0, 1)) > 0 && compare(s, Rational(0, 1)) >= 0 &&
          compare(s, Rational(1, 1)) <= 0)
        params.push_back(s);
    }
    std::sort(params.begin(), params.end(),
              [](const Rational& x, const Rational& y) { return compare(x, y) < 0; });
    params.erase(std::unique(params.begin(), params.end(),
                             [](const Rational& x, const Rational& y) {
                               return compare(x, y) == 0;
                             }),
                 params.end());

    // Sample visibility at every candidate param and every cell midpoint.
    std::vector<std::pair<Rational, bool>> probe;
    for (size_t k = 0; k < params.size(); ++k) {
      probe.push_back({params[k], false});
      if (k + 1 < params.size()) {
        Rational mid((params[k].num * params[k + 1].den + params[k + 1].num * params[k].den),
                     2 * params[k].den * params[k + 1].den);
        probe.push_back({mid, false});
      }
    }
    for (auto& [s, vis] : probe)
      vis = segment_in_region_closed(p, region, v, chord_point(A, B, s));

    int first = -1, last = -1;
    for (int k = 0; k < int(probe.size()); ++k)
      if (probe[k].second) {
        if (first < 0) first = k;
        last = k;
      }
    ChordInterval iv;
    if (first >= 0) {
      for (int k = first; k <= last; ++k)
        if (!probe[k].second)
          throw internal_inconsistency("brute: chord visibility is not a single interval");
      // midpoint endpoints cannot happen: a visible cell has visible bounds
      if (first % 2 == 1 || last % 2 == 1)
        throw internal_inconsistency("visible cell with invisible boundary");
      iv.empty = false;
      iv.lo = probe[first].first;
      iv.hi = probe[last].first;
      auto grazes = [&](const Rational& s) {
        RationalPoint x = chord_point(A, B, s);
        for (int u : region.cycle) {
          if (u == v) continue;
          if (orientation_rat(V, p[u], x) != 0) continue;
          RationalPoint up{Rational(p[u].x, 1), Rational(p[u].y, 1)};
          if (up.x == x.x && up.y == x.y) continue;
          if (strictly_between_rat(V, x, p[u])) return true;
        }
        return false;
      };
      iv.lo_strict = grazes(iv.lo);
      iv.hi_strict = grazes(iv.hi);
    }
    out[v] = iv;
  }
  return out;
}

// ---------------------------------------------------------------------------
// LCA index
// ---------------------------------------------------------------------------

LcaIndex::LcaIndex(const DecompositionTree& tree) {
  const int n = tree.node_count();
  first_.assign(n, -1);
  std::vector<int> state(n, 0);
  // Iterative Euler tour: the node on top of the walk is appended on every
  // visit, once per child return.
  std::vector<int> walk{0};
  while (!walk.empty()) {
    int u = walk.back();
    if (first_[u] < 0) first_[u] = int(tour_.size());
    tour_.push_back(u);
    tour_depth_.push_back(tree.nodes[u].depth);
    int next = -1;
    if (state[u] == 0) {
      state[u] = 1;
      next = tree.nodes[u].left;
    }
    if (next < 0 && state[u] == 1) {
      state[u] = 2;
      next = tree.nodes[u].right;
    }
    if (next >= 0)
      walk.push_back(next);
    else
      walk.pop_back();
  }

  const int m = int(tour_.size());
  log2_.assign(m + 1, 0);
  for (int i = 2; i <= m; ++i) log2_[i] = log2_[i / 2] + 1;
  int levels = log2_[m] + 1;
  table_.assign(levels, std::vector<int>(m));
  for (int i = 0; i < m; ++i) table_[0][i] = i;
  for (int l = 1; l < levels; ++l)
    for (int i = 0; i + (1 << l) <= m; ++i) {
      int x = table_[l - 1][i], y = table_[l - 1][i + (1 << (l - 1))];
      table_[l][i] = tour_depth_[x] <= tour_depth_[y] ? x : y;
    }
}

int LcaIndex::lca(int u, int v) const {
  int a = first_[u], b = first_[v];
  if (a > b) std::swap(a, b);
  int l = log2_[b - a + 1];
  int x = table_[l][a], y = table_[l][b - (1 << l) + 1];
  return tour_[tour_depth_[x] <= tour_depth_[y] ? x : y];
}

// ---------------------------------------------------------------------------
// VisibilityIndex
// ---------------------------------------------------------------------------

VisibilityIndex VisibilityIndex::build(const Polygon& p) {
  return build(p, [](const Polygon& q) { return triangulate(q); });
}

VisibilityIndex VisibilityIndex::build(const Polygon& p, const Triangulator& tr) {
  VisibilityIndex idx;
  idx.poly_ = p;
  Triangulation t = tr(p);
  idx.tree_ = build_decomposition(t);
  const int n = p.size();
  idx.assoc_.assign(n, -1);
  idx.ivals_.assign(n, {});

  for (int id = 0; id < idx.tree_.node_count(); ++id) {
    const DecompNode& node = idx.tree_.nodes[id];
    if (node.is_leaf()) {
      const Triangle& leaf = t.triangles[node.triangle];
      for (int v : {leaf.a, leaf.b, leaf.c})
        if (idx.assoc_[v] < 0) idx.assoc_[v] = id;
      continue;
    }
    const IndexPair d = node.splitter;
    for (int child : {node.left, node.right}) {
      const Region& side = idx.tree_.nodes[child].region;
      std::map<int, ChordInterval> ivals;
      intervals_for_side(p, side, materialize(t, side), d, ivals);
      for (auto& [v, iv] : ivals) {
        if (idx.assoc_[v] >= 0) continue;  // already associated higher up
        if (int(idx.ivals_[v].size()) != node.depth)
          throw internal_inconsistency("interval depth bookkeeping");
        idx.ivals_[v].push_back(iv);
        ++idx.stored_;
      }
    }
    if (idx.assoc_[d.a] < 0) idx.assoc_[d.a] = id;
    if (idx.assoc_[d.b] < 0) idx.assoc_[d.b] = id;
  }

  idx.lca_ = LcaIndex(idx.tree_);
  stats::counters().stored_intervals = idx.stored_;
  return idx;
}

bool VisibilityIndex::visible(int v, int w) const {
  const int n = poly_.size();
  if (v < 0 || v >= n || w < 0 || w >= n)
    throw Error(Error::Kind::IndexOutOfRange, "IndexOutOfRange");
  if (v == w) throw Error(Error::Kind::SameVertex, "SameVertex");
  ++stats::counters().visibility_queries;

  if (poly_.adjacent(v, w)) return true;

  const int node_id = lca_.lca(assoc_[v], assoc_[w]);
  const DecompNode& node = tree_.nodes[node_id];
  if (node.is_leaf()) return true;

  const IndexPair d = node.splitter;
  const bool v_end = (v == d.a || v == d.b);
  const bool w_end = (w == d.a || w == d.b);
  if (v_end && w_end) return true;
  if (v_end || w_end) {
    const int end = v_end ? v : w;
    const int other = v_end ? w : v;
    const Rational s = (end == d.a) ? Rational(0, 1) : Rational(1, 1);
    return ivals_[other][node.depth].contains_visible(s);
  }

  // Both vertices proper: the segment must cross the splitter inside both
  // visible intervals.
  const Point A = poly_[d.a], B = poly_[d.b], V = poly_[v], W = poly_[w];
  stats::bump_orientation();
  i128 den = cross(W - V, B - A);
  if (den == 0) return false;  // parallel or collinear with the chord line
  stats::bump_orientation();
  Rational t(cross(A - V, B - A), den);
  if (compare(t, Rational(0, 1)) <= 0 || compare(t, Rational(1, 1)) >= 0) return false;
  stats::bump_orientation();
  Rational s(cross(A - V, W - V), den);
  int c0 = compare(s, Rational(0, 1));
  if (c0 <= 0) return false;  // misses the chord or passes through vertex a
  int c1 = compare(s, Rational(1, 1));
  if (c1 >= 0) return false;
  return ivals_[v][node.depth].contains_visible(s) &&
         ivals_[w][node.depth].contains_visible(s);
}

}  // namespace compatri
