#include "compatri/rotation.hpp"

#include <algorithm>

namespace compatri {

bool wedge_contains(const Polygon& q, int i, int j) {
  return orientation(q[i - 1], q[i], q[j]) > 0 && orientation(q[i + 1], q[i], q[j]) < 0;
}

WedgeTable build_wedge_table(const Polygon& q) {
  const int n = q.size();
  WedgeTable table;
  table.n = n;
  table.entry_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!is_reflex(q, i)) continue;
    WedgeEntry e;
    e.vertex = i;
    e.hit_prev = ray_shoot(q, i, q[i] - q[i - 1]);
    e.hit_next = ray_shoot(q, i, q[i] - q[i + 1]);
    // sigma: first vertex past the incoming-extension crossing; a hit exactly
    // on a vertex leaves that vertex on the wedge boundary, so skip it.
    int sigma = e.hit_prev.at_vertex ? q.wrap(e.hit_prev.vertex + 1)
                                     : q.wrap(e.hit_prev.edge + 1);
    int tau = e.hit_next.at_vertex ? q.wrap(e.hit_next.vertex) : q.wrap(e.hit_next.edge + 1);
    e.sigma_hat = int((sigma - i + n) % n);
    e.tau_hat = int((tau - i + n) % n);
    if (e.sigma_hat < 2 || e.tau_hat > n - 1 || e.sigma_hat > e.tau_hat)
      throw internal_inconsistency("wedge window out of range");
    table.entry_of[i] = int(table.entries.size());
    table.entries.push_back(e);
  }
  return table;
}

namespace {

// Shared decision core once the fan neighbours of the window are known.
// pred_off = largest augmented fan offset < sigma_hat, succ_off = smallest
// augmented fan offset >= sigma_hat (offsets 1 and n-1 stand for the edges).
SatisfiesOutcome decide(int i, const WedgeEntry& w, int pred_off, int succ_off,
                        const Polygon& q, const VisibilityIndex& vis) {
  ++stats::counters().satisfies_dispatches;
  const int n = q.size();
  if (succ_off < w.tau_hat) {
    // A diagonal of T lands inside the wedge window; it is mandatory.
    int j = q.wrap(i + succ_off);
    return vis.visible(i, j) ? SatisfiesOutcome::Marked : SatisfiesOutcome::KillsRotation;
  }
  // No fan offset in the window: the fan triangle spanning it must exist in Q.
  auto side_ok = [&](int x, int y) {
    if (q.adjacent(x, y)) return true;
    return vis.visible(x, y);
  };
  int k = q.wrap(i + pred_off), j = q.wrap(i + succ_off);
  bool ok = side_ok(i, k) && side_ok(i, j) && side_ok(k, j);
  return ok ? SatisfiesOutcome::Marked : SatisfiesOutcome::NotMarked;
}

}  // namespace

SatisfiesOutcome satisfies(int s, int i, const DiagonalFans& fans, const WedgeTable& w,
                           const VisibilityIndex& vis) {
  const WedgeEntry* e = w.find(i);
  if (e == nullptr) throw internal_inconsistency("satisfies on a convex vertex");
  const Polygon& q = vis.polygon();
  const int n = q.size();
  const int m = ((i - s) % n + n) % n;
  const auto& f = fans.offsets[m];
  // Augmented fan: offsets 1 and n-1 are the polygon edges at the vertex.
  int pred = 1, succ = n - 1;
  auto it = std::lower_bound(f.begin(), f.end(), e->sigma_hat);
  if (it != f.begin()) pred = *std::prev(it);
  if (it != f.end()) succ = *it;
  return decide(i, *e, pred, succ, q, vis);
}

std::vector<IndexPair> RotationSearchResult::witness(const Triangulation& t, int s) {
  const int n = t.polygon.size();
  std::vector<IndexPair> out;
  out.reserve(t.diagonals.size());
  for (const IndexPair& d : t.diagonals)
    out.push_back(IndexPair::of((d.a + s) % n, (d.b + s) % n));
  std::sort(out.begin(), out.end());
  return out;
}

RotationSearchResult find_rotations(const Triangulation& t, const Polygon& q) {
  const Polygon& p = t.polygon;
  const int n = p.size();
  if (n != q.size()) throw Error(Error::Kind::SizeMismatch, "SizeMismatch");

  RotationSearchResult res;
  res.scoreboard.counter.assign(n, 0);
  res.scoreboard.dead.assign(n, 0);
  res.reflex_vertices = reflex_count(q);

  if (res.reflex_vertices == 0) {
    // Convex Q satisfies every rotation; no index is needed.
    res.rotations.resize(n);
    for (int s = 0; s < n; ++s) res.rotations[s] = s;
  } else {
    VisibilityIndex vis = VisibilityIndex::build(q);
    WedgeTable w = build_wedge_table(q);
    DiagonalFans fans = diagonal_fans(t);

    // Windows sorted by sigma_hat once; each vertex then merges its fan
    // against the sorted list in O(r + l_m).
    std::vector<int> order(w.entries.size());
    for (size_t k = 0; k < order.size(); ++k) order[k] = int(k);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return w.entries[x].sigma_hat < w.entries[y].sigma_hat;
    });

    for (int m = 0; m < n; ++m) {
      const auto& f = fans.offsets[m];
      int j = -1;  // index into f of the largest offset < sigma_hat
      for (int oi : order) {
        const WedgeEntry& e = w.entries[oi];
        while (j + 1 < int(f.size()) && f[j + 1] < e.sigma_hat) {
          ++j;
          ++stats::counters().merge_steps;
        }
        ++stats::counters().merge_steps;
        int pred = j >= 0 ? f[j] : 1;
        int succ = j + 1 < int(f.size()) ? f[j + 1] : n - 1;
        const int s = ((e.vertex - m) % n + n) % n;
        switch (decide(e.vertex, e, pred, succ, q, vis)) {
          case SatisfiesOutcome::Marked:
            ++res.scoreboard.counter[s];
            break;
          case SatisfiesOutcome::KillsRotation:
            res.scoreboard.dead[s] = 1;
            break;
          case SatisfiesOutcome::NotMarked:
            break;
        }
      }
    }
    for (int s = 0; s < n; ++s)
      if (!res.scoreboard.dead[s] && res.scoreboard.counter[s] == res.reflex_vertices)
        res.rotations.push_back(s);
  }

  // Every reported witness must be a genuine triangulation of Q.
  for (int s : res.rotations)
    for (const IndexPair& d : RotationSearchResult::witness(t, s))
      if (!is_diagonal(q, d))
        throw internal_inconsistency("witness diagonal fails on Q (rotation " +
                                     std::to_string(s) + ")");
  return res;
}

}  // namespace compatri
