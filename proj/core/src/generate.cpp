#include "compatri/generate.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace compatri {

namespace {

std::optional<Polygon> try_generate(int n, std::uint64_t seed, i64 range) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<i64> coord(-range, range);

  std::vector<Point> pts;
  std::set<std::pair<i64, i64>> used;
  while (int(pts.size()) < n) {
    Point p{coord(rng), coord(rng)};
    if (used.insert({p.x, p.y}).second) pts.push_back(p);
  }

  // 2-opt uncrossing: reversing the chain between two conflicting edges
  // strictly shortens the tour for proper crossings, so this terminates on
  // typical inputs; the cap catches degenerate contact patterns.
  const long cap = 40L * n * n + 1000;
  long iter = 0;
  bool dirty = true;
  while (dirty && iter < cap) {
    dirty = false;
    for (int i = 0; i < n && !dirty; ++i) {
      for (int j = i + 1; j < n && !dirty; ++j) {
        bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
        if (adjacent) continue;
        if (classify_segments(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n]) ==
            SegmentRelation::Disjoint)
          continue;
        std::reverse(pts.begin() + i + 1, pts.begin() + j + 1);
        dirty = true;
        ++iter;
      }
    }
  }
  if (iter >= cap) return std::nullopt;

  try {
    return Polygon::validate(pts);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

Polygon generate_polygon(const GenerateOptions& opt) {
  if (opt.n < 3) throw Error(Error::Kind::TooFewVertices, "TooFewVertices");

  std::optional<Polygon> best;
  double best_gap = 0.0;
  const int attempts = opt.reflex_fraction ? 8 : 64;
  for (int k = 0; k < 64; ++k) {
    auto cand = try_generate(opt.n, mix(opt.seed, k), opt.coordinate_range);
    if (!cand) continue;
    if (!opt.reflex_fraction) return *cand;
    double frac = double(reflex_count(*cand)) / opt.n;
    double gap = std::abs(frac - *opt.reflex_fraction);
    if (!best || gap < best_gap) {
      best = cand;
      best_gap = gap;
    }
    if (int(k) >= attempts && best) break;
  }
  if (!best) throw internal_inconsistency("polygon generator failed for this seed");
  return *best;
}

Polygon generate_convex_polygon(int n, std::uint64_t seed, i64 range) {
  if (n < 3) throw Error(Error::Kind::TooFewVertices, "TooFewVertices");
  for (int attempt = 0;; ++attempt) {
    if (attempt > 256) throw internal_inconsistency("convex generator failed");
    std::mt19937_64 rng(mix(seed, 7777 + attempt));
    std::uniform_int_distribution<i64> coord(-range, range);
    std::uniform_int_distribution<int> flip(0, 1);

    auto deltas = [&](std::vector<i64> vals) {
      std::sort(vals.begin(), vals.end());
      i64 lo = vals.front(), hi = vals.back();
      std::vector<i64> d;
      i64 a = lo, b = lo;
      for (int i = 1; i + 1 < n; ++i) {
        if (flip(rng)) {
          d.push_back(vals[i] - a);
          a = vals[i];
        } else {
          d.push_back(b - vals[i]);
          b = vals[i];
        }
      }
      d.push_back(hi - a);
      d.push_back(b - hi);
      return d;
    };
    std::vector<i64> xs(n), ys(n);
    for (auto& v : xs) v = coord(rng);
    for (auto& v : ys) v = coord(rng);
    std::vector<i64> dx = deltas(xs), dy = deltas(ys);
    std::shuffle(dy.begin(), dy.end(), rng);

    std::vector<Point> vecs(n);
    for (int i = 0; i < n; ++i) vecs[i] = {dx[i], dy[i]};
    auto half = [](const Point& v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; };
    std::sort(vecs.begin(), vecs.end(), [&](const Point& a, const Point& b) {
      if (half(a) != half(b)) return half(a) < half(b);
      return cross(a, b) > 0;
    });

    std::vector<Point> pts(n);
    Point cur{0, 0};
    for (int i = 0; i < n; ++i) {
      pts[i] = cur;
      cur = {cur.x + vecs[i].x, cur.y + vecs[i].y};
    }
    try {
      Polygon p = Polygon::validate(pts);
      if (reflex_count(p) == 0) return p;
    } catch (const Error&) {
    }
  }
}

}  // namespace compatri
