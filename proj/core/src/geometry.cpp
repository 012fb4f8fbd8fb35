#include "compatri/geometry.hpp"

#include <algorithm>

namespace compatri {

std::string to_string_i128(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  u128 m = neg ? u128(0) - u128(v) : u128(v);
  std::string s;
  while (m != 0) {
    s.push_back(char('0' + int(m % 10)));
    m /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

std::string to_string(const Rational& r) {
  if (r.den == 1) return to_string_i128(r.num);
  return to_string_i128(r.num) + "/" + to_string_i128(r.den);
}

bool on_segment(const Point& a, const Point& b, const Point& c) {
  if (orientation(a, b, c) != 0) return false;
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

SegmentRelation classify_segments(const Point& p, const Point& q, const Point& r,
                                  const Point& s) {
  int d1 = orientation(p, q, r);
  int d2 = orientation(p, q, s);
  int d3 = orientation(r, s, p);
  int d4 = orientation(r, s, q);

  if (d1 * d2 < 0 && d3 * d4 < 0) return SegmentRelation::ProperCrossing;

  if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
    // All collinear; compare 1-d projections on the dominant axis.
    auto key = [&](const Point& a) -> i64 {
      return (p.x != q.x || r.x != s.x) ? a.x : a.y;
    };
    i64 plo = std::min(key(p), key(q)), phi = std::max(key(p), key(q));
    i64 rlo = std::min(key(r), key(s)), rhi = std::max(key(r), key(s));
    i64 lo = std::max(plo, rlo), hi = std::min(phi, rhi);
    if (lo > hi) return SegmentRelation::Disjoint;
    if (lo == hi) return SegmentRelation::EndpointTouch;
    return SegmentRelation::CollinearOverlap;
  }

  if ((d1 == 0 && on_segment(p, q, r)) || (d2 == 0 && on_segment(p, q, s)) ||
      (d3 == 0 && on_segment(r, s, p)) || (d4 == 0 && on_segment(r, s, q)))
    return SegmentRelation::EndpointTouch;

  return SegmentRelation::Disjoint;
}

bool is_reflex(const Polygon& p, int i) {
  int o = orientation(p[i - 1], p[i], p[i + 1]);
  if (o == 0) throw collinear_vertex(p.wrap(i));
  return o < 0;
}

int reflex_count(const Polygon& p) {
  int r = 0;
  for (int i = 0; i < p.size(); ++i) r += is_reflex(p, i) ? 1 : 0;
  return r;
}

namespace {

// Does the segment from vertex i towards b start inside the interior cone at
// i? Classic two-case test; straight corners are banned by validation.
bool in_cone(const Polygon& p, int i, const Point& b) {
  const Point& a0 = p[i - 1];
  const Point& a = p[i];
  const Point& a1 = p[i + 1];
  if (orientation(a0, a, a1) > 0)  // convex corner
    return orientation(a, b, a0) > 0 && orientation(b, a, a1) > 0;
  // reflex corner
  return !(orientation(a, b, a1) >= 0 && orientation(b, a, a0) >= 0);
}

}  // namespace

bool is_diagonal(const Polygon& p, IndexPair d) {
  int i = p.wrap(d.a), j = p.wrap(d.b);
  if (i == j) throw Error(Error::Kind::SameVertex, "SameVertex");
  if (p.adjacent(i, j)) throw Error(Error::Kind::AdjacentPair, "AdjacentPair");

  if (!in_cone(p, i, p[j]) || !in_cone(p, j, p[i])) return false;

  // Any contact with a non-incident edge disqualifies the segment: proper
  // crossings, collinear overlaps, and vertices lying in its open interior
  // (those show up as endpoint touches of the incident edges).
  int n = p.size();
  for (int k = 0; k < n; ++k) {
    int k1 = p.next(k);
    if (k == i || k == j || k1 == i || k1 == j) continue;
    if (classify_segments(p[i], p[j], p[k], p[k1]) != SegmentRelation::Disjoint)
      return false;
  }
  return true;
}

RayHit ray_shoot(const Polygon& p, int origin, Point direction) {
  if (direction.x == 0 && direction.y == 0)
    throw Error(Error::Kind::InternalInconsistency, "ray_shoot: zero direction");
  const Point A = p[origin];
  const int n = p.size();

  bool found = false;
  Rational best_t;
  int best_edge = -1;
  Rational best_s;

  auto consider = [&](const Rational& t, int edge, const Rational& s) {
    if (!(t > Rational(0, 1))) return;
    if (!found || t < best_t) {
      found = true;
      best_t = t;
      best_edge = edge;
      best_s = s;
    }
  };

  for (int k = 0; k < n; ++k) {
    int k1 = p.next(k);
    if (k == p.wrap(origin) || k1 == p.wrap(origin)) continue;
    const Point C = p[k];
    const Point D = p[k1];
    const Point E = D - C;
    i128 denom = cross(direction, E);
    i128 diffE = cross(C - A, E);
    if (denom == 0) {
      // Parallel; only collinear edges can be hit, at their nearer endpoint.
      if (cross(C - A, direction) != 0) continue;
      i128 dd = i128(direction.x) * direction.x + i128(direction.y) * direction.y;
      i128 tc = i128(C.x - A.x) * direction.x + i128(C.y - A.y) * direction.y;
      i128 td = i128(D.x - A.x) * direction.x + i128(D.y - A.y) * direction.y;
      consider(Rational(tc, dd), k, Rational(0, 1));
      consider(Rational(td, dd), k, Rational(1, 1));
      continue;
    }
    Rational t(diffE, denom);
    Rational s(cross(C - A, direction), denom);
    if (s >= Rational(0, 1) && s <= Rational(1, 1)) consider(t, k, s);
  }

  if (!found) throw Error(Error::Kind::NoHit, "NoHit: interior ray missed the boundary");

  RayHit hit;
  hit.edge = best_edge;
  hit.point.x = Rational(i128(A.x) * best_t.den + best_t.num * direction.x, best_t.den);
  hit.point.y = Rational(i128(A.y) * best_t.den + best_t.num * direction.y, best_t.den);
  if (best_s == Rational(0, 1)) {
    hit.at_vertex = true;
    hit.vertex = best_edge;
  } else if (best_s == Rational(1, 1)) {
    hit.at_vertex = true;
    hit.vertex = p.next(best_edge);
  }
  return hit;
}

}  // namespace compatri
