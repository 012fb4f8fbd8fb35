#pragma once

#include <cstdint>
#include <vector>

#include "compatri/errors.hpp"
#include "compatri/exact.hpp"

namespace compatri {

// Coordinates are capped so every 4-point predicate determinant fits 128-bit
// intermediates with room to spare.
inline constexpr i64 kCoordinateBound = i64(1) << 30;

struct Point {
  i64 x = 0;
  i64 y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

// Exact cross product (b-a) x (c-a); no overflow under the coordinate bound.
inline i128 cross(const Point& u, const Point& v) {
  return i128(u.x) * v.y - i128(u.y) * v.x;
}

// Sign of the turn a->b->c: +1 left, 0 collinear, -1 right. Instrumented.
inline int orientation(const Point& a, const Point& b, const Point& c) {
  stats::bump_orientation();
  return detail::sign_i128(cross(b - a, c - a));
}

enum class SegmentRelation { Disjoint, ProperCrossing, EndpointTouch, CollinearOverlap };

// Relation of the two closed segments pq and rs. Endpoints shared or lying on
// the other segment count as EndpointTouch; positive-length shared collinear
// parts count as CollinearOverlap.
SegmentRelation classify_segments(const Point& p, const Point& q, const Point& r,
                                  const Point& s);

inline bool segments_properly_intersect(const Point& p, const Point& q, const Point& r,
                                        const Point& s) {
  return classify_segments(p, q, r, s) == SegmentRelation::ProperCrossing;
}

// True iff c lies on the closed segment ab.
bool on_segment(const Point& a, const Point& b, const Point& c);

// Unordered pair of distinct vertex indices, stored with a <= b.
struct IndexPair {
  int a = 0;
  int b = 0;
  static IndexPair of(int i, int j) { return i < j ? IndexPair{i, j} : IndexPair{j, i}; }
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

// A validated simple polygon: CCW, no duplicate vertices, no vertex interior
// to an edge, no three consecutive collinear vertices. Construction is only
// possible through validate(), so every Polygon in the program is sound.
class Polygon {
 public:
  // Default-constructed polygons are empty placeholders; real instances come
  // out of validate(), which is the only way to obtain vertices.
  Polygon() = default;
  static Polygon validate(std::vector<Point> pts);

  int size() const { return int(verts_.size()); }
  // Index arithmetic is modulo n everywhere.
  const Point& operator[](int i) const { return verts_[wrap(i)]; }
  int wrap(int i) const {
    int n = size();
    int m = i % n;
    return m < 0 ? m + n : m;
  }
  int next(int i) const { return wrap(i + 1); }
  int prev(int i) const { return wrap(i - 1); }
  bool adjacent(int i, int j) const { return next(i) == wrap(j) || next(j) == wrap(i); }
  bool was_reversed() const { return reversed_; }
  const std::vector<Point>& vertices() const { return verts_; }

 private:
  std::vector<Point> verts_;
  bool reversed_ = false;
};

// Interior angle > 180 degrees. Throws CollinearVertex on a straight corner,
// which validate() makes unreachable.
bool is_reflex(const Polygon& p, int i);
int reflex_count(const Polygon& p);

// Reference visibility semantics for the whole project: the open segment
// P[i]P[j] lies strictly inside P, touching the boundary only at its
// endpoints. Throws AdjacentPair for neighbours; callers treat edges
// separately.
bool is_diagonal(const Polygon& p, IndexPair d);

struct RationalPoint {
  Rational x, y;
};

struct RayHit {
  int edge = -1;        // first boundary edge (edge, edge+1) hit by the ray
  RationalPoint point;  // exact intersection point
  bool at_vertex = false;
  int vertex = -1;  // set when the hit lands exactly on a vertex
};

// First boundary edge hit by the open ray from P[origin] along `direction`.
// The direction must point into the interior cone at the origin vertex; a
// valid polygon then guarantees a hit.
RayHit ray_shoot(const Polygon& p, int origin, Point direction);

}  // namespace compatri
