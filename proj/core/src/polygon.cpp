#include <algorithm>
#include <numeric>

#include "compatri/geometry.hpp"

namespace compatri {

Polygon Polygon::validate(std::vector<Point> pts) {
  const int n = int(pts.size());
  if (n < 3) throw Error(Error::Kind::TooFewVertices, "TooFewVertices");

  for (const Point& p : pts) {
    if (p.x < -kCoordinateBound || p.x > kCoordinateBound || p.y < -kCoordinateBound ||
        p.y > kCoordinateBound)
      throw Error(Error::Kind::CoordinateOutOfRange, "CoordinateOutOfRange");
  }

  {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return pts[a].x != pts[b].x ? pts[a].x < pts[b].x : pts[a].y < pts[b].y;
    });
    for (int k = 0; k + 1 < n; ++k)
      if (pts[idx[k]] == pts[idx[k + 1]])
        throw duplicate_vertex(std::min(idx[k], idx[k + 1]), std::max(idx[k], idx[k + 1]));
  }

  i128 area2 = 0;
  for (int i = 0; i < n; ++i) {
    const Point& a = pts[i];
    const Point& b = pts[(i + 1) % n];
    area2 += i128(a.x) * b.y - i128(a.y) * b.x;
  }

  Polygon poly;
  poly.reversed_ = area2 < 0;
  if (poly.reversed_) std::reverse(pts.begin() + 1, pts.end());
  poly.verts_ = std::move(pts);

  auto& v = poly.verts_;
  auto at = [&](int i) -> const Point& { return v[((i % n) + n) % n]; };

  for (int i = 0; i < n; ++i)
    if (orientation(at(i - 1), at(i), at(i + 1)) == 0) throw degenerate_spike(i);

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (classify_segments(at(i), at(i + 1), at(j), at(j + 1)) !=
          SegmentRelation::Disjoint)
        throw not_simple(i, j);
    }
  }

  return poly;
}

}  // namespace compatri
