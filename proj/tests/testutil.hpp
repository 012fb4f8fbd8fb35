#pragma once

#include <initializer_list>
#include <vector>

#include "compatri/generate.hpp"
#include "compatri/geometry.hpp"

namespace testutil {

using namespace compatri;

inline Polygon poly(std::initializer_list<std::pair<i64, i64>> pts) {
  std::vector<Point> v;
  for (auto [x, y] : pts) v.push_back(Point{x, y});
  return Polygon::validate(v);
}

inline Polygon unit_square() { return poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

// Concave hexagon used throughout: reflex at vertex 3 = (1,1).
inline Polygon l_hexagon() {
  return poly({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}

// Quadrilateral with one reflex vertex (index 2).
inline Polygon dart() { return poly({{0, 0}, {4, 0}, {1, 1}, {0, 4}}); }

// Same point set as l_hexagon but the numbering rotated by `shift`:
// new vertex 0 is old vertex `shift`.
inline Polygon rotated_l_hexagon(int shift) {
  auto base = l_hexagon();
  std::vector<Point> v;
  for (int i = 0; i < base.size(); ++i) v.push_back(base[i + shift]);
  return Polygon::validate(v);
}

inline Polygon random_polygon(int n, std::uint64_t seed, i64 range = i64(1) << 20) {
  GenerateOptions opt;
  opt.n = n;
  opt.seed = seed;
  opt.coordinate_range = range;
  return generate_polygon(opt);
}

inline Polygon random_reflex_heavy(int n, std::uint64_t seed) {
  GenerateOptions opt;
  opt.n = n;
  opt.seed = seed;
  opt.reflex_fraction = 0.45;
  return generate_polygon(opt);
}

}  // namespace testutil
