#pragma once

#include <cstdint>
#include <optional>

#include "compatri/geometry.hpp"

namespace compatri {

struct GenerateOptions {
  int n = 0;
  std::uint64_t seed = 1;
  // Aim for roughly this share of reflex vertices; the generator retries a
  // few sub-seeds and keeps the closest candidate. Not guaranteed exact.
  std::optional<double> reflex_fraction;
  i64 coordinate_range = i64(1) << 20;
};

// Random simple polygon: random point set, random order, 2-opt uncrossing
// until simple, full re-validation. Deterministic per seed.
Polygon generate_polygon(const GenerateOptions& opt);

// Random convex polygon with exact integer coordinates (sorted edge-vector
// construction); used by tests that need convex instances.
Polygon generate_convex_polygon(int n, std::uint64_t seed, i64 range = i64(1) << 20);

}  // namespace compatri
