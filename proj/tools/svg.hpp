#pragma once

#include <string>
#include <vector>

#include "compatri/geometry.hpp"

namespace compatri::svgout {

// Deterministic SVG: polygon outline, diagonals, vertex index labels. Pure
// function of its inputs, byte-stable across runs.
std::string render(const Polygon& p, const std::vector<IndexPair>& diagonals);

// Two polygons side by side sharing one diagonal set (compatible
// triangulation figure).
std::string render_pair(const Polygon& p, const Polygon& q,
                        const std::vector<IndexPair>& diagonals);

}  // namespace compatri::svgout
