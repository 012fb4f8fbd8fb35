#pragma once

#include "compatri/interval_dp.hpp"
#include "compatri/triangulate.hpp"

// Brute-force reference implementations. Deliberately simple and slow; they
// share nothing with the fast paths except the geometry predicates, and the
// CLI exposes them behind --oracle for differential runs.
namespace compatri::oracles {

// Entry (i,j) true iff edge or diagonal; O(n^3) overall.
AdjacencyMatrix visibility_graph(const Polygon& p);

// All rotations s such that every diagonal of T maps to a diagonal of Q.
std::vector<int> naive_rotation_set(const Triangulation& t, const Polygon& q);

// The interval recursion computed sequentially by increasing length.
std::vector<std::vector<uint8_t>> cubic_dp(const AdjacencyMatrix& a);

// Memoized interval recursion counting the triangulations exactly.
BigInt recursive_count(const AdjacencyMatrix& a);

}  // namespace compatri::oracles
