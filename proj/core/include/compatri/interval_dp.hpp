#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "compatri/geometry.hpp"

namespace compatri {

using BigInt = boost::multiprecision::cpp_int;

// Symmetric boolean adjacency over the vertices of a convex n-gon, zero
// diagonal. Boundary edges (i,i+1) and (0,n-1) must be present before any DP
// runs; require_boundary reports the first missing one.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(int n) : n_(n), bits_(size_t(n) * n, 0) {}

  static AdjacencyMatrix polygon_cycle(int n) {
    AdjacencyMatrix a(n);
    for (int i = 0; i < n; ++i) a.set(i, (i + 1) % n);
    return a;
  }

  int size() const { return n_; }
  bool at(int i, int j) const { return bits_[size_t(i) * n_ + j] != 0; }
  void set(int i, int j, bool v = true) {
    if (i == j) throw Error(Error::Kind::SameVertex, "SameVertex");
    bits_[size_t(i) * n_ + j] = v ? 1 : 0;
    bits_[size_t(j) * n_ + i] = v ? 1 : 0;
  }
  void require_boundary() const {
    for (int i = 0; i < n_; ++i)
      if (!at(i, (i + 1) % n_)) throw missing_boundary_edge(i);
  }

 private:
  int n_;
  std::vector<uint8_t> bits_;
};

enum class MulKernel { Schoolbook, Strassen };

// Finalized decision matrix of the block-recursive DP, kept on the padded
// power-of-two grid. bit(i,j) is 0 outside the strict upper triangle.
struct DecisionDp {
  int n = 0;
  int padded = 0;
  std::vector<uint8_t> cells;
  std::uint64_t finalizations = 0;
  std::uint64_t block_updates = 0;

  bool bit(int i, int j) const {
    if (i < 0 || j < 0 || i >= padded || j >= padded || j <= i) return false;
    return cells[size_t(i) * padded + j] != 0;
  }
};

struct CountingDp {
  int n = 0;
  int padded = 0;
  std::vector<BigInt> cells;
  std::uint64_t finalizations = 0;

  const BigInt& value(int i, int j) const { return cells[size_t(i) * padded + j]; }
};

// Runs ComputeBlock(padded, 0, 0) with saturating integer accumulators.
// `audit` re-derives the partial-sum precondition for up to 8 random cells at
// every block entry and aborts on mismatch (slow; tests only).
DecisionDp run_decision_dp(const AdjacencyMatrix& a, MulKernel kernel = MulKernel::Schoolbook,
                           bool audit = false, std::uint64_t audit_seed = 1);

CountingDp run_counting_dp(const AdjacencyMatrix& a, bool audit = false,
                           std::uint64_t audit_seed = 1);

// Does the graph contain a triangulation of the convex polygon?
bool triangulation_exists(const AdjacencyMatrix& a,
                          MulKernel kernel = MulKernel::Schoolbook);

// Smallest-k recursive descent over a finalized decision matrix; Absent when
// b(0,n-1) = 0. The returned n-3 pairs exclude boundary edges.
std::optional<std::vector<IndexPair>> extract_triangulation(const DecisionDp& dp,
                                                            const AdjacencyMatrix& a);

// Number of triangulations of the convex polygon using only edges of the
// graph; exact arbitrary-precision count (can reach ~4^n).
BigInt count_triangulations(const AdjacencyMatrix& a);

// Theorem-4 pipeline: AND of the two visibility graphs, decision DP,
// extraction. A returned diagonal set triangulates both polygons (asserted).
std::optional<std::vector<IndexPair>> compatible_fixed_correspondence(
    const Polygon& p, const Polygon& q, MulKernel kernel = MulKernel::Schoolbook);

// Lemma-5 gadget: cycle s, x_1..x_m, u, y_1..y_m, w, z_1..z_m, t with the ten
// diagonal families; the DP cell for the chain x_i..z_j equals the Boolean
// product (M N)_{ij}.
using BoolMatrix = std::vector<std::vector<uint8_t>>;

struct ReductionGadget {
  int m = 0;
  AdjacencyMatrix graph{1};

  int s() const { return 0; }
  int x(int i) const { return i; }              // 1-based
  int u() const { return m + 1; }
  int y(int k) const { return m + 1 + k; }      // 1-based
  int w() const { return 2 * m + 2; }
  int z(int j) const { return 2 * m + 2 + j; }  // 1-based
  int t() const { return 3 * m + 3; }
  IndexPair chain_cell(int i, int j) const { return IndexPair{x(i), z(j)}; }
};

ReductionGadget build_reduction_graph(const BoolMatrix& m1, const BoolMatrix& m2);

}  // namespace compatri
