#include "compatri/interval_dp.hpp"

#include <algorithm>
#include <random>

#include "compatri/oracles.hpp"

namespace compatri {

namespace {

int next_pow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Exact integer product of two S x S blocks of finalized 0/1 cells. Both
// kernels return the same matrix over Z; saturation happens only when the
// product is folded into the accumulators, so swapping kernels leaves every
// finalized bit identical.
void schoolbook_mul(const std::vector<i64>& lhs, const std::vector<i64>& rhs,
                    std::vector<i64>& dst, int S) {
  std::fill(dst.begin(), dst.end(), 0);
  for (int i = 0; i < S; ++i)
    for (int k = 0; k < S; ++k) {
      i64 l = lhs[size_t(i) * S + k];
      if (l == 0) continue;
      const i64* rrow = &rhs[size_t(k) * S];
      i64* drow = &dst[size_t(i) * S];
      for (int j = 0; j < S; ++j) drow[j] += l * rrow[j];
    }
}

void strassen_mul(const std::vector<i64>& lhs, const std::vector<i64>& rhs,
                  std::vector<i64>& dst, int S) {
  if (S <= 64) {
    schoolbook_mul(lhs, rhs, dst, S);
    return;
  }
  const int h = S / 2;
  auto quad = [&](const std::vector<i64>& src, int qi, int qj) {
    std::vector<i64> q(size_t(h) * h);
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j)
        q[size_t(i) * h + j] = src[size_t(i + qi * h) * S + (j + qj * h)];
    return q;
  };
  auto add = [&](std::vector<i64> a, const std::vector<i64>& b) {
    for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
  };
  auto sub = [&](std::vector<i64> a, const std::vector<i64>& b) {
    for (size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
  };
  auto a11 = quad(lhs, 0, 0), a12 = quad(lhs, 0, 1), a21 = quad(lhs, 1, 0),
       a22 = quad(lhs, 1, 1);
  auto b11 = quad(rhs, 0, 0), b12 = quad(rhs, 0, 1), b21 = quad(rhs, 1, 0),
       b22 = quad(rhs, 1, 1);

  std::vector<i64> m1(size_t(h) * h), m2 = m1, m3 = m1, m4 = m1, m5 = m1, m6 = m1,
      m7 = m1;
  strassen_mul(add(a11, a22), add(b11, b22), m1, h);
  strassen_mul(add(a21, a22), b11, m2, h);
  strassen_mul(a11, sub(b12, b22), m3, h);
  strassen_mul(a22, sub(b21, b11), m4, h);
  strassen_mul(add(a11, a12), b22, m5, h);
  strassen_mul(sub(a21, a11), add(b11, b12), m6, h);
  strassen_mul(sub(a12, a22), add(b21, b22), m7, h);

  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      size_t k = size_t(i) * h + j;
      dst[size_t(i) * S + j] = m1[k] + m4[k] - m5[k] + m7[k];
      dst[size_t(i) * S + (j + h)] = m3[k] + m5[k];
      dst[size_t(i + h) * S + j] = m2[k] + m4[k];
      dst[size_t(i + h) * S + (j + h)] = m1[k] - m2[k] + m3[k] + m6[k];
    }
}

struct DecisionPolicy {
  using Cell = std::uint8_t;
  static constexpr Cell kCap = 2;

  MulKernel kernel = MulKernel::Schoolbook;

  static void fold(Cell& c, i64 prod) {
    c = Cell(std::min<i64>(c + std::min<i64>(prod, kCap), kCap));
  }
  static void finalize(Cell& c, bool real_boundary, bool adjacent) {
    if (real_boundary)
      c = 1;
    else
      c = (adjacent && c > 0) ? 1 : 0;
  }
  static bool expected_matches(const Cell& c, const BigInt& sum) {
    BigInt capped = sum > kCap ? BigInt(kCap) : sum;
    return capped == c;
  }
  void multiply(const std::vector<i64>& lhs, const std::vector<i64>& rhs,
                std::vector<i64>& dst, int S) const {
    if (kernel == MulKernel::Strassen)
      strassen_mul(lhs, rhs, dst, S);
    else
      schoolbook_mul(lhs, rhs, dst, S);
  }
};

struct CountingPolicy {
  using Cell = BigInt;

  static void fold(Cell& c, const Cell& prod) { c += prod; }
  static void finalize(Cell& c, bool real_boundary, bool adjacent) {
    if (real_boundary)
      c = 1;
    else if (!adjacent)
      c = 0;  // otherwise keep the accumulated integer intact
  }
  static bool expected_matches(const Cell& c, const BigInt& sum) { return c == sum; }
};

template <class Policy>
struct BlockDp {
  using Cell = typename Policy::Cell;

  const AdjacencyMatrix& A;
  Policy policy;
  int n, padded;
  std::vector<Cell> cells;
  std::vector<std::uint8_t> finalized;
  std::uint64_t finalization_count = 0;
  std::uint64_t block_update_count = 0;
  bool audit = false;
  std::mt19937_64 rng;

  BlockDp(const AdjacencyMatrix& a, Policy pol, bool aud, std::uint64_t seed)
      : A(a),
        policy(pol),
        n(a.size()),
        padded(next_pow2(a.size())),
        cells(size_t(padded) * padded, Cell(0)),
        finalized(size_t(padded) * padded, 0),
        audit(aud),
        rng(seed) {}

  Cell& at(int i, int j) { return cells[size_t(i) * padded + j]; }

  bool adjacency(int i, int j) const {
    if (i >= n || j >= n || i == j) return false;
    return A.at(i, j);
  }

  void run() {
    compute_block(padded, 0, 0);
    std::uint64_t expect = std::uint64_t(padded) * (padded + 1) / 2;
    if (finalization_count != expect)
      throw internal_inconsistency("finalization count mismatch");
  }

  void compute_block(int S, int u, int v) {
    if (audit) audit_precondition(S, u, v);
    if (S == 1) {
      if (finalized[size_t(u) * padded + v])
        throw internal_inconsistency("cell finalized twice");
      finalized[size_t(u) * padded + v] = 1;
      ++finalization_count;
      ++stats::counters().finalizations;
      bool real_boundary = (v == u + 1) && (v < n);
      Policy::finalize(at(u, v), real_boundary, adjacency(u, v));
      return;
    }
    const int h = S / 2;
    if (u < v) {
      compute_block(h, 2 * u + 1, 2 * v);                                    // alpha
      block_update(h, 2 * u + 1, 2 * v + 1, 2 * v);                          // beta
      compute_block(h, 2 * u + 1, 2 * v + 1);
      block_update(h, 2 * u, 2 * v, 2 * u + 1);                              // gamma
      compute_block(h, 2 * u, 2 * v);
      block_update(h, 2 * u, 2 * v + 1, 2 * u + 1);                          // delta
      block_update(h, 2 * u, 2 * v + 1, 2 * v);
      compute_block(h, 2 * u, 2 * v + 1);
    } else {
      // diagonal case: the submatrix below the diagonal does not exist
      compute_block(h, 2 * u + 1, 2 * u + 1);  // beta
      compute_block(h, 2 * u, 2 * u);          // gamma
      compute_block(h, 2 * u, 2 * u + 1);      // delta
    }
  }

  void block_update(int S, int u, int v, int w) {
    if (!(u < w && w < v))
      throw Error(Error::Kind::InvalidTriple, "InvalidTriple");
    ++block_update_count;
    ++stats::counters().block_updates;
    if (audit) {
      check_block_finalized(S, u, w);
      check_block_finalized(S, w, v);
    }
    if constexpr (std::is_same_v<Cell, std::uint8_t>) {
      std::vector<i64> lhs(size_t(S) * S), rhs(size_t(S) * S), dst(size_t(S) * S);
      for (int i = 0; i < S; ++i)
        for (int j = 0; j < S; ++j) {
          lhs[size_t(i) * S + j] = at(u * S + i, w * S + j);
          rhs[size_t(i) * S + j] = at(w * S + i, v * S + j);
        }
      policy.multiply(lhs, rhs, dst, S);
      for (int i = 0; i < S; ++i)
        for (int j = 0; j < S; ++j)
          Policy::fold(at(u * S + i, v * S + j), dst[size_t(i) * S + j]);
    } else {
      // counting: schoolbook directly over the big integers
      for (int i = 0; i < S; ++i)
        for (int k = 0; k < S; ++k) {
          const Cell& l = at(u * S + i, w * S + k);
          if (l == 0) continue;
          for (int j = 0; j < S; ++j) {
            const Cell& r = at(w * S + k, v * S + j);
            if (r == 0) continue;
            Policy::fold(at(u * S + i, v * S + j), l * r);
          }
        }
    }
  }

  void check_block_finalized(int S, int u, int v) {
    for (int i = u * S; i < (u + 1) * S; ++i)
      for (int j = v * S; j < (v + 1) * S; ++j)
        if (!finalized[size_t(i) * padded + j])
          throw internal_inconsistency("block-update reads unfinalized source");
  }

  // Precondition 1 spot check: the accumulator of a sampled cell must equal
  // the partial sum over exactly the k whose S-block lies strictly between
  // the blocks of i and j.
  void audit_precondition(int S, int u, int v) {
    std::uniform_int_distribution<int> pick(0, S - 1);
    const int samples = std::min(8, S * S);
    for (int r = 0; r < samples; ++r) {
      int i = u * S + pick(rng), j = v * S + pick(rng);
      if (finalized[size_t(i) * padded + j]) continue;
      BigInt sum = 0;
      for (int k = 0; k < padded; ++k) {
        if (k / S <= i / S || k / S >= j / S) continue;
        if (!finalized[size_t(i) * padded + k] || !finalized[size_t(k) * padded + j])
          throw internal_inconsistency("audit reads unfinalized cell");
        if constexpr (std::is_same_v<Cell, std::uint8_t>) {
          sum += int(at(i, k)) * int(at(k, j));
        } else {
          sum += at(i, k) * at(k, j);
        }
      }
      if (!Policy::expected_matches(at(i, j), sum))
        throw internal_inconsistency("precondition 1 violated");
    }
  }
};

}  // namespace

DecisionDp run_decision_dp(const AdjacencyMatrix& a, MulKernel kernel, bool audit,
                           std::uint64_t audit_seed) {
  if (a.size() < 3) throw Error(Error::Kind::TooFewVertices, "TooFewVertices");
  a.require_boundary();
  BlockDp<DecisionPolicy> dp(a, DecisionPolicy{kernel}, audit, audit_seed);
  dp.run();
  DecisionDp out;
  out.n = dp.n;
  out.padded = dp.padded;
  out.cells = std::move(dp.cells);
  out.finalizations = dp.finalization_count;
  out.block_updates = dp.block_update_count;
  return out;
}

CountingDp run_counting_dp(const AdjacencyMatrix& a, bool audit, std::uint64_t audit_seed) {
  if (a.size() < 3) throw Error(Error::Kind::TooFewVertices, "TooFewVertices");
  a.require_boundary();
  BlockDp<CountingPolicy> dp(a, CountingPolicy{}, audit, audit_seed);
  dp.run();
  CountingDp out;
  out.n = dp.n;
  out.padded = dp.padded;
  out.cells = std::move(dp.cells);
  out.finalizations = dp.finalization_count;
  return out;
}

bool triangulation_exists(const AdjacencyMatrix& a, MulKernel kernel) {
  DecisionDp dp = run_decision_dp(a, kernel);
  return dp.bit(0, a.size() - 1);
}

std::optional<std::vector<IndexPair>> extract_triangulation(const DecisionDp& dp,
                                                            const AdjacencyMatrix& a) {
  const int n = dp.n;
  if (!dp.bit(0, n - 1)) return std::nullopt;

  std::vector<IndexPair> diags;
  std::vector<std::pair<int, int>> stack{{0, n - 1}};
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    if (j <= i + 1) continue;
    int split = -1;
    for (int k = i + 1; k < j; ++k)
      if (dp.bit(i, k) && dp.bit(k, j)) {
        split = k;
        break;
      }
    if (split < 0)
      throw internal_inconsistency("no split vertex despite b(i,j)=1");
    for (IndexPair d : {IndexPair{i, split}, IndexPair{split, j}}) {
      if (d.b == d.a + 1 || (d.a == 0 && d.b == n - 1)) continue;
      if (!a.at(d.a, d.b))
        throw internal_inconsistency("extracted diagonal missing from adjacency");
      diags.push_back(d);
    }
    stack.push_back({i, split});
    stack.push_back({split, j});
  }
  std::sort(diags.begin(), diags.end());
  if (int(diags.size()) != n - 3) throw internal_inconsistency("extracted diagonal count");
  return diags;
}

BigInt count_triangulations(const AdjacencyMatrix& a) {
  CountingDp dp = run_counting_dp(a);
  return dp.value(0, a.size() - 1);
}

std::optional<std::vector<IndexPair>> compatible_fixed_correspondence(const Polygon& p,
                                                                      const Polygon& q,
                                                                      MulKernel kernel) {
  if (p.size() != q.size()) throw Error(Error::Kind::SizeMismatch, "SizeMismatch");
  AdjacencyMatrix gp = oracles::visibility_graph(p);
  AdjacencyMatrix gq = oracles::visibility_graph(q);
  const int n = p.size();
  AdjacencyMatrix common(n);
  for (int i = 0; i < n; ++i) {
    common.set(i, (i + 1) % n);
    for (int j = i + 2; j < n; ++j)
      if (gp.at(i, j) && gq.at(i, j)) common.set(i, j);
  }
  DecisionDp dp = run_decision_dp(common, kernel);
  auto diags = extract_triangulation(dp, common);
  if (!diags) return std::nullopt;
  for (const IndexPair& d : *diags)
    if (!is_diagonal(p, d) || !is_diagonal(q, d))
      throw internal_inconsistency("compatible diagonal fails on an input polygon");
  return diags;
}

ReductionGadget build_reduction_graph(const BoolMatrix& m1, const BoolMatrix& m2) {
  const int m = int(m1.size());
  if (m < 1 || int(m2.size()) != m)
    throw Error(Error::Kind::SizeMismatch, "SizeMismatch");
  for (const auto& row : m1)
    if (int(row.size()) != m) throw Error(Error::Kind::SizeMismatch, "SizeMismatch");
  for (const auto& row : m2)
    if (int(row.size()) != m) throw Error(Error::Kind::SizeMismatch, "SizeMismatch");

  ReductionGadget g;
  g.m = m;
  g.graph = AdjacencyMatrix::polygon_cycle(3 * m + 4);
  auto set = [&](int i, int j) { g.graph.set(i, j); };  // idempotent on edges
  for (int i = 1; i <= m; ++i)
    for (int k = 1; k <= m; ++k)
      if (m1[i - 1][k - 1]) set(g.x(i), g.y(k));
  for (int k = 1; k <= m; ++k)
    for (int j = 1; j <= m; ++j)
      if (m2[k - 1][j - 1]) set(g.y(k), g.z(j));
  for (int i = 1; i <= m; ++i) {
    set(g.s(), g.x(i));
    set(g.x(i), g.u());
    for (int j = 1; j <= m; ++j) set(g.x(i), g.z(j));
  }
  for (int k = 1; k <= m; ++k) {
    set(g.u(), g.y(k));
    set(g.y(k), g.w());
  }
  for (int j = 1; j <= m; ++j) {
    set(g.s(), g.z(j));
    set(g.w(), g.z(j));
    set(g.z(j), g.t());
  }
  return g;
}

}  // namespace compatri
