#include "compatri/oracles.hpp"

namespace compatri::oracles {

AdjacencyMatrix visibility_graph(const Polygon& p) {
  const int n = p.size();
  AdjacencyMatrix g(n);
  for (int i = 0; i < n; ++i) {
    g.set(i, (i + 1) % n);
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (is_diagonal(p, IndexPair{i, j})) g.set(i, j);
    }
  }
  return g;
}

std::vector<int> naive_rotation_set(const Triangulation& t, const Polygon& q) {
  const int n = t.polygon.size();
  if (n != q.size()) throw Error(Error::Kind::SizeMismatch, "SizeMismatch");
  std::vector<int> out;
  for (int s = 0; s < n; ++s) {
    bool ok = true;
    for (const IndexPair& d : t.diagonals) {
      if (!is_diagonal(q, IndexPair::of((d.a + s) % n, (d.b + s) % n))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

std::vector<std::vector<uint8_t>> cubic_dp(const AdjacencyMatrix& a) {
  const int n = a.size();
  a.require_boundary();
  std::vector<std::vector<uint8_t>> b(n, std::vector<uint8_t>(n, 0));
  for (int i = 0; i + 1 < n; ++i) b[i][i + 1] = 1;
  for (int len = 2; len < n; ++len)
    for (int i = 0; i + len < n; ++i) {
      int j = i + len;
      if (!a.at(i, j)) continue;
      for (int k = i + 1; k < j; ++k)
        if (b[i][k] && b[k][j]) {
          b[i][j] = 1;
          break;
        }
    }
  return b;
}

namespace {

BigInt count_rec(const AdjacencyMatrix& a, int i, int j,
                 std::vector<std::vector<BigInt>>& memo,
                 std::vector<std::vector<uint8_t>>& seen) {
  if (j == i + 1) return 1;
  if (seen[i][j]) return memo[i][j];
  seen[i][j] = 1;
  BigInt total = 0;
  for (int k = i + 1; k < j; ++k)
    if (a.at(i, k) && a.at(k, j))
      total += count_rec(a, i, k, memo, seen) * count_rec(a, k, j, memo, seen);
  memo[i][j] = total;
  return total;
}

}  // namespace

BigInt recursive_count(const AdjacencyMatrix& a) {
  const int n = a.size();
  a.require_boundary();
  std::vector<std::vector<BigInt>> memo(n, std::vector<BigInt>(n, 0));
  std::vector<std::vector<uint8_t>> seen(n, std::vector<uint8_t>(n, 0));
  return count_rec(a, 0, n - 1, memo, seen);
}

}  // namespace compatri::oracles
