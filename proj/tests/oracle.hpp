#pragma once

// Brute-force reference computations for the tests. Nothing here touches the
// library's Graph, orientation or scanning code: graphs are plain edge lists
// and adjacency matrices, and every quantity is recomputed from definitions.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

inline auto degrees(int n, const EdgeList &edges) -> std::vector<std::int64_t> {
  std::vector<std::int64_t> d(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    ++d[static_cast<std::size_t>(u)];
    ++d[static_cast<std::size_t>(v)];
  }
  return d;
}

inline auto cm2(int n, const EdgeList &edges) -> std::int64_t {
  const auto d = degrees(n, edges);
  std::int64_t total = 0;
  for (auto [u, v] : edges)
    total += std::llabs(d[u] * d[u] - d[v] * d[v]);
  return total;
}

inline auto m2(int n, const EdgeList &edges) -> std::int64_t {
  const auto d = degrees(n, edges);
  std::int64_t total = 0;
  for (auto [u, v] : edges)
    total += d[u] * d[v];
  return total;
}

/// Signed arc sum with degrees counted over arcs and undirected edges alike.
inline auto arc_form(int n, const EdgeList &arcs, const EdgeList &undirected) -> std::int64_t {
  EdgeList all = arcs;
  all.insert(all.end(), undirected.begin(), undirected.end());
  const auto d = degrees(n, all);
  std::int64_t total = 0;
  for (auto [t, h] : arcs)
    total += d[t] * d[t] - d[h] * d[h];
  return total;
}

/// Edges of the mask in graph6 pair order (0,1),(0,2),(1,2),(0,3),...
inline auto decode(int n, std::uint64_t mask) -> EdgeList {
  EdgeList edges;
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1U)
        edges.emplace_back(i, j);
  return edges;
}

/// Is there a vertex set C, 1 <= |C| <= n-1, that is a clique, whose
/// complement is independent, and which is joined to every outside vertex?
/// Tries every subset.
inline auto is_complete_split(int n, const EdgeList &edges) -> bool {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges)
    adj[u][v] = adj[v][u] = true;
  for (std::uint32_t c = 1; c + 1 < (1U << n); ++c) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) {
        const bool cu = (c >> u) & 1U;
        const bool cv = (c >> v) & 1U;
        const bool want = cu || cv; // clique pair or cross pair
        ok = adj[u][v] == want;
      }
    if (ok)
      return true;
  }
  return false;
}

struct ScanResult {
  std::int64_t max = -1;
  std::vector<std::uint64_t> maximizers; // ascending masks
  std::uint64_t scanned = 0;
};

/// Plain ascending scan over all masks with full recomputation.
inline auto scan(int n) -> ScanResult {
  ScanResult r;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    ++r.scanned;
    const auto value = cm2(n, decode(n, mask));
    if (value > r.max) {
      r.max = value;
      r.maximizers.clear();
    }
    if (value == r.max)
      r.maximizers.push_back(mask);
  }
  return r;
}

inline auto closed_form_argmax(std::int64_t n) -> std::pair<std::int64_t, std::int64_t> {
  std::int64_t best_m = 0;
  std::int64_t best = -1;
  for (std::int64_t m = 1; m < n; ++m) {
    // count cross edges of K_m v co-K_{n-m} directly
    std::int64_t value = 0;
    for (std::int64_t a = 0; a < m; ++a)
      for (std::int64_t b = m; b < n; ++b)
        value += (n - 1) * (n - 1) - m * m;
    if (value > best) {
      best = value;
      best_m = m;
    }
  }
  return {best_m, best};
}

} // namespace oracle
