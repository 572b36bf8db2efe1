#pragma once

// Simple undirected graphs on dense vertex labels 0..n-1, stored as rows of
// bits, plus the handful of constructors the rest of the library needs.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cm2 {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Square matrix of bits, one row per vertex. Used for symmetric adjacency in
/// Graph and for the arc relation of a MixedGraph.
class BitMatrix {
public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), words_per_row_((n + 63) / 64), bits_(n * words_per_row_, 0) {}

  auto size() const -> std::size_t { return n_; }

  auto test(Vertex r, Vertex c) const -> bool {
    return (bits_[r * words_per_row_ + c / 64] >> (c % 64)) & 1U;
  }

  auto set(Vertex r, Vertex c, bool value) -> void {
    auto &word = bits_[r * words_per_row_ + c / 64];
    const auto bit = std::uint64_t{1} << (c % 64);
    if (value)
      word |= bit;
    else
      word &= ~bit;
  }

  auto row_count(Vertex r) const -> std::size_t {
    std::size_t total = 0;
    for (auto w : row(r))
      total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  auto row(Vertex r) const -> std::span<const std::uint64_t> {
    return {bits_.data() + r * words_per_row_, words_per_row_};
  }

  /// Calls f(c) for every set column of row r, in increasing order.
  template <typename F> auto for_each_in_row(Vertex r, F &&f) const -> void {
    const auto words = row(r);
    for (std::size_t k = 0; k < words.size(); ++k) {
      auto w = words[k];
      while (w != 0) {
        f(static_cast<Vertex>(k * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  friend auto operator==(const BitMatrix &, const BitMatrix &) -> bool = default;

private:
  std::size_t n_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Simple undirected labeled graph. Copies are independent values; the
/// mutating setter exists for builders and never touches other copies.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n), degrees_(n, 0) {}

  auto order() const -> std::size_t { return adjacency_.size(); }
  auto edge_count() const -> std::size_t { return edge_count_; }

  auto has_edge(Vertex u, Vertex v) const -> bool {
    check_vertex(u);
    check_vertex(v);
    return adjacency_.test(u, v);
  }

  auto degree(Vertex u) const -> std::size_t {
    check_vertex(u);
    return degrees_[u];
  }

  auto degrees() const -> std::span<const std::size_t> { return degrees_; }

  /// Inserts or removes {u,v}. Rejects self-loops and out-of-range labels.
  auto set_edge(Vertex u, Vertex v, bool present) -> void {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (adjacency_.test(u, v) == present)
      return;
    adjacency_.set(u, v, present);
    adjacency_.set(v, u, present);
    if (present) {
      ++degrees_[u];
      ++degrees_[v];
      ++edge_count_;
    } else {
      --degrees_[u];
      --degrees_[v];
      --edge_count_;
    }
  }

  template <typename F> auto for_each_neighbor(Vertex u, F &&f) const -> void {
    check_vertex(u);
    adjacency_.for_each_in_row(u, std::forward<F>(f));
  }

  auto neighbor_bits(Vertex u) const -> std::span<const std::uint64_t> {
    check_vertex(u);
    return adjacency_.row(u);
  }

  /// Edges as (u,v) with u < v, sorted lexicographically.
  auto edges() const -> std::vector<Edge> {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      adjacency_.for_each_in_row(u, [&](Vertex v) {
        if (u < v)
          out.emplace_back(u, v);
      });
    return out;
  }

  friend auto operator==(const Graph &a, const Graph &b) -> bool {
    return a.adjacency_ == b.adjacency_;
  }

private:
  auto check_vertex(Vertex u) const -> void {
    if (u >= order())
      throw std::out_of_range("vertex " + std::to_string(u) + " out of range for order " +
                              std::to_string(order()));
  }

  BitMatrix adjacency_;
  std::vector<std::size_t> degrees_;
  std::size_t edge_count_ = 0;
};

struct SplitWitness {
  std::size_t m = 0;
  std::vector<Vertex> clique_vertices;
  std::vector<Vertex> independent_vertices;
};

inline auto new_graph(std::size_t n) -> Graph { return Graph(n); }

inline auto with_edge(const Graph &g, Vertex u, Vertex v, bool present) -> Graph {
  Graph out = g;
  out.set_edge(u, v, present);
  return out;
}

inline auto degree(const Graph &g, Vertex u) -> std::size_t { return g.degree(u); }

inline auto complete_graph(std::size_t n) -> Graph {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u)
      g.set_edge(u, v, true);
  return g;
}

inline auto complement(const Graph &g) -> Graph {
  Graph out(g.order());
  for (Vertex v = 1; v < g.order(); ++v)
    for (Vertex u = 0; u < v; ++u)
      if (!g.has_edge(u, v))
        out.set_edge(u, v, true);
  return out;
}

/// Disjoint union of g and h (h relabeled to start at g.order()) plus every
/// cross edge.
inline auto join(const Graph &g, const Graph &h) -> Graph {
  const auto offset = g.order();
  Graph out(g.order() + h.order());
  for (const auto &[u, v] : g.edges())
    out.set_edge(u, v, true);
  for (const auto &[u, v] : h.edges())
    out.set_edge(u + offset, v + offset, true);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < h.order(); ++v)
      out.set_edge(u, v + offset, true);
  return out;
}

/// K_m ∨ K̄_{n-m}: vertices 0..m-1 form the clique.
inline auto complete_split(std::size_t m, std::size_t n) -> Graph {
  if (m < 1 || m + 1 > n)
    throw std::invalid_argument("complete_split needs 1 <= m <= n-1, got m=" + std::to_string(m) +
                                " n=" + std::to_string(n));
  return join(complete_graph(m), Graph(n - m));
}

/// Canonical recognizer for K_m ∨ K̄_{n-m}. The clique part is the set of
/// vertices of degree n-1. K_n is read as K_{n-1} ∨ K̄_1 with the highest
/// label as the independent vertex. Orders below 2 have no witness.
inline auto is_complete_split(const Graph &g) -> std::optional<SplitWitness> {
  const auto n = g.order();
  if (n < 2)
    return std::nullopt;

  SplitWitness w;
  for (Vertex v = 0; v < n; ++v)
    (g.degree(v) == n - 1 ? w.clique_vertices : w.independent_vertices).push_back(v);

  if (w.clique_vertices.empty())
    return std::nullopt;
  if (w.independent_vertices.empty()) {
    w.independent_vertices.push_back(w.clique_vertices.back());
    w.clique_vertices.pop_back();
    w.m = n - 1;
    return w;
  }

  // Clique vertices are universal, so the only thing left to rule out is an
  // edge inside the low part; equivalently every low vertex has degree m.
  const auto m = w.clique_vertices.size();
  for (auto v : w.independent_vertices)
    if (g.degree(v) != m)
      return std::nullopt;
  w.m = m;
  return w;
}

/// Relabels vertex u as sigma[u].
inline auto permute(const Graph &g, std::span<const Vertex> sigma) -> Graph {
  const auto n = g.order();
  if (sigma.size() != n)
    throw std::invalid_argument("permutation length does not match graph order");
  std::vector<bool> seen(n, false);
  for (auto s : sigma) {
    if (s >= n || seen[s])
      throw std::invalid_argument("not a permutation of 0..n-1");
    seen[s] = true;
  }
  Graph out(n);
  for (const auto &[u, v] : g.edges())
    out.set_edge(sigma[u], sigma[v], true);
  return out;
}

/// G(n, p) driven by a seeded mt19937_64; pairs are drawn in graph6 order.
inline auto random_graph(std::size_t n, double p, std::uint64_t seed) -> Graph {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u)
      if (coin(rng))
        g.set_edge(u, v, true);
  return g;
}

inline auto random_permutation(std::size_t n, std::uint64_t seed) -> std::vector<Vertex> {
  std::vector<Vertex> sigma(n);
  for (Vertex i = 0; i < n; ++i)
    sigma[i] = i;
  std::mt19937_64 rng(seed);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  return sigma;
}

} // namespace cm2
