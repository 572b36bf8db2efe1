#pragma once

// Exact integer evaluation of the second Zagreb index M2 and its
// complementary variant cM2 = sum over edges of |d(u)^2 - d(v)^2|.

#include "cm2/graph.hpp"
#include "cm2/orientation.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cm2 {

using IndexValue = std::int64_t;

/// Largest order for which every index value fits in int64 (|E|(n-1)^2 < n^4).
inline constexpr std::size_t max_index_order = std::size_t{1} << 15;

namespace detail {

inline auto guard_order(std::size_t n) -> void {
  if (n > max_index_order)
    throw std::domain_error("order " + std::to_string(n) + " exceeds index limit " +
                            std::to_string(max_index_order));
}

inline auto sq(std::size_t d) -> IndexValue {
  const auto v = static_cast<IndexValue>(d);
  return v * v;
}

} // namespace detail

inline auto cm2(const Graph &g) -> IndexValue {
  detail::guard_order(g.order());
  IndexValue total = 0;
  for (const auto &[u, v] : g.edges()) {
    const auto diff = detail::sq(g.degree(u)) - detail::sq(g.degree(v));
    total += diff < 0 ? -diff : diff;
  }
  return total;
}

inline auto m2(const Graph &g) -> IndexValue {
  detail::guard_order(g.order());
  IndexValue total = 0;
  for (const auto &[u, v] : g.edges())
    total += static_cast<IndexValue>(g.degree(u)) * static_cast<IndexValue>(g.degree(v));
  return total;
}

/// Signed sum over arcs tail->head of d(tail)^2 - d(head)^2, using total
/// degrees in f. Never exceeds cm2 of the underlying graph; equal to it for
/// the degree-driven orientation.
inline auto cm2_arc_form(const MixedGraph &f) -> IndexValue {
  detail::guard_order(f.order());
  std::vector<IndexValue> d2(f.order());
  for (Vertex v = 0; v < f.order(); ++v)
    d2[v] = detail::sq(f.total_degree(v));
  IndexValue total = 0;
  for (const auto &[tail, head] : f.arcs())
    total += d2[tail] - d2[head];
  return total;
}

/// The same quantity regrouped per vertex: sum of (d+ - d-) d^2.
inline auto cm2_vertex_form(const MixedGraph &f) -> IndexValue {
  detail::guard_order(f.order());
  IndexValue total = 0;
  for (Vertex v = 0; v < f.order(); ++v) {
    const auto d = mixed_degrees(f, v);
    total += (static_cast<IndexValue>(d.out) - static_cast<IndexValue>(d.in)) * detail::sq(d.total);
  }
  return total;
}

/// cM2(K_m ∨ K̄_{n-m}) = m (n-m) ((n-1)^2 - m^2).
inline auto split_closed_form(std::size_t m, std::size_t n) -> IndexValue {
  if (m < 1 || m + 1 > n)
    throw std::invalid_argument("split_closed_form needs 1 <= m <= n-1, got m=" +
                                std::to_string(m) + " n=" + std::to_string(n));
  detail::guard_order(n);
  const auto mm = static_cast<IndexValue>(m);
  const auto nn = static_cast<IndexValue>(n);
  return mm * (nn - mm) * ((nn - 1) * (nn - 1) - mm * mm);
}

struct SplitOptimum {
  std::size_t m = 0; // smallest maximizing clique size
  IndexValue value = 0;
  std::vector<std::size_t> ties; // every maximizing m, ascending
};

inline auto optimal_m(std::size_t n) -> SplitOptimum {
  if (n < 2)
    throw std::invalid_argument("optimal_m needs n >= 2");
  SplitOptimum best;
  for (std::size_t m = 1; m < n; ++m) {
    const auto value = split_closed_form(m, n);
    if (best.ties.empty() || value > best.value) {
      best.value = value;
      best.ties.assign(1, m);
    } else if (value == best.value) {
      best.ties.push_back(m);
    }
  }
  best.m = best.ties.front();
  return best;
}

} // namespace cm2
