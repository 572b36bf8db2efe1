#pragma once

// Structural predicates that every cM2-maximizer satisfies, evaluated
// literally on orient(G). On other graphs they are just predicates and may
// fail; a failure records the vertices that witness it.

#include "cm2/graph.hpp"
#include "cm2/orientation.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace cm2 {

enum class Claim {
  nonadjacent_x_pairs,
  x_nearly_complete,
  no_edge_inside_y,
  y_entered_from_x,
  y_independent,
  x_to_y_arcs,
  out_sets_nested,
  out_sets_equal,
  x_dominates_y,
};

inline constexpr std::size_t claim_count = 9;

inline auto claim_label(Claim c) -> std::string_view {
  constexpr std::array<std::string_view, claim_count> labels{
      "claim1", "corollary1", "claim2", "claim3", "claim4",
      "corollary2", "claim5", "claim6", "corollary3"};
  return labels[static_cast<std::size_t>(c)];
}

inline auto claim_description(Claim c) -> std::string_view {
  constexpr std::array<std::string_view, claim_count> text{
      "nonadjacent X pairs share a degree unique within X",
      "every X vertex misses at most one other X vertex",
      "no undirected edge inside Y",
      "Y vertices fed only from X receive arcs from all X neighbours",
      "G[Y] has no edges",
      "every X-Y edge is an arc X -> Y",
      "out-neighbourhoods in Y nest by degree within X",
      "out-neighbourhoods in Y coincide across X",
      "every X vertex dominates all of Y"};
  return text[static_cast<std::size_t>(c)];
}

struct ClaimResult {
  Claim claim{};
  bool passed = true;
  std::vector<Vertex> counterexample;
};

struct ClaimReport {
  std::array<ClaimResult, claim_count> results{};

  auto all_passed() const -> bool {
    return std::all_of(results.begin(), results.end(), [](const auto &r) { return r.passed; });
  }
  auto operator[](Claim c) const -> const ClaimResult & { return results[static_cast<std::size_t>(c)]; }
};

namespace detail {

inline auto out_into_y(const OrientationContext &ctx, Vertex u) -> std::vector<bool> {
  std::vector<bool> s(ctx.mixed.order(), false);
  ctx.mixed.for_each_out(u, [&](Vertex w) {
    if (ctx.is_y(w))
      s[w] = true;
  });
  return s;
}

/// First w in sub but not in super.
inline auto missing_from(const std::vector<bool> &sub, const std::vector<bool> &super)
    -> std::optional<Vertex> {
  for (Vertex w = 0; w < sub.size(); ++w)
    if (sub[w] && !super[w])
      return w;
  return std::nullopt;
}

} // namespace detail

inline auto check_claims(const Graph &g) -> ClaimReport {
  const auto ctx = orient(g);
  const auto &f = ctx.mixed;
  const auto &xs = ctx.x;
  const auto &ys = ctx.y;

  ClaimReport report;
  for (std::size_t i = 0; i < claim_count; ++i)
    report.results[i].claim = static_cast<Claim>(i);
  auto fail = [&](Claim c, std::vector<Vertex> witness) {
    auto &r = report.results[static_cast<std::size_t>(c)];
    if (r.passed) {
      r.passed = false;
      r.counterexample = std::move(witness);
    }
  };

  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const auto u = xs[i];
      const auto v = xs[j];
      if (g.has_edge(u, v))
        continue;
      if (g.degree(u) != g.degree(v)) {
        fail(Claim::nonadjacent_x_pairs, {u, v});
        continue;
      }
      for (auto w : xs)
        if (w != u && w != v && g.degree(w) == g.degree(u)) {
          fail(Claim::nonadjacent_x_pairs, {u, v, w});
          break;
        }
    }

  for (auto u : xs) {
    std::size_t inside = 0;
    for (auto v : xs)
      inside += (v != u && g.has_edge(u, v)) ? 1 : 0;
    if (inside + 2 < xs.size())
      fail(Claim::x_nearly_complete, {u});
  }

  for (auto u : ys)
    for (auto v : ys)
      if (u < v && f.has_edge(u, v))
        fail(Claim::no_edge_inside_y, {u, v});

  for (auto v : ys) {
    bool fed_from_x = true;
    f.for_each_in(v, [&](Vertex w) { fed_from_x = fed_from_x && ctx.is_x(w); });
    if (!fed_from_x)
      continue;
    for (auto u : xs)
      if (g.has_edge(u, v) && !f.has_arc(u, v))
        fail(Claim::y_entered_from_x, {u, v});
  }

  for (auto u : ys)
    for (auto v : ys)
      if (u < v && g.has_edge(u, v))
        fail(Claim::y_independent, {u, v});

  for (auto u : xs)
    for (auto v : ys)
      if (g.has_edge(u, v) && !f.has_arc(u, v))
        fail(Claim::x_to_y_arcs, {u, v});

  std::vector<std::vector<bool>> out_y(g.order());
  for (auto u : xs)
    out_y[u] = detail::out_into_y(ctx, u);
  for (auto u : xs)
    for (auto v : xs) {
      if (u == v)
        continue;
      if (g.degree(u) >= g.degree(v))
        if (auto w = detail::missing_from(out_y[v], out_y[u]))
          fail(Claim::out_sets_nested, {u, v, *w});
      if (u < v && out_y[u] != out_y[v]) {
        auto w = detail::missing_from(out_y[u], out_y[v]);
        if (!w)
          w = detail::missing_from(out_y[v], out_y[u]);
        fail(Claim::out_sets_equal, {u, v, *w});
      }
    }

  for (auto u : xs)
    for (auto w : ys)
      if (!f.has_arc(u, w)) {
        fail(Claim::x_dominates_y, {u, w});
        break;
      }

  return report;
}

} // namespace cm2
