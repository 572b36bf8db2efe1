#pragma once

// Mixed graphs (undirected edges plus arcs on one vertex set) and the
// degree-driven orientation of a simple graph with its X/Y vertex split.

#include "cm2/graph.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cm2 {

using Arc = std::pair<Vertex, Vertex>; // (tail, head)

/// Edge set plus arc set over the same vertices. A pair is never both an
/// edge and an arc, and never an arc in both directions.
class MixedGraph {
public:
  MixedGraph() = default;
  explicit MixedGraph(std::size_t n) : edges_(n), out_(n), in_(n) {}

  auto order() const -> std::size_t { return edges_.order(); }

  auto has_edge(Vertex u, Vertex v) const -> bool { return edges_.has_edge(u, v); }
  auto has_arc(Vertex tail, Vertex head) const -> bool {
    check_pair(tail, head);
    return out_.test(tail, head);
  }
  /// True when u and v are joined by an edge or an arc in either direction.
  auto connected(Vertex u, Vertex v) const -> bool {
    return has_edge(u, v) || has_arc(u, v) || has_arc(v, u);
  }

  auto add_edge(Vertex u, Vertex v) -> void {
    check_pair(u, v);
    if (connected(u, v))
      throw std::invalid_argument(pair_name(u, v) + " already joined in mixed graph");
    edges_.set_edge(u, v, true);
  }

  auto remove_edge(Vertex u, Vertex v) -> void {
    if (!has_edge(u, v))
      throw std::invalid_argument("no edge " + pair_name(u, v));
    edges_.set_edge(u, v, false);
  }

  auto add_arc(Vertex tail, Vertex head) -> void {
    check_pair(tail, head);
    if (connected(tail, head))
      throw std::invalid_argument(pair_name(tail, head) + " already joined in mixed graph");
    out_.set(tail, head, true);
    in_.set(head, tail, true);
    ++arc_count_;
  }

  auto remove_arc(Vertex tail, Vertex head) -> void {
    if (!has_arc(tail, head))
      throw std::invalid_argument("no arc " + pair_name(tail, head));
    out_.set(tail, head, false);
    in_.set(head, tail, false);
    --arc_count_;
  }

  auto out_degree(Vertex u) const -> std::size_t { return out_.row_count(checked(u)); }
  auto in_degree(Vertex u) const -> std::size_t { return in_.row_count(checked(u)); }
  auto undirected_degree(Vertex u) const -> std::size_t { return edges_.degree(u); }
  auto total_degree(Vertex u) const -> std::size_t {
    return out_degree(u) + in_degree(u) + undirected_degree(u);
  }

  auto arc_count() const -> std::size_t { return arc_count_; }
  auto edge_count() const -> std::size_t { return edges_.edge_count(); }

  template <typename F> auto for_each_out(Vertex u, F &&f) const -> void {
    out_.for_each_in_row(checked(u), std::forward<F>(f));
  }
  template <typename F> auto for_each_in(Vertex u, F &&f) const -> void {
    in_.for_each_in_row(checked(u), std::forward<F>(f));
  }

  auto arcs() const -> std::vector<Arc> {
    std::vector<Arc> out;
    out.reserve(arc_count_);
    for (Vertex u = 0; u < order(); ++u)
      out_.for_each_in_row(u, [&](Vertex v) { out.emplace_back(u, v); });
    return out;
  }

  auto edges() const -> std::vector<Edge> { return edges_.edges(); }

  /// The simple graph obtained by forgetting arc directions.
  auto underlying() const -> Graph {
    Graph g = edges_;
    for (const auto &[u, v] : arcs())
      g.set_edge(u, v, true);
    return g;
  }

  friend auto operator==(const MixedGraph &, const MixedGraph &) -> bool = default;

private:
  auto checked(Vertex u) const -> Vertex {
    if (u >= order())
      throw std::out_of_range("vertex " + std::to_string(u) + " out of range");
    return u;
  }
  auto check_pair(Vertex u, Vertex v) const -> void {
    checked(u);
    checked(v);
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  static auto pair_name(Vertex u, Vertex v) -> std::string {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
  }

  Graph edges_;
  BitMatrix out_;
  BitMatrix in_;
  std::size_t arc_count_ = 0;
};

struct MixedDegrees {
  std::size_t out = 0;
  std::size_t in = 0;
  std::size_t total = 0;

  friend auto operator==(const MixedDegrees &, const MixedDegrees &) -> bool = default;
};

inline auto mixed_degrees(const MixedGraph &f, Vertex u) -> MixedDegrees {
  return {f.out_degree(u), f.in_degree(u), f.total_degree(u)};
}

/// Snapshot of a mixed graph with its per-vertex degrees and the X/Y split
/// (X: out-degree >= in-degree, Y: the rest).
struct OrientationContext {
  MixedGraph mixed;
  std::vector<std::size_t> out_deg;
  std::vector<std::size_t> in_deg;
  std::vector<std::size_t> total_deg;
  std::vector<bool> in_x;
  std::vector<Vertex> x;
  std::vector<Vertex> y;

  auto is_x(Vertex v) const -> bool { return in_x[v]; }
  auto is_y(Vertex v) const -> bool { return !in_x[v]; }
};

inline auto make_context(MixedGraph f) -> OrientationContext {
  OrientationContext ctx;
  const auto n = f.order();
  ctx.out_deg.resize(n);
  ctx.in_deg.resize(n);
  ctx.total_deg.resize(n);
  ctx.in_x.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto d = mixed_degrees(f, v);
    ctx.out_deg[v] = d.out;
    ctx.in_deg[v] = d.in;
    ctx.total_deg[v] = d.total;
    ctx.in_x[v] = d.out >= d.in;
    (ctx.in_x[v] ? ctx.x : ctx.y).push_back(v);
  }
  ctx.mixed = std::move(f);
  return ctx;
}

/// Directs every edge from its higher-degree endpoint; equal-degree edges
/// stay undirected.
inline auto orient(const Graph &g) -> OrientationContext {
  MixedGraph f(g.order());
  for (const auto &[u, v] : g.edges()) {
    const auto du = g.degree(u);
    const auto dv = g.degree(v);
    if (du > dv)
      f.add_arc(u, v);
    else if (dv > du)
      f.add_arc(v, u);
    else
      f.add_edge(u, v);
  }
  return make_context(std::move(f));
}

enum class EdgeTag { forward, backward, undirected };

/// Orients g edge by edge. choice[i] applies to g.edges()[i]; forward means
/// low label -> high label.
inline auto partial_orientation(const Graph &g, std::span<const EdgeTag> choice) -> MixedGraph {
  const auto edges = g.edges();
  if (choice.size() != edges.size())
    throw std::invalid_argument("orientation choice covers " + std::to_string(choice.size()) +
                                " of " + std::to_string(edges.size()) + " edges");
  MixedGraph f(g.order());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    switch (choice[i]) {
    case EdgeTag::forward:
      f.add_arc(u, v);
      break;
    case EdgeTag::backward:
      f.add_arc(v, u);
      break;
    case EdgeTag::undirected:
      f.add_edge(u, v);
      break;
    }
  }
  return f;
}

} // namespace cm2
