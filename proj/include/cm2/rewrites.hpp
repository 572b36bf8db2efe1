#pragma once

// cM2-monotone local rewrites and a deterministic hill climber over them.
//
//   A(u,v)   u,v in X, uv not an edge                 -> G + uv       (cM2 does not drop)
//   B(u,v,w) v in Y, arcs u->v and v->w, uw not edge  -> G - uv - vw + uw  (cM2 rises)
//   C(u,v,w) u,v in X, d(u) >= d(v), d+(u) >= d+(v), d-(u) <= d-(v),
//            arc v->w with w in Y, uw not an edge     -> G - vw + uw  (cM2 rises)
//
// All preconditions are read off orient(G).

#include "cm2/graph.hpp"
#include "cm2/indices.hpp"
#include "cm2/orientation.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cm2 {

enum class MoveKind { B, C, A }; // declaration order is the scan order

inline auto to_char(MoveKind k) -> char {
  switch (k) {
  case MoveKind::A:
    return 'A';
  case MoveKind::B:
    return 'B';
  case MoveKind::C:
    return 'C';
  }
  return '?';
}

struct Move {
  MoveKind kind = MoveKind::A;
  std::array<Vertex, 3> vertices{}; // A uses the first two

  auto arity() const -> std::size_t { return kind == MoveKind::A ? 2 : 3; }

  static auto a(Vertex u, Vertex v) -> Move { return {MoveKind::A, {u, v, 0}}; }
  static auto b(Vertex u, Vertex v, Vertex w) -> Move { return {MoveKind::B, {u, v, w}}; }
  static auto c(Vertex u, Vertex v, Vertex w) -> Move { return {MoveKind::C, {u, v, w}}; }

  friend auto operator<=>(const Move &, const Move &) = default;
};

inline auto to_string(const Move &m) -> std::string {
  std::string s(1, to_char(m.kind));
  for (std::size_t i = 0; i < m.arity(); ++i)
    s += " " + std::to_string(m.vertices[i]);
  return s;
}

struct RewriteStep {
  Move move;
  IndexValue before = 0;
  IndexValue after = 0;
};

struct RewriteTrace {
  Graph initial;
  Graph final;
  std::vector<RewriteStep> steps;
};

namespace detail {

inline auto in_range(const Graph &g, std::initializer_list<Vertex> vs) -> bool {
  return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return v < g.order(); });
}

} // namespace detail

/// Why move m is not applicable to g (whose orientation is ctx), or nullopt
/// when it is.
inline auto move_violation(const Graph &g, const OrientationContext &ctx, const Move &m)
    -> std::optional<std::string> {
  const auto [u, v, w] = m.vertices;
  switch (m.kind) {
  case MoveKind::A:
    if (!detail::in_range(g, {u, v}))
      return "vertex out of range";
    if (u == v)
      return "A needs two distinct vertices";
    if (!ctx.is_x(u) || !ctx.is_x(v))
      return "A needs both endpoints in X";
    if (g.has_edge(u, v))
      return "A edge already present";
    return std::nullopt;
  case MoveKind::B:
    if (!detail::in_range(g, {u, v, w}))
      return "vertex out of range";
    if (!ctx.is_y(v))
      return "B needs the middle vertex in Y";
    if (!ctx.mixed.has_arc(u, v) || !ctx.mixed.has_arc(v, w))
      return "B needs arcs u->v and v->w";
    if (g.has_edge(u, w))
      return "B needs uw to be a non-edge";
    return std::nullopt;
  case MoveKind::C:
    if (!detail::in_range(g, {u, v, w}))
      return "vertex out of range";
    if (u == v)
      return "C needs distinct u and v";
    if (!ctx.is_x(u) || !ctx.is_x(v))
      return "C needs u and v in X";
    if (g.degree(u) < g.degree(v))
      return "C needs d(u) >= d(v)";
    if (ctx.out_deg[u] < ctx.out_deg[v] || ctx.in_deg[u] > ctx.in_deg[v])
      return "C needs d+(u) >= d+(v) and d-(u) <= d-(v)";
    if (!ctx.mixed.has_arc(v, w) || !ctx.is_y(w))
      return "C needs arc v->w with w in Y";
    if (g.has_edge(u, w))
      return "C needs uw to be a non-edge";
    return std::nullopt;
  }
  return "unknown move kind";
}

/// Applies m without checking preconditions.
inline auto apply_unchecked(const Graph &g, const Move &m) -> Graph {
  const auto [u, v, w] = m.vertices;
  Graph out = g;
  switch (m.kind) {
  case MoveKind::A:
    out.set_edge(u, v, true);
    break;
  case MoveKind::B:
    out.set_edge(u, v, false);
    out.set_edge(v, w, false);
    out.set_edge(u, w, true);
    break;
  case MoveKind::C:
    out.set_edge(v, w, false);
    out.set_edge(u, w, true);
    break;
  }
  return out;
}

inline auto apply_move(const Graph &g, const Move &m) -> Graph {
  if (auto why = move_violation(g, orient(g), m))
    throw std::invalid_argument(to_string(m) + ": " + *why);
  return apply_unchecked(g, m);
}

inline auto apply_a(const Graph &g, Vertex u, Vertex v) -> Graph { return apply_move(g, Move::a(u, v)); }
inline auto apply_b(const Graph &g, Vertex u, Vertex v, Vertex w) -> Graph {
  return apply_move(g, Move::b(u, v, w));
}
inline auto apply_c(const Graph &g, Vertex u, Vertex v, Vertex w) -> Graph {
  return apply_move(g, Move::c(u, v, w));
}

/// The three facts forced when an A-move leaves cM2 unchanged:
/// d(u) = d(v), d+(u) = d-(u), d+(v) = d-(v).
inline auto a_equality_conditions(const OrientationContext &ctx, Vertex u, Vertex v) -> bool {
  return ctx.total_deg[u] == ctx.total_deg[v] && ctx.out_deg[u] == ctx.in_deg[u] &&
         ctx.out_deg[v] == ctx.in_deg[v];
}

/// Every applicable move against orient(g): B moves, then C, then A, each
/// group sorted by vertex tuple.
inline auto enumerate_moves(const Graph &g, const OrientationContext &ctx) -> std::vector<Move> {
  const auto &f = ctx.mixed;
  std::vector<Move> moves;

  for (auto v : ctx.y)
    f.for_each_in(v, [&](Vertex u) {
      f.for_each_out(v, [&](Vertex w) {
        if (!g.has_edge(u, w))
          moves.push_back(Move::b(u, v, w));
      });
    });

  for (auto u : ctx.x)
    for (auto v : ctx.x) {
      if (u == v || g.degree(u) < g.degree(v) || ctx.out_deg[u] < ctx.out_deg[v] ||
          ctx.in_deg[u] > ctx.in_deg[v])
        continue;
      f.for_each_out(v, [&](Vertex w) {
        if (ctx.is_y(w) && !g.has_edge(u, w))
          moves.push_back(Move::c(u, v, w));
      });
    }

  for (std::size_t i = 0; i < ctx.x.size(); ++i)
    for (std::size_t j = i + 1; j < ctx.x.size(); ++j)
      if (!g.has_edge(ctx.x[i], ctx.x[j]))
        moves.push_back(Move::a(ctx.x[i], ctx.x[j]));

  std::sort(moves.begin(), moves.end());
  return moves;
}

inline auto enumerate_moves(const Graph &g) -> std::vector<Move> { return enumerate_moves(g, orient(g)); }

enum class ClimbPolicy { first_improvement, best_improvement };

struct ClimbOptions {
  ClimbPolicy policy = ClimbPolicy::first_improvement;
  bool allow_plateau_a = false;
};

/// Applies moves until none improves cM2. B and C moves that fail to raise
/// cM2, or A moves that lower it, throw std::logic_error: those would
/// contradict the monotonicity the moves are built on.
inline auto climb(const Graph &start, const ClimbOptions &opts = {}) -> RewriteTrace {
  RewriteTrace trace{start, start, {}};
  Graph current = start;
  IndexValue value = cm2(current);
  std::set<std::vector<Edge>> visited;
  if (opts.allow_plateau_a)
    visited.insert(current.edges());

  for (;;) {
    const auto moves = enumerate_moves(current);
    std::optional<Move> chosen;
    std::optional<Move> plateau;
    Graph chosen_graph;
    Graph plateau_graph;
    IndexValue chosen_value = value;

    for (const auto &m : moves) {
      Graph next = apply_unchecked(current, m);
      const auto next_value = cm2(next);
      if ((m.kind != MoveKind::A && next_value <= value) || next_value < value)
        throw std::logic_error("monotonicity violated by " + to_string(m));
      if (next_value > chosen_value) {
        chosen = m;
        chosen_value = next_value;
        chosen_graph = std::move(next);
        if (opts.policy == ClimbPolicy::first_improvement)
          break;
      } else if (opts.allow_plateau_a && !plateau && next_value == value &&
                 !visited.contains(next.edges())) {
        plateau = m;
        plateau_graph = std::move(next);
      }
    }

    if (!chosen && plateau) {
      chosen = plateau;
      chosen_graph = std::move(plateau_graph);
      chosen_value = value;
    }
    if (!chosen)
      break;

    trace.steps.push_back({*chosen, value, chosen_value});
    current = std::move(chosen_graph);
    value = chosen_value;
    if (opts.allow_plateau_a)
      visited.insert(current.edges());
  }

  trace.final = std::move(current);
  return trace;
}

/// Replays a trace from its initial graph, checking each move's
/// preconditions and recorded values. Returns the first failing step index.
inline auto first_invalid_step(const RewriteTrace &trace) -> std::optional<std::size_t> {
  Graph g = trace.initial;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto &step = trace.steps[i];
    if (move_violation(g, orient(g), step.move) || cm2(g) != step.before)
      return i;
    g = apply_unchecked(g, step.move);
    if (cm2(g) != step.after)
      return i;
  }
  if (!(g == trace.final))
    return trace.steps.size();
  return std::nullopt;
}

} // namespace cm2
