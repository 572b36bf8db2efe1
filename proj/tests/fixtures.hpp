#pragma once

#include "cm2/graph.hpp"

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

namespace fixtures {

inline auto from_edges(std::size_t n, std::initializer_list<std::pair<cm2::Vertex, cm2::Vertex>> edges)
    -> cm2::Graph {
  cm2::Graph g(n);
  for (auto [u, v] : edges)
    g.set_edge(u, v, true);
  return g;
}

inline auto path(std::size_t n) -> cm2::Graph {
  cm2::Graph g(n);
  for (cm2::Vertex v = 1; v < n; ++v)
    g.set_edge(v - 1, v, true);
  return g;
}

inline auto cycle(std::size_t n) -> cm2::Graph {
  auto g = path(n);
  g.set_edge(0, n - 1, true);
  return g;
}

// Center is vertex 0.
inline auto star(std::size_t leaves) -> cm2::Graph {
  cm2::Graph g(leaves + 1);
  for (cm2::Vertex v = 1; v <= leaves; ++v)
    g.set_edge(0, v, true);
  return g;
}

// a=0 b=1 c=2 d=3 v=4 w=5; v in Y with arcs a->v, b->v, v->w.
inline auto operation_b_example() -> cm2::Graph {
  return from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {4, 5}});
}

// u=0 v=1 x=2 w=3 y=4 z=5; arc v->w with w in Y and u not adjacent to w.
inline auto rule_c_example() -> cm2::Graph {
  return from_edges(6, {{0, 2}, {0, 4}, {0, 5}, {1, 2}, {1, 3}});
}

inline auto sorted_degrees(const cm2::Graph &g) -> std::vector<std::size_t> {
  std::vector<std::size_t> d(g.degrees().begin(), g.degrees().end());
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

} // namespace fixtures
