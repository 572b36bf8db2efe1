#pragma once

// Text formats: graph6 (single size byte, n <= 62), 0-based edge lists,
// rewrite traces, and JSON/CSV extremal reports.

#include "cm2/graph.hpp"
#include "cm2/rewrites.hpp"
#include "cm2/search.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cm2 {

inline constexpr std::size_t max_graph6_order = 62;
inline constexpr int report_format_version = 1;

/// Malformed input text (graph6, edge list).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline auto emit_graph6(const Graph &g) -> std::string {
  const auto n = g.order();
  if (n > max_graph6_order)
    throw std::invalid_argument("graph6 supports n <= 62, got " + std::to_string(n));
  std::string out(1, static_cast<char>(63 + n));
  unsigned chunk = 0;
  unsigned filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1U) | (g.has_edge(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  if (filled != 0)
    out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

inline auto parse_graph6(std::string_view s) -> Graph {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  if (s.empty())
    throw ParseError("graph6: empty string");
  for (char c : s)
    if (c < 63 || c > 126)
      throw ParseError("graph6: character outside 63..126");
  if (s[0] == 126)
    throw ParseError("graph6: multi-byte sizes (n > 62) are not supported");

  const std::size_t n = static_cast<std::size_t>(s[0] - 63);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (s.size() != expected)
    throw ParseError("graph6: expected " + std::to_string(expected) + " characters for n=" +
                     std::to_string(n) + ", got " + std::to_string(s.size()));

  Graph g(n);
  std::size_t k = 0;
  auto bit_at = [&](std::size_t idx) {
    const auto byte = static_cast<unsigned>(s[1 + idx / 6] - 63);
    return (byte >> (5 - idx % 6)) & 1U;
  };
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if (bit_at(k))
        g.set_edge(i, j, true);
  for (; k < 6 * (expected - 1); ++k)
    if (bit_at(k))
      throw ParseError("graph6: nonzero padding bits");
  return g;
}

namespace detail {

inline auto parse_index(std::string_view tok, std::string_view what, std::size_t line) -> std::size_t {
  std::size_t value = 0;
  const auto *end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError("edge list line " + std::to_string(line) + ": bad " + std::string(what) + " '" +
                     std::string(tok) + "'");
  return value;
}

inline auto tokens(const std::string &line) -> std::vector<std::string> {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;)
    out.push_back(t);
  return out;
}

} // namespace detail

/// First non-blank line is n, then one "u v" pair per line. Blank lines and
/// lines starting with '#' are ignored.
inline auto parse_edge_list(std::string_view text, bool one_based = false) -> Graph {
  std::istringstream in{std::string(text)};
  std::optional<Graph> g;
  std::set<Edge> seen;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const auto toks = detail::tokens(line);
    if (toks.empty() || toks[0][0] == '#')
      continue;
    if (!g) {
      if (toks.size() != 1)
        throw ParseError("edge list line " + std::to_string(lineno) + ": expected vertex count");
      const auto n = detail::parse_index(toks[0], "vertex count", lineno);
      if (n > max_index_order)
        throw ParseError("edge list: vertex count too large");
      g.emplace(n);
      continue;
    }
    if (toks.size() != 2)
      throw ParseError("edge list line " + std::to_string(lineno) + ": expected 'u v'");
    auto u = detail::parse_index(toks[0], "vertex", lineno);
    auto v = detail::parse_index(toks[1], "vertex", lineno);
    if (one_based) {
      if (u == 0 || v == 0)
        throw ParseError("edge list line " + std::to_string(lineno) + ": vertex 0 in one-based input");
      --u;
      --v;
    }
    if (u >= g->order() || v >= g->order())
      throw ParseError("edge list line " + std::to_string(lineno) + ": vertex out of range");
    if (u == v)
      throw ParseError("edge list line " + std::to_string(lineno) + ": self-loop");
    if (!seen.insert(std::minmax(u, v)).second)
      throw ParseError("edge list line " + std::to_string(lineno) + ": duplicate edge");
    g->set_edge(u, v, true);
  }
  if (!g)
    throw ParseError("edge list: missing vertex count");
  return *std::move(g);
}

inline auto emit_edge_list(const Graph &g, bool one_based = false) -> std::string {
  const std::size_t shift = one_based ? 1 : 0;
  std::string out = std::to_string(g.order()) + "\n";
  for (const auto &[u, v] : g.edges())
    out += std::to_string(u + shift) + " " + std::to_string(v + shift) + "\n";
  return out;
}

/// Initial graph in graph6, then one "K u v [w] before after" line per step.
inline auto emit_trace(const RewriteTrace &trace) -> std::string {
  std::string out = emit_graph6(trace.initial) + "\n";
  for (const auto &s : trace.steps)
    out += to_string(s.move) + " " + std::to_string(s.before) + " " + std::to_string(s.after) + "\n";
  return out;
}

inline auto parse_trace(std::string_view text) -> RewriteTrace {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line))
    throw ParseError("trace: missing initial graph");
  RewriteTrace trace;
  trace.initial = parse_graph6(line);
  Graph g = trace.initial;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = detail::tokens(line);
    if (toks.empty())
      continue;
    if (toks[0].size() != 1 || toks[0].find_first_of("ABC") != 0)
      throw ParseError("trace line " + std::to_string(lineno) + ": unknown move kind");
    const char kind = toks[0][0];
    const std::size_t arity = kind == 'A' ? 2 : 3;
    if (toks.size() != 1 + arity + 2)
      throw ParseError("trace line " + std::to_string(lineno) + ": wrong field count");
    Move m;
    m.kind = kind == 'A' ? MoveKind::A : kind == 'B' ? MoveKind::B : MoveKind::C;
    for (std::size_t i = 0; i < arity; ++i)
      m.vertices[i] = detail::parse_index(toks[1 + i], "vertex", lineno);
    auto signed_value = [&](const std::string &tok) {
      IndexValue v = 0;
      const auto *end = tok.data() + tok.size();
      const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
      if (ec != std::errc{} || ptr != end)
        throw ParseError("trace line " + std::to_string(lineno) + ": bad value");
      return v;
    };
    trace.steps.push_back({m, signed_value(toks[1 + arity]), signed_value(toks[2 + arity])});
    g = apply_unchecked(g, m);
  }
  trace.final = std::move(g);
  return trace;
}

inline auto report_to_json(const ExtremalReport &r) -> nlohmann::json {
  nlohmann::json j;
  j["format_version"] = report_format_version;
  j["n"] = r.n;
  j["global_max"] = r.global_max;
  j["closed_form_max"] = r.closed_form_max;
  j["optimal_ms"] = r.optimal_ms;
  j["maximizer_count"] = r.maximizer_count;
  j["non_split_maximizers"] = r.non_split_maximizers;
  j["claim_failures"] = r.claim_failures;
  j["exceeding_closed_form"] = r.exceeding_closed_form;
  auto witnesses = nlohmann::json::array();
  for (const auto &g : r.sample_witnesses)
    witnesses.push_back(emit_graph6(g));
  j["sample_witnesses"] = std::move(witnesses);
  j["first_non_split"] = r.first_non_split ? nlohmann::json(emit_graph6(*r.first_non_split)) : nlohmann::json(nullptr);
  j["graphs_scanned"] = r.graphs_scanned;
  j["elapsed_ms"] = r.elapsed.count();
  j["verified"] = r.verified();
  return j;
}

inline auto csv_header() -> std::string {
  return "n,global_max,closed_form_max,m_star,maximizer_count,verified";
}

inline auto csv_row(const ExtremalReport &r) -> std::string {
  const auto m_star = r.optimal_ms.empty() ? std::string{} : std::to_string(r.optimal_ms.front());
  return std::to_string(r.n) + "," + std::to_string(r.global_max) + "," + std::to_string(r.closed_form_max) +
         "," + m_star + "," + std::to_string(r.maximizer_count) + "," + (r.verified() ? "true" : "false");
}

} // namespace cm2
