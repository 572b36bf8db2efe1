// Command-line front end: index evaluation, closed-form tables, exhaustive
// verification, hill climbing, maximizer claims and orientation dumps.
//
// Exit codes: 0 success/verified, 1 verification failure, 2 input error.

#include "cm2/cm2.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;

struct InputSpec {
  std::string path = "-";
  std::string format = "auto";
  bool one_based = false;
};

auto read_all(const std::string &path) -> std::string {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in)
    throw cm2::ParseError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

auto trim(std::string s) -> std::string {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// graph6 never uses digits, an edge list always starts with one.
auto load_graph(const InputSpec &in) -> cm2::Graph {
  const auto text = read_all(in.path);
  auto format = in.format;
  if (format == "auto") {
    const auto t = trim(text);
    format = (!t.empty() && t[0] >= '0' && t[0] <= '9') ? "edgelist" : "graph6";
  }
  if (format == "edgelist")
    return cm2::parse_edge_list(text, in.one_based);
  const auto t = trim(text);
  if (t.find_first_of(" \t\r\n") != std::string::npos)
    throw cm2::ParseError("graph6 input must hold exactly one graph");
  return cm2::parse_graph6(t);
}

auto add_input(CLI::App &cmd, InputSpec &in) -> void {
  cmd.add_option("input", in.path, "graph file, or - for stdin")->default_val("-");
  cmd.add_option("--format", in.format, "input format")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}))
      ->default_val("auto");
  cmd.add_flag("--one-based", in.one_based, "edge list vertices start at 1");
}

auto format_vertices(const std::vector<cm2::Vertex> &vs, std::size_t shift) -> std::string {
  std::string out;
  for (auto v : vs)
    out += (out.empty() ? "" : " ") + std::to_string(v + shift);
  return out;
}

auto default_jobs() -> unsigned {
  if (const char *env = std::getenv("CM2_JOBS")) {
    try {
      const auto v = std::stoul(env);
      if (v > 0)
        return static_cast<unsigned>(v);
    } catch (const std::exception &) {
    }
    std::cerr << "ignoring invalid CM2_JOBS=" << env << "\n";
  }
  return 1;
}

auto run_index(const InputSpec &in, const std::string &which) -> int {
  const auto g = load_graph(in);
  if (which == "cm2" || which == "both")
    std::cout << "cm2 " << cm2::cm2(g) << "\n";
  if (which == "m2" || which == "both")
    std::cout << "m2 " << cm2::m2(g) << "\n";
  return exit_ok;
}

auto run_extremal(std::size_t n) -> int {
  const auto best = cm2::optimal_m(n);
  std::cout << "m,value\n";
  for (std::size_t m = 1; m < n; ++m)
    std::cout << m << "," << cm2::split_closed_form(m, n) << "\n";
  std::cout << "argmax m=" << best.m << " value=" << best.value << " ties=";
  for (std::size_t i = 0; i < best.ties.size(); ++i)
    std::cout << (i ? "," : "") << best.ties[i];
  std::cout << "\n";
  return exit_ok;
}

auto run_verify(std::size_t n, unsigned jobs, bool allow_n8, const std::string &out_path, bool csv) -> int {
  cm2::ScanOptions opts;
  opts.jobs = jobs;
  opts.allow_n8 = allow_n8;
  const auto verdict = cm2::verify_conjecture(n, opts);
  const auto &r = verdict.report;
  if (csv) {
    std::cout << cm2::csv_header() << "\n" << cm2::csv_row(r) << "\n";
  } else {
    std::cout << "n=" << r.n << " scanned=" << r.graphs_scanned << " global_max=" << r.global_max
              << " closed_form_max=" << r.closed_form_max << " maximizers=" << r.maximizer_count
              << " non_split=" << r.non_split_maximizers << " claim_failures=" << r.claim_failures
              << " elapsed_ms=" << r.elapsed.count() << "\n";
    std::cout << (verdict.passed ? "VERIFIED" : "FAILED");
    if (verdict.counterexample)
      std::cout << " counterexample=" << cm2::emit_graph6(*verdict.counterexample);
    std::cout << "\n";
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out)
      throw cm2::ParseError("cannot write " + out_path);
    out << cm2::report_to_json(r).dump(2) << "\n";
  }
  return verdict.passed ? exit_ok : exit_failed;
}

auto describe_split(const cm2::Graph &g) -> std::string {
  if (auto w = cm2::is_complete_split(g))
    return "yes (m=" + std::to_string(w->m) + ")";
  return "no";
}

auto run_climb(const InputSpec &in, const std::string &policy, bool plateau, std::uint64_t seed,
               std::size_t starts, const std::string &trace_path) -> int {
  const auto g = load_graph(in);
  cm2::ClimbOptions opts;
  opts.policy = policy == "best" ? cm2::ClimbPolicy::best_improvement : cm2::ClimbPolicy::first_improvement;
  opts.allow_plateau_a = plateau;

  const auto trace = cm2::climb(g, opts);
  std::cout << "initial_cm2 " << cm2::cm2(trace.initial) << "\n"
            << "final_cm2 " << cm2::cm2(trace.final) << "\n"
            << "steps " << trace.steps.size() << "\n"
            << "final_graph6 " << cm2::emit_graph6(trace.final) << "\n"
            << "complete_split " << describe_split(trace.final) << "\n";
  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out)
      throw cm2::ParseError("cannot write " + trace_path);
    out << cm2::emit_trace(trace);
  }

  if (starts > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> tenths(1, 9);
    std::size_t reached = 0;
    for (std::size_t i = 0; i < starts; ++i) {
      const auto start = cm2::random_graph(g.order(), tenths(rng) / 10.0, rng());
      if (cm2::is_complete_split(cm2::climb(start, opts).final))
        ++reached;
    }
    std::cout << "random_starts " << starts << " reached_complete_split " << reached << " fraction "
              << static_cast<double>(reached) / static_cast<double>(starts) << "\n";
  }
  return exit_ok;
}

auto run_claims(const InputSpec &in) -> int {
  const auto g = load_graph(in);
  const auto report = cm2::check_claims(g);
  for (const auto &r : report.results) {
    std::cout << cm2::claim_label(r.claim) << "\t" << (r.passed ? "pass" : "FAIL") << "\t"
              << cm2::claim_description(r.claim);
    if (!r.passed)
      std::cout << "\tvertices: " << format_vertices(r.counterexample, in.one_based ? 1 : 0);
    std::cout << "\n";
  }
  return exit_ok;
}

auto run_orient(const InputSpec &in) -> int {
  const auto g = load_graph(in);
  const auto ctx = cm2::orient(g);
  const std::size_t shift = in.one_based ? 1 : 0;
  std::cout << "arcs";
  for (const auto &[u, v] : ctx.mixed.arcs())
    std::cout << " " << u + shift << "->" << v + shift;
  std::cout << "\nedges";
  for (const auto &[u, v] : ctx.mixed.edges())
    std::cout << " " << u + shift << "-" << v + shift;
  std::cout << "\nX " << format_vertices(ctx.x, shift) << "\nY " << format_vertices(ctx.y, shift) << "\n";
  std::cout << "vertex,out,in,degree,part\n";
  for (cm2::Vertex v = 0; v < g.order(); ++v)
    std::cout << v + shift << "," << ctx.out_deg[v] << "," << ctx.in_deg[v] << "," << ctx.total_deg[v] << ","
              << (ctx.is_x(v) ? "X" : "Y") << "\n";
  return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact engine for the complementary second Zagreb index cM2"};
  app.require_subcommand(1);

  InputSpec index_in;
  std::string which = "cm2";
  auto *index = app.add_subcommand("index", "print exact cM2 / M2 of a graph");
  add_input(*index, index_in);
  index->add_option("--which", which)->check(CLI::IsMember({"cm2", "m2", "both"}))->default_val("cm2");

  std::size_t extremal_n = 0;
  auto *extremal = app.add_subcommand("extremal", "closed-form cM2 of K_m v co-K_{n-m} over m");
  extremal->add_option("--n", extremal_n, "order")->required()->check(CLI::Range(2, 1 << 15));

  std::size_t verify_n = 0;
  unsigned jobs = default_jobs();
  bool allow_n8 = false;
  bool csv = false;
  std::string report_path;
  auto *verify = app.add_subcommand("verify", "exhaustively verify the maximizers at order n");
  verify->add_option("--n", verify_n, "order")->required();
  verify->add_option("--jobs", jobs, "worker threads (default: CM2_JOBS or 1)")->check(CLI::PositiveNumber);
  verify->add_flag("--allow-n8", allow_n8, "permit n = 8");
  verify->add_option("--out", report_path, "write the JSON report here");
  verify->add_flag("--csv", csv, "print a one-line CSV summary instead");

  InputSpec climb_in;
  std::string policy = "first";
  bool plateau = false;
  std::uint64_t seed = 1;
  std::size_t starts = 0;
  std::string trace_path;
  auto *climb = app.add_subcommand("climb", "hill-climb with the monotone rewrites");
  add_input(*climb, climb_in);
  climb->add_option("--policy", policy)->check(CLI::IsMember({"first", "best"}))->default_val("first");
  climb->add_flag("--allow-plateau-a", plateau, "also take A moves that keep cM2 unchanged");
  climb->add_option("--seed", seed, "seed for --starts")->default_val(1);
  climb->add_option("--starts", starts, "extra random starts of the same order")->default_val(0);
  climb->add_option("--trace", trace_path, "write the rewrite trace here");

  InputSpec claims_in;
  auto *claims = app.add_subcommand("claims", "evaluate the maximizer claims on a graph");
  add_input(*claims, claims_in);

  InputSpec orient_in;
  auto *orient = app.add_subcommand("orient", "show the degree orientation and X/Y split");
  add_input(*orient, orient_in);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const auto code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*index)
      return run_index(index_in, which);
    if (*extremal)
      return run_extremal(extremal_n);
    if (*verify)
      return run_verify(verify_n, jobs, allow_n8, report_path, csv);
    if (*climb)
      return run_climb(climb_in, policy, plateau, seed, starts, trace_path);
    if (*claims)
      return run_claims(claims_in);
    if (*orient)
      return run_orient(orient_in);
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::out_of_range &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::domain_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const cm2::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}
