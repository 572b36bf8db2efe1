#pragma once

// Exhaustive labeled scan of every graph on n <= 8 vertices for the largest
// cM2, checking that each maximizer is a complete split graph whose value
// matches the closed form and that the maximizer claims hold on it.
//
// Edge masks use graph6 pair order: bit j(j-1)/2 + i is the pair (i,j), i < j.
// The mask space is cut into chunks by the high bits; each chunk is walked in
// Gray-code order over its low bits so that consecutive graphs differ in one
// edge and cM2 can be updated from the two touched vertices.

#include "cm2/claims.hpp"
#include "cm2/graph.hpp"
#include "cm2/indices.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace cm2 {

inline constexpr std::size_t max_scan_order = 8;

inline auto pair_count(std::size_t n) -> std::size_t { return n * (n - 1) / 2; }

inline auto graph_from_mask(std::size_t n, std::uint64_t mask) -> Graph {
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1U)
        g.set_edge(i, j, true);
  return g;
}

inline auto mask_from_graph(const Graph &g) -> std::uint64_t {
  if (g.order() > 11)
    throw std::invalid_argument("edge mask needs order <= 11");
  std::uint64_t mask = 0;
  std::size_t bit = 0;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i, ++bit)
      if (g.has_edge(i, j))
        mask |= std::uint64_t{1} << bit;
  return mask;
}

struct ScanOptions {
  unsigned jobs = 1;
  bool allow_n8 = false;
  /// Every this many Gray steps the incremental value is checked against a
  /// full recomputation. 0 disables the check.
  std::uint64_t validate_stride = std::uint64_t{1} << 14;
  /// log2 of the number of chunks the mask space is cut into (capped by the
  /// number of pairs).
  unsigned chunk_bits = 6;
};

struct ExtremalReport {
  std::size_t n = 0;
  IndexValue global_max = 0;
  IndexValue closed_form_max = 0;
  std::vector<std::size_t> optimal_ms;
  std::uint64_t maximizer_count = 0;
  std::uint64_t non_split_maximizers = 0;
  std::uint64_t claim_failures = 0;       // maximizers failing any claim
  std::uint64_t exceeding_closed_form = 0; // graphs with cM2 above the closed form
  std::vector<Graph> sample_witnesses;     // smallest-mask maximizers, ascending
  std::optional<Graph> first_non_split;    // smallest-mask non-split maximizer
  std::optional<Graph> first_claim_failure;
  std::uint64_t graphs_scanned = 0;
  std::uint64_t validations = 0;
  std::chrono::milliseconds elapsed{0};

  auto verified() const -> bool {
    return global_max == closed_form_max && non_split_maximizers == 0 && exceeding_closed_form == 0;
  }
};

namespace detail {

struct ScanPartial {
  IndexValue max = -1;
  std::uint64_t count = 0;
  std::uint64_t non_split = 0;
  std::uint64_t claim_failures = 0;
  std::uint64_t exceeding = 0;
  std::uint64_t scanned = 0;
  std::uint64_t validations = 0;
  std::vector<std::uint64_t> witnesses; // ascending, at most cap
  std::optional<std::uint64_t> first_non_split;
  std::optional<std::uint64_t> first_claim_failure;
};

inline auto keep_smallest(std::vector<std::uint64_t> &sorted, std::uint64_t mask, std::size_t cap) -> void {
  if (cap == 0 || (sorted.size() == cap && mask > sorted.back()))
    return;
  sorted.insert(std::lower_bound(sorted.begin(), sorted.end(), mask), mask);
  if (sorted.size() > cap)
    sorted.pop_back();
}

inline auto min_opt(std::optional<std::uint64_t> a, std::optional<std::uint64_t> b)
    -> std::optional<std::uint64_t> {
  if (!a)
    return b;
  if (!b)
    return a;
  return std::min(*a, *b);
}

/// Associative, commutative merge of two partial scans.
inline auto merge(ScanPartial a, const ScanPartial &b, std::size_t cap) -> ScanPartial {
  a.scanned += b.scanned;
  a.exceeding += b.exceeding;
  a.validations += b.validations;
  if (b.max > a.max) {
    a.max = b.max;
    a.count = b.count;
    a.non_split = b.non_split;
    a.claim_failures = b.claim_failures;
    a.witnesses = b.witnesses;
    a.first_non_split = b.first_non_split;
    a.first_claim_failure = b.first_claim_failure;
  } else if (b.max == a.max) {
    a.count += b.count;
    a.non_split += b.non_split;
    a.claim_failures += b.claim_failures;
    for (auto m : b.witnesses)
      keep_smallest(a.witnesses, m, cap);
    a.first_non_split = min_opt(a.first_non_split, b.first_non_split);
    a.first_claim_failure = min_opt(a.first_claim_failure, b.first_claim_failure);
  }
  return a;
}

class ChunkScanner {
public:
  ChunkScanner(std::size_t n, IndexValue bound, std::size_t cap, std::uint64_t validate_stride)
      : n_(n), bound_(bound), cap_(cap), validate_stride_(validate_stride) {
    for (std::size_t d = 0; d < sq_.size(); ++d)
      sq_[d] = static_cast<IndexValue>(d * d);
    std::size_t bit = 0;
    for (std::uint8_t j = 1; j < n; ++j)
      for (std::uint8_t i = 0; i < j; ++i, ++bit)
        pairs_[bit] = {i, j};
  }

  /// Scans masks base, base+1, ..., base + 2^low_bits - 1 (in Gray order).
  auto scan(std::uint64_t base, unsigned low_bits) -> ScanPartial {
    ScanPartial out;
    load(base);
    std::uint64_t mask = base;
    IndexValue value = full_value();
    visit(out, mask, value);
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    for (std::uint64_t i = 1; i < steps; ++i) {
      const auto bit = static_cast<unsigned>(std::countr_zero(i));
      value += flip(bit);
      mask ^= std::uint64_t{1} << bit;
      if (validate_stride_ != 0 && i % validate_stride_ == 0) {
        if (value != cm2(graph_from_mask(n_, mask)))
          throw std::logic_error("incremental cM2 diverged at mask " + std::to_string(mask));
        ++out.validations;
      }
      visit(out, mask, value);
    }
    return out;
  }

private:
  auto load(std::uint64_t mask) -> void {
    adj_.fill(0);
    deg_.fill(0);
    for (std::size_t bit = 0; bit < pair_count(n_); ++bit)
      if ((mask >> bit) & 1U) {
        const auto [i, j] = pairs_[bit];
        adj_[i] |= static_cast<std::uint8_t>(1U << j);
        adj_[j] |= static_cast<std::uint8_t>(1U << i);
        ++deg_[i];
        ++deg_[j];
      }
  }

  auto term(std::uint8_t a, std::uint8_t b) const -> IndexValue {
    const auto d = sq_[deg_[a]] - sq_[deg_[b]];
    return d < 0 ? -d : d;
  }

  auto full_value() const -> IndexValue {
    IndexValue total = 0;
    for (std::uint8_t i = 0; i < n_; ++i)
      for (unsigned row = adj_[i] >> (i + 1U), j = i + 1U; row != 0; row >>= 1U, ++j)
        if (row & 1U)
          total += term(i, static_cast<std::uint8_t>(j));
    return total;
  }

  /// Sum of the terms of every edge touching a or b.
  auto local_value(std::uint8_t a, std::uint8_t b) const -> IndexValue {
    IndexValue total = 0;
    for (unsigned row = adj_[a]; row != 0; row &= row - 1)
      total += term(a, static_cast<std::uint8_t>(std::countr_zero(row)));
    for (unsigned row = adj_[b] & ~(1U << a); row != 0; row &= row - 1)
      total += term(b, static_cast<std::uint8_t>(std::countr_zero(row)));
    return total;
  }

  /// Toggles one pair and returns the change in cM2.
  auto flip(unsigned bit) -> IndexValue {
    const auto [a, b] = pairs_[bit];
    const auto before = local_value(a, b);
    const bool present = (adj_[a] >> b) & 1U;
    adj_[a] ^= static_cast<std::uint8_t>(1U << b);
    adj_[b] ^= static_cast<std::uint8_t>(1U << a);
    if (present) {
      --deg_[a];
      --deg_[b];
    } else {
      ++deg_[a];
      ++deg_[b];
    }
    return local_value(a, b) - before;
  }

  auto visit(ScanPartial &out, std::uint64_t mask, IndexValue value) const -> void {
    ++out.scanned;
    if (value > bound_)
      ++out.exceeding;
    if (value < out.max)
      return;
    if (value > out.max) {
      const auto scanned = out.scanned;
      const auto exceeding = out.exceeding;
      const auto validations = out.validations;
      out = ScanPartial{};
      out.scanned = scanned;
      out.exceeding = exceeding;
      out.validations = validations;
      out.max = value;
    }
    ++out.count;
    keep_smallest(out.witnesses, mask, cap_);
    const auto g = graph_from_mask(n_, mask);
    if (!is_complete_split(g)) {
      ++out.non_split;
      out.first_non_split = min_opt(out.first_non_split, mask);
    }
    if (!check_claims(g).all_passed()) {
      ++out.claim_failures;
      out.first_claim_failure = min_opt(out.first_claim_failure, mask);
    }
  }

  std::size_t n_;
  IndexValue bound_;
  std::size_t cap_;
  std::uint64_t validate_stride_;
  std::array<IndexValue, max_scan_order> sq_{};
  std::array<std::pair<std::uint8_t, std::uint8_t>, 28> pairs_{};
  std::array<std::uint8_t, max_scan_order> adj_{};
  std::array<std::uint8_t, max_scan_order> deg_{};
};

inline auto check_scan_order(std::size_t n, bool allow_n8) -> void {
  if (n < 2 || n > max_scan_order)
    throw std::invalid_argument("exhaustive scan supports 2 <= n <= 8, got " + std::to_string(n));
  if (n == max_scan_order && !allow_n8)
    throw std::invalid_argument("n = 8 needs the explicit allow_n8 opt-in");
}

} // namespace detail

/// Visits all 2^C(n,2) labeled graphs. The result does not depend on
/// opts.jobs or opts.chunk_bits (elapsed time aside). n = 8 requires
/// opts.allow_n8 and always runs with at least 8 workers.
inline auto enumerate_extremal(std::size_t n, std::size_t sample_cap = 100, const ScanOptions &opts = {})
    -> ExtremalReport {
  detail::check_scan_order(n, opts.allow_n8);
  const auto start = std::chrono::steady_clock::now();

  const auto optimum = optimal_m(n);
  const auto pairs = static_cast<unsigned>(pair_count(n));
  const auto high_bits = std::min(opts.chunk_bits, pairs);
  const auto low_bits = pairs - high_bits;
  const std::uint64_t chunks = std::uint64_t{1} << high_bits;
  unsigned jobs = std::max(1U, opts.jobs);
  if (n == max_scan_order)
    jobs = std::max(jobs, 8U);
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, chunks));

  std::vector<detail::ScanPartial> partials(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    detail::ChunkScanner scanner(n, optimum.value, sample_cap, opts.validate_stride);
    for (auto c = next++; c < chunks && !failed; c = next++) {
      try {
        partials[c] = scanner.scan(c << low_bits, low_bits);
      } catch (...) {
        if (!failed.exchange(true))
          failure = std::current_exception();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j)
      pool.emplace_back(worker);
  }
  if (failure)
    std::rethrow_exception(failure);

  detail::ScanPartial total;
  for (const auto &p : partials)
    total = detail::merge(std::move(total), p, sample_cap);

  ExtremalReport report;
  report.n = n;
  report.global_max = total.max;
  report.closed_form_max = optimum.value;
  report.optimal_ms = optimum.ties;
  report.maximizer_count = total.count;
  report.non_split_maximizers = total.non_split;
  report.claim_failures = total.claim_failures;
  report.exceeding_closed_form = total.exceeding;
  for (auto m : total.witnesses)
    report.sample_witnesses.push_back(graph_from_mask(n, m));
  if (total.first_non_split)
    report.first_non_split = graph_from_mask(n, *total.first_non_split);
  if (total.first_claim_failure)
    report.first_claim_failure = graph_from_mask(n, *total.first_claim_failure);
  report.graphs_scanned = total.scanned;
  report.validations = total.validations;
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

struct Verdict {
  bool passed = false;
  ExtremalReport report;
  std::optional<Graph> counterexample;
};

/// Passes iff the scanned maximum equals the best closed-form value and every
/// labeled maximizer is a complete split graph.
inline auto verify_conjecture(std::size_t n, const ScanOptions &opts = {}, std::size_t sample_cap = 100)
    -> Verdict {
  Verdict v;
  v.report = enumerate_extremal(n, sample_cap, opts);
  v.passed = v.report.verified();
  if (!v.passed) {
    if (v.report.first_non_split)
      v.counterexample = v.report.first_non_split;
    else if (!v.report.sample_witnesses.empty())
      v.counterexample = v.report.sample_witnesses.front();
  }
  return v;
}

} // namespace cm2
