#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "hlink/bounds.hpp"
#include "hlink/connectivity.hpp"
#include "hlink/errors.hpp"
#include "hlink/graph6.hpp"
#include "hlink/parallel.hpp"

namespace hlink {

namespace {

struct PartResult {
  int best = -1;  // largest δ of a non-H-linked graph seen
  std::uint64_t mask = 0;
  int unknown = -1;  // largest δ whose search ran out of budget
};

// Bit i of a mask is the i-th pair (u, v), u < v, in row-major order.
std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

Graph graph_of(int n, const std::vector<Edge>& pairs, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if ((mask >> i) & 1U) edges.push_back(pairs[i]);
  return Graph::from_edges(n, edges);
}

}  // namespace

ExactDeltaResult delta_exact(int k, const PatternMultigraph& h, int n, const SearchBudget& budget,
                             const EnumerationOptions& options) {
  if (k < 0) throw DomainError("k must be non-negative");
  if (n < 1) throw DomainError("n must be positive");
  if (n > options.max_n)
    throw DomainError("n = " + std::to_string(n) + " exceeds the enumeration guard of " +
                      std::to_string(options.max_n));
  if (n > 11) throw DomainError("n > 11 does not fit a 64-bit edge mask");

  const auto complete = is_h_linked(complete_graph(n), h, budget, 1);
  if (complete.decision == Decision::No)
    throw DomainError("K^" + std::to_string(n) + " is not H-linked");
  if (complete.decision == Decision::Unknown)
    throw PartialResultError("budget exhausted on K^" + std::to_string(n), 0);

  const auto pairs = all_pairs(n);
  const int c = static_cast<int>(pairs.size());
  std::vector<std::uint64_t> incident(n, 0);
  for (int i = 0; i < c; ++i) {
    incident[pairs[i].first] |= std::uint64_t{1} << i;
    incident[pairs[i].second] |= std::uint64_t{1} << i;
  }

  const int part_bits = std::min(c, 8);
  const int low_bits = c - part_bits;
  const std::size_t parts = std::size_t{1} << part_bits;
  std::vector<PartResult> results(parts);

  parallel_for(parts, options.threads, [&](std::size_t p) {
    PartResult& r = results[p];
    const std::uint64_t begin = std::uint64_t{p} << low_bits;
    const std::uint64_t end = std::uint64_t{p + 1} << low_bits;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      int d = n - 1;
      for (int v = 0; v < n && d >= k; ++v) d = std::min(d, std::popcount(mask & incident[v]));
      if (d < k || d <= r.best) continue;
      const Graph g = graph_of(n, pairs, mask);
      if (!is_k_connected(g, k)) continue;
      const auto linked = is_h_linked(g, h, budget, 1);
      if (linked.decision == Decision::No) {
        r.best = d;
        r.mask = mask;
      } else if (linked.decision == Decision::Unknown) {
        r.unknown = std::max(r.unknown, d);
      }
    }
  });

  ExactDeltaResult out;
  out.graphs_scanned = std::uint64_t{1} << c;
  int best = -1;
  std::uint64_t best_mask = 0;
  int unknown = -1;
  for (const auto& r : results) {
    if (r.best > best) {
      best = r.best;
      best_mask = r.mask;
    }
    unknown = std::max(unknown, r.unknown);
  }
  if (unknown > best)
    throw PartialResultError("budget exhausted on a graph of minimum degree " +
                                 std::to_string(unknown),
                             out.graphs_scanned);

  const int m = best < 0 ? k - 1 : best;
  out.value = std::max(k, m + 1);
  if (out.value > k) out.extremal_witness = graph_of(n, pairs, best_mask);
  return out;
}

bool delta_shift_check(int k, const PatternMultigraph& h, int n, const SearchBudget& budget,
                       const EnumerationOptions& options) {
  const auto base = delta_exact(k, h, n, budget, options);
  const auto shifted = delta_exact(k + 1, h.with_isolated_vertex(), n + 1, budget, options);
  return shifted.value == base.value + 1;
}

nlohmann::ordered_json to_json(const ExactDeltaResult& r) {
  nlohmann::ordered_json j;
  j["value"] = r.value;
  j["extremal_witness"] =
      r.extremal_witness ? nlohmann::ordered_json(encode_graph6(*r.extremal_witness)) : nullptr;
  j["graphs_scanned"] = r.graphs_scanned;
  return j;
}

}  // namespace hlink
