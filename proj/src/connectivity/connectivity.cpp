#include "hlink/connectivity.hpp"

#include <algorithm>
#include <limits>

#include "vertex_flow.hpp"

namespace hlink {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.vertex_count())
    throw DomainError("vertex " + std::to_string(v) + " out of range");
}

Vertex min_degree_vertex(const Graph& g) {
  Vertex best = 0;
  for (Vertex v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) < g.degree(best)) best = v;
  return best;
}

/// Walks the Esfahanian–Hakimi candidate pairs for a minimum-degree vertex v:
/// (v, w) for every non-neighbor w, then every non-adjacent pair inside N(v).
/// Some minimum vertex cut separates one of these pairs.
template <typename Visit>
void for_each_candidate_pair(const Graph& g, Visit&& visit) {
  const Vertex v = min_degree_vertex(g);
  for (Vertex w = 0; w < g.vertex_count(); ++w)
    if (w != v && !g.adjacent(v, w))
      if (!visit(v, w)) return;
  const auto nbrs = g.neighbors(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (!g.adjacent(nbrs[i], nbrs[j]))
        if (!visit(nbrs[i], nbrs[j])) return;
}

}  // namespace

int min_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw DomainError("min_degree of the empty graph");
  return g.degree(min_degree_vertex(g));
}

int local_connectivity(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw DomainError("local_connectivity needs two distinct vertices");
  if (g.adjacent(u, v)) return 1 + local_connectivity(without_edge(g, u, v), u, v);
  detail::VertexFlow flow(g, u, v);
  return flow.run(std::numeric_limits<int>::max());
}

ConnectivityReport vertex_connectivity(const Graph& g) {
  if (g.vertex_count() == 0) throw DomainError("vertex_connectivity of the empty graph");
  ConnectivityReport report;
  report.min_degree = min_degree(g);
  if (g.is_complete()) {
    report.kappa = g.vertex_count() - 1;
    return report;
  }
  int best = std::numeric_limits<int>::max();
  std::vector<Vertex> cut;
  for_each_candidate_pair(g, [&](Vertex a, Vertex b) {
    detail::VertexFlow flow(g, a, b);
    const int limit = std::min(best, report.min_degree + 1);
    const int value = flow.run(limit);
    if (value < best) {
      best = value;
      cut = flow.source_side_cut();
    }
    return best > 0;
  });
  report.kappa = best;
  report.witness_cut = std::move(cut);
  return report;
}

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) return true;
  if (g.vertex_count() == 0) return false;
  if (g.is_complete()) return g.vertex_count() - 1 >= k;
  if (min_degree(g) < k) return false;
  bool ok = true;
  for_each_candidate_pair(g, [&](Vertex a, Vertex b) {
    detail::VertexFlow flow(g, a, b);
    ok = flow.run(k) >= k;
    return ok;
  });
  return ok;
}

std::optional<Separation> find_separation(const Graph& g, int max_order) {
  if (max_order < 0) throw DomainError("find_separation: max_order must be non-negative");
  if (g.vertex_count() == 0) return std::nullopt;
  const ConnectivityReport report = vertex_connectivity(g);
  if (!report.witness_cut || report.kappa > max_order) return std::nullopt;

  const int n = g.vertex_count();
  std::vector<char> in_cut(n, 0), in_component(n, 0);
  for (Vertex x : *report.witness_cut) in_cut[x] = 1;
  Vertex start = 0;
  while (in_cut[start]) ++start;
  std::vector<Vertex> stack{start};
  in_component[start] = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x))
      if (!in_cut[y] && !in_component[y]) {
        in_component[y] = 1;
        stack.push_back(y);
      }
  }
  Separation sep;
  for (Vertex x = 0; x < n; ++x) {
    if (in_component[x] || in_cut[x]) sep.side_a.push_back(x);
    if (!in_component[x]) sep.side_b.push_back(x);
  }
  return sep;
}

}  // namespace hlink
