#include "hlink/graph.hpp"

#include <algorithm>
#include <iterator>

namespace hlink {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw DomainError("vertex count must be non-negative");
  n_ = vertex_count;
  words_ = (n_ + 63) / 64;
  adjacency_.resize(n_);
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges) {
  GraphBuilder b(vertex_count);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

GraphBuilder::GraphBuilder(int vertex_count) {
  if (vertex_count < 0) throw DomainError("vertex count must be non-negative");
  adjacency_.resize(vertex_count);
}

GraphBuilder::GraphBuilder(const Graph& g) : adjacency_(g.vertex_count()) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    adjacency_[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
}

Vertex GraphBuilder::add_vertex() {
  adjacency_.emplace_back();
  return static_cast<Vertex>(adjacency_.size() - 1);
}

void GraphBuilder::check(Vertex v) const {
  if (v < 0 || v >= vertex_count())
    throw DomainError("vertex " + std::to_string(v) + " out of range [0," +
                      std::to_string(vertex_count()) + ")");
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) throw DomainError("loop edge at vertex " + std::to_string(u));
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
}

void GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  adjacency_[u].erase(v);
  adjacency_[v].erase(u);
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  check(u);
  check(v);
  return adjacency_[u].contains(v);
}

void GraphBuilder::add_clique(std::span<const Vertex> members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) add_edge(members[i], members[j]);
}

Graph GraphBuilder::build() const {
  Graph g(vertex_count());
  std::size_t twice = 0;
  for (Vertex u = 0; u < g.n_; ++u) {
    g.adjacency_[u].assign(adjacency_[u].begin(), adjacency_[u].end());
    twice += adjacency_[u].size();
    for (Vertex v : adjacency_[u])
      g.bits_[static_cast<std::size_t>(u) * g.words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  }
  g.edge_count_ = twice / 2;
  return g;
}

Graph build_graph(int vertex_count, std::span<const Edge> edges) {
  return Graph::from_edges(vertex_count, edges);
}

Graph complete_graph(int n) {
  if (n < 0) throw DomainError("complete_graph: n must be non-negative");
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph without_edge(const Graph& g, Vertex u, Vertex v) {
  GraphBuilder b(g);
  b.remove_edge(u, v);
  return b.build();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  GraphBuilder b(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (Vertex w : g.neighbors(keep[i]))
      if (index[w] > static_cast<int>(i)) b.add_edge(static_cast<Vertex>(i), index[w]);
  return b.build();
}

std::vector<Vertex> Separation::overlap() const {
  std::vector<Vertex> out;
  std::set_intersection(side_a.begin(), side_a.end(), side_b.begin(), side_b.end(),
                        std::back_inserter(out));
  return out;
}

bool is_separation(const Graph& g, const Separation& s) {
  const int n = g.vertex_count();
  std::vector<char> in_a(n, 0), in_b(n, 0);
  for (Vertex v : s.side_a) {
    if (v < 0 || v >= n) return false;
    in_a[v] = 1;
  }
  for (Vertex v : s.side_b) {
    if (v < 0 || v >= n) return false;
    in_b[v] = 1;
  }
  for (Vertex v = 0; v < n; ++v)
    if (!in_a[v] && !in_b[v]) return false;
  for (auto [u, v] : g.edges()) {
    const bool u_a_only = in_a[u] && !in_b[u], u_b_only = in_b[u] && !in_a[u];
    const bool v_a_only = in_a[v] && !in_b[v], v_b_only = in_b[v] && !in_a[v];
    if ((u_a_only && v_b_only) || (u_b_only && v_a_only)) return false;
  }
  return true;
}

}  // namespace hlink
