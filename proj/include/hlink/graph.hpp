#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hlink/errors.hpp"

namespace hlink {

/// Dense vertex index: vertices of a graph on n vertices are 0..n-1.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Optional per-vertex display names (empty vector means "unlabeled").
using VertexLabels = std::vector<std::string>;

/// Simple undirected loopless graph. Immutable once built; cheap to share.
///
/// Neighbor lists are sorted ascending, and an adjacency bit matrix backs
/// O(1) `adjacent` queries and the bitset reachability used by the searches.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on `vertex_count` vertices.
  explicit Graph(int vertex_count);

  /// Graph with exactly the given edges; duplicates collapse.
  /// Throws DomainError on an out-of-range endpoint or a loop.
  static Graph from_edges(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }

  /// Row `v` of the adjacency bit matrix, `words_per_row()` words long.
  std::span<const std::uint64_t> adjacency_row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }
  int words_per_row() const noexcept { return words_; }

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool is_complete() const noexcept {
    return edge_count_ == static_cast<std::size_t>(n_) * (n_ - 1) / 2;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adjacency_ == b.adjacency_;
  }

 private:
  friend class GraphBuilder;

  int n_ = 0;
  int words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint64_t> bits_;
};

/// Single-owner mutable staging area for a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int vertex_count = 0);
  explicit GraphBuilder(const Graph& g);

  Vertex add_vertex();
  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }

  /// Idempotent. Throws DomainError on a loop or out-of-range endpoint.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  void add_clique(std::span<const Vertex> members);

  Graph build() const;

 private:
  void check(Vertex v) const;

  std::vector<std::set<Vertex>> adjacency_;
};

/// Alias of Graph::from_edges matching the construction primitive's name.
Graph build_graph(int vertex_count, std::span<const Edge> edges);

Graph complete_graph(int n);

/// Copy of g without the edge uv (no-op if absent).
Graph without_edge(const Graph& g, Vertex u, Vertex v);

/// Subgraph induced on `keep` (sorted, distinct); vertex i of the result is keep[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// A separation (A, B): A ∪ B = V and no edge between A∖B and B∖A.
struct Separation {
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;

  std::vector<Vertex> overlap() const;
  int order() const { return static_cast<int>(overlap().size()); }
};

/// Checks the Separation invariants against g (both sides sorted and distinct).
bool is_separation(const Graph& g, const Separation& s);

}  // namespace hlink
