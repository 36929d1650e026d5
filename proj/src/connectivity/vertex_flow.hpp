#pragma once

#include <vector>

#include "hlink/graph.hpp"

namespace hlink::detail {

/// Max flow between two non-adjacent vertices of the vertex-split digraph:
/// each vertex x becomes in(x) -> out(x) with capacity 1, each edge uv the
/// arcs out(u) -> in(v) and out(v) -> in(u). Augmentation is Dinic-style
/// (BFS levels, blocking DFS), which is O(E sqrt V) on unit vertex capacities.
class VertexFlow {
 public:
  VertexFlow(const Graph& g, Vertex source, Vertex sink);

  /// Augments until the flow value reaches `limit` or no path is left.
  int run(int limit);

  /// Vertices x with in(x) reachable and out(x) unreachable from the source
  /// in the residual graph. A minimum vertex cut when run() ended below its limit.
  std::vector<Vertex> source_side_cut() const;

 private:
  struct Arc {
    int to;
    int capacity;
  };

  static int in_node(Vertex v) { return 2 * v; }
  static int out_node(Vertex v) { return 2 * v + 1; }

  void add_arc(int from, int to, int capacity);
  bool levelize();
  int push(int node);

  int source_node_;
  int sink_node_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace hlink::detail
