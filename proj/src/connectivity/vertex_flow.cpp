#include "vertex_flow.hpp"

#include <limits>
#include <queue>

namespace hlink::detail {

namespace {
// Edge arcs never bind: every unit also crosses a capacity-1 vertex arc.
constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;
}  // namespace

VertexFlow::VertexFlow(const Graph& g, Vertex source, Vertex sink)
    : source_node_(out_node(source)),
      sink_node_(in_node(sink)),
      out_arcs_(2 * static_cast<std::size_t>(g.vertex_count())),
      level_(out_arcs_.size()),
      cursor_(out_arcs_.size()) {
  arcs_.reserve(4 * (g.edge_count() + g.vertex_count()));
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (x != source && x != sink) add_arc(in_node(x), out_node(x), 1);
    for (Vertex y : g.neighbors(x)) add_arc(out_node(x), in_node(y), kUnbounded);
  }
}

void VertexFlow::add_arc(int from, int to, int capacity) {
  out_arcs_[from].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({to, capacity});
  out_arcs_[to].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({from, 0});
}

bool VertexFlow::levelize() {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> q;
  level_[source_node_] = 0;
  q.push(source_node_);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int id : out_arcs_[x]) {
      const Arc& a = arcs_[id];
      if (a.capacity > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[x] + 1;
        q.push(a.to);
      }
    }
  }
  return level_[sink_node_] >= 0;
}

int VertexFlow::push(int node) {
  if (node == sink_node_) return 1;
  for (auto& i = cursor_[node]; i < out_arcs_[node].size(); ++i) {
    const int id = out_arcs_[node][i];
    Arc& a = arcs_[id];
    if (a.capacity > 0 && level_[a.to] == level_[node] + 1 && push(a.to)) {
      --a.capacity;
      ++arcs_[id ^ 1].capacity;
      return 1;
    }
  }
  return 0;
}

int VertexFlow::run(int limit) {
  int flow = 0;
  while (flow < limit && levelize()) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    while (flow < limit && push(source_node_)) ++flow;
  }
  return flow;
}

std::vector<Vertex> VertexFlow::source_side_cut() const {
  std::vector<char> seen(out_arcs_.size(), 0);
  std::vector<int> stack{source_node_};
  seen[source_node_] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int id : out_arcs_[x]) {
      const Arc& a = arcs_[id];
      if (a.capacity > 0 && !seen[a.to]) {
        seen[a.to] = 1;
        stack.push_back(a.to);
      }
    }
  }
  std::vector<Vertex> cut;
  for (Vertex x = 0; 2 * static_cast<std::size_t>(x) < seen.size(); ++x)
    if (seen[in_node(x)] && !seen[out_node(x)]) cut.push_back(x);
  return cut;
}

}  // namespace hlink::detail
