#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "hlink/graph.hpp"

namespace hlink::detail {

/// GraphBuilder keyed by vertex names; vertices are numbered in order of
/// first mention.
class LabeledBuilder {
 public:
  Vertex vertex(const std::string& name) {
    auto [it, inserted] = index_.try_emplace(name, builder_.vertex_count());
    if (inserted) {
      builder_.add_vertex();
      labels_.push_back(name);
    }
    return it->second;
  }

  Vertex at(const std::string& name) const { return index_.at(name); }

  void edge(const std::string& a, const std::string& b) {
    const Vertex u = vertex(a), v = vertex(b);
    builder_.add_edge(u, v);
  }

  void clique(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j) edge(names[i], names[j]);
  }

  Graph build() const { return builder_.build(); }
  const VertexLabels& labels() const { return labels_; }

 private:
  GraphBuilder builder_;
  VertexLabels labels_;
  std::unordered_map<std::string, Vertex> index_;
};

}  // namespace hlink::detail
