#pragma once

#include <span>
#include <string>

#include "hlink/graph.hpp"

namespace hlink {

/// Undirected DOT text. Vertices are emitted in index order, then edges in
/// lexicographic order; a non-empty label becomes the node's `label`.
std::string export_dot(const Graph& g, std::span<const std::string> labels = {});

}  // namespace hlink
