#pragma once

#include <optional>
#include <vector>

#include "hlink/graph.hpp"

namespace hlink {

struct ConnectivityReport {
  int min_degree = 0;
  int kappa = 0;
  /// A vertex cut of size kappa; absent exactly when g is complete.
  std::optional<std::vector<Vertex>> witness_cut;
};

/// δ(G). Throws DomainError on the empty graph.
int min_degree(const Graph& g);

/// Maximum number of internally disjoint u–v paths. For adjacent u, v this is
/// 1 + the value in g − uv. Throws DomainError when u == v.
int local_connectivity(const Graph& g, Vertex u, Vertex v);

/// κ(G) with a witness cut (lowest-index source-side min cut of the first
/// minimizing pair). κ(K_n) = n − 1.
ConnectivityReport vertex_connectivity(const Graph& g);

/// κ(G) >= k, with flows capped at k.
bool is_k_connected(const Graph& g, int k);

/// A proper separation of order <= max_order derived from the witness cut,
/// or nullopt if none exists.
std::optional<Separation> find_separation(const Graph& g, int max_order);

}  // namespace hlink
