#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hlink/errors.hpp"

namespace hlink {

/// One distinct vertex pair of a pattern with its edge multiplicity (u < v).
struct MultiEdge {
  int u;
  int v;
  int multiplicity;

  friend bool operator==(const MultiEdge&, const MultiEdge&) = default;
};

/// The target multigraph H. Loopless; parallel edges are explicit
/// multiplicities. Every vertex is covered by an edge unless the pattern was
/// produced by `with_isolated_vertex`.
class PatternMultigraph {
 public:
  /// Edges given as unordered pairs; repeated pairs raise the multiplicity.
  /// Throws DomainError on loops, out-of-range endpoints, an empty vertex
  /// set, or an isolated vertex.
  PatternMultigraph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const noexcept { return vertex_count_; }
  /// Number of edges counted with multiplicity, i.e. |E(H)|.
  int edge_count() const noexcept { return static_cast<int>(slots_.size()); }

  /// Distinct pairs in first-insertion order.
  const std::vector<MultiEdge>& multi_edges() const noexcept { return multi_edges_; }

  /// Every edge with multiplicity expanded, in insertion order; slot i is the
  /// i-th path of a linkage.
  const std::vector<std::pair<int, int>>& edge_slots() const noexcept { return slots_; }

  int multiplicity(int u, int v) const;
  int degree(int u) const;
  int max_multiplicity() const;

  /// H ∪ v: one extra vertex with no edges. Only the delta-shift comparison
  /// uses this; the public parser never yields isolated vertices.
  PatternMultigraph with_isolated_vertex() const;

  friend bool operator==(const PatternMultigraph& a, const PatternMultigraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.slots_ == b.slots_;
  }

 private:
  PatternMultigraph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                    bool allow_isolated);

  int vertex_count_ = 0;
  std::vector<MultiEdge> multi_edges_;
  std::vector<std::pair<int, int>> slots_;
};

/// Parses the pattern mini-grammar:
///
///   expr := term ("+" term)*
///   term := [INT "*"] atom
///   atom := "k2" | "k3" | "p" INT | "c" INT | "star:" INT
///         | "matching:" INT | "me:" INT | "cycle:" INT
///
/// "c2" / "cycle:2" is the double edge, "cN" (N >= 3) a cycle, "me:k" a
/// k-multi-edge, "pN" a path on N vertices. Whitespace is ignored.
/// Throws ParseError with the offending offset.
PatternMultigraph make_pattern(std::string_view expression);

/// Disjoint union; q's vertices are shifted past p's.
PatternMultigraph pattern_union(const PatternMultigraph& p, const PatternMultigraph& q);

}  // namespace hlink
