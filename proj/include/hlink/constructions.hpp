#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hlink/graph.hpp"
#include "hlink/linkage.hpp"
#include "hlink/pattern.hpp"

namespace hlink {

/// A generated extremal graph, the values it is claimed to have, and the
/// terminal placement that is claimed to admit no linkage.
struct ConstructedInstance {
  std::string family;
  /// Parameters as given, in a stable order.
  std::vector<std::pair<std::string, std::string>> params;
  Graph graph;
  VertexLabels labels;  // one entry per vertex
  int claimed_n = 0;
  int claimed_min_degree = 0;
  int claimed_kappa = 0;
  std::string witness_pattern;  // pattern mini-grammar
  TerminalInjection witness_tau;

  PatternMultigraph pattern() const { return make_pattern(witness_pattern); }
  std::vector<std::string> witness_labels() const;
};

enum class TwoCliqueVariant { P4, K2P3, P3P3 };

/// Two cliques of sizes ⌈(n+s)/2⌉ and ⌊(n+s)/2⌋ sharing s vertices, plus the
/// variant's cross edges. Requires n >= 10 (n >= 12 for P3P3).
ConstructedInstance two_cliques(int n, TwoCliqueVariant variant);

/// Three cliques on n−2 vertices (sizes differ by at most one, larger first)
/// joined to two independent vertices u, w. Requires n >= 8.
ConstructedInstance three_cliques_k3(int n);

/// δ−1 cliques of order δ+1 chained through a, b, x, y; N = δ². Requires δ >= 4.
ConstructedInstance construct_p4_k4(int delta);

/// Three-level chain construction with N = 4δ³−33δ²+84δ−58. Requires δ >= 6.
ConstructedInstance construct_p4_k5(int delta);

/// 2δ−7 cliques of order δ+1 chained on pairs; N = 2δ²−9δ+11. Requires δ >= 5.
ConstructedInstance construct_k2p3_k5(int delta);

/// 2δ−9 cliques of order δ+1 chained on triples; N = 2δ²−13δ+23. Requires δ >= 7.
ConstructedInstance construct_p3p3_k7(int delta);

/// Appends t vertices adjacent to every other vertex and to each other.
Graph universal_augment(const Graph& g, int t);

/// The 24-vertex snub cube: planar, 5-regular, 5-connected, 6 square faces.
Graph snub_cube();

/// A square face of the snub cube in cyclic order.
std::vector<Vertex> snub_cube_square();

/// Snub cube plus 2l−4 universal vertices; not l-linked. Requires l >= 2.
ConstructedInstance lk2_lower_bound_graph(int l);

/// construct_k2p3_k5(δ) plus 2l−2 universal vertices. Requires l >= 1, δ >= 5.
ConstructedInstance lk2p3_lower_bound_graph(int l, int delta);

/// Family names accepted by construct_family.
std::vector<std::string> family_names();

/// Builds a family from textual parameters, e.g. ("p4-k4", {{"delta","4"}}).
/// Throws DomainError on an unknown family, a missing, unknown or malformed
/// parameter, or a parameter out of range.
ConstructedInstance construct_family(std::string_view family,
                                     const std::map<std::string, std::string>& params);

}  // namespace hlink
