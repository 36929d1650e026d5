#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hlink/graph.hpp"
#include "hlink/pattern.hpp"

namespace hlink {

/// Cap on path-extension steps. `max_nodes == nullopt` means unbounded.
struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;

  static SearchBudget unbounded() { return {}; }
  static SearchBudget nodes(std::uint64_t n) { return {n}; }
  /// CLI convention: 0 means unbounded.
  static SearchBudget from_flag(std::uint64_t n) { return n == 0 ? unbounded() : nodes(n); }
};

/// τ: pattern vertex i goes to graph vertex images[i]; images are distinct.
struct TerminalInjection {
  std::vector<Vertex> images;

  friend bool operator==(const TerminalInjection&, const TerminalInjection&) = default;
  friend auto operator<=>(const TerminalInjection&, const TerminalInjection&) = default;
};

/// One vertex sequence per pattern edge slot, from τ(u) to τ(v).
struct PathSystem {
  std::vector<std::vector<Vertex>> paths;
};

enum class Verdict { Found, NoLinkage, BudgetExceeded };

struct SolveOutcome {
  Verdict verdict = Verdict::NoLinkage;
  std::optional<PathSystem> paths;  // present iff verdict == Found
  std::uint64_t nodes_expanded = 0;
};

/// Three-valued answer of the exhaustive predicates; Unknown only when the
/// budget ran out somewhere and no negative certificate was found.
enum class Decision { Yes, No, Unknown };

std::string_view to_string(Verdict v);
std::string_view to_string(Decision d);

/// Decides whether τ extends to an H-linkage: internally disjoint paths, one
/// per edge slot, whose internal vertices avoid every terminal image.
/// Complete and deterministic; throws DomainError on an invalid τ.
SolveOutcome solve_linkage(const Graph& g, const PatternMultigraph& h,
                           const TerminalInjection& tau, const SearchBudget& budget);

struct HLinkedResult {
  Decision decision = Decision::Yes;
  /// Lexicographically least τ without a linkage (when decision == No and |G| >= |H|).
  std::optional<TerminalInjection> witness;
  std::uint64_t injections_checked = 0;
  std::uint64_t nodes_expanded = 0;
};

/// Every injection τ up to automorphisms of H. The budget applies per
/// injection. `threads == 0` uses the hardware concurrency.
HLinkedResult is_h_linked(const Graph& g, const PatternMultigraph& h, const SearchBudget& budget,
                          unsigned threads = 1);

/// Automorphisms of H as permutations (perm[u] = image of u), identity first.
std::vector<std::vector<int>> pattern_automorphisms(const PatternMultigraph& h);

struct LinkedPairResult {
  Decision decision = Decision::Yes;
  std::optional<std::vector<std::pair<Vertex, Vertex>>> witness_pairing;
  std::uint64_t pairings_checked = 0;
};

/// (G, X) is linked: every pairing of 2k distinct vertices of X admits k
/// disjoint paths whose internal vertices avoid X. Requires |X| >= 2.
LinkedPairResult is_linked_pair(const Graph& g, std::span<const Vertex> x,
                                const SearchBudget& budget);

struct DoubledGraph {
  Graph graph;
  Vertex b_prime;
  Vertex c_prime;
};

/// G_{b,c}: appends b' with N(b') = N_G(b) and c' with N(c') = N_G(c),
/// neighborhoods taken in the original graph (so b' and c' are not adjacent).
DoubledGraph double_vertices(const Graph& g, Vertex b, Vertex c);

struct ObstructionSlots {
  Vertex a, b, b_prime, a_prime, c, c_prime;
};

struct ObstructionResult {
  Decision decision = Decision::Yes;
  /// Paths from a, b, b' (in that order) avoiding an a–a' pairing.
  std::optional<PathSystem> witness;
};

/// (G, {b,b'}, {c,c'}, (a,a')) is an obstruction iff every system of three
/// vertex-disjoint paths from {a,b,b'} to {a',c,c'} contains an a–a' path.
ObstructionResult is_obstruction(const Graph& g, const ObstructionSlots& slots,
                                 const SearchBudget& budget);

namespace detail {

struct Demand {
  Vertex from;
  Vertex to;
};

/// General routing instance shared by the predicates above.
struct RoutingProblem {
  std::vector<Demand> demands;
  /// Vertices that may only appear as path endpoints.
  std::vector<Vertex> terminals;
  /// Paths may not share endpoints; a demand with from == to is a one-vertex path.
  bool fully_disjoint = false;
};

SolveOutcome route(const Graph& g, const RoutingProblem& problem, const SearchBudget& budget);

}  // namespace detail

}  // namespace hlink
