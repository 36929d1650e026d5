#include "hlink/linkage.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>

#include "hlink/errors.hpp"
#include "hlink/parallel.hpp"

namespace hlink {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Found: return "Found";
    case Verdict::NoLinkage: return "NoLinkage";
    case Verdict::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::Yes: return "Yes";
    case Decision::No: return "No";
    case Decision::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

void check_vertex(const Graph& g, Vertex v, const char* what) {
  if (v < 0 || v >= g.vertex_count())
    throw DomainError(std::string(what) + " " + std::to_string(v) + " out of range");
}

detail::RoutingProblem linkage_problem(const PatternMultigraph& h, const TerminalInjection& tau) {
  detail::RoutingProblem p;
  for (auto [u, v] : h.edge_slots()) p.demands.push_back({tau.images[u], tau.images[v]});
  p.terminals = tau.images;
  return p;
}

/// Advances `tau` to the next injection [h] -> [n] in lexicographic order.
bool next_injection(std::vector<Vertex>& tau, int n, std::vector<char>& used) {
  const int h = static_cast<int>(tau.size());
  for (int i = h - 1; i >= 0; --i) {
    used[tau[i]] = 0;
    for (Vertex next = tau[i] + 1; next < n; ++next) {
      if (used[next]) continue;
      tau[i] = next;
      used[next] = 1;
      // Refill the suffix with the smallest unused vertices.
      Vertex c = 0;
      for (int j = i + 1; j < h; ++j) {
        while (used[c]) ++c;
        tau[j] = c;
        used[c] = 1;
      }
      return true;
    }
  }
  return false;
}

/// τ is the least member of its orbit {τ∘σ : σ ∈ Aut(H)}.
bool is_canonical(const std::vector<Vertex>& tau, const std::vector<std::vector<int>>& autos) {
  const std::size_t h = tau.size();
  for (std::size_t a = 1; a < autos.size(); ++a) {
    const auto& sigma = autos[a];
    for (std::size_t u = 0; u < h; ++u) {
      const Vertex mapped = tau[sigma[u]];
      if (mapped < tau[u]) return false;
      if (mapped > tau[u]) break;
    }
  }
  return true;
}

}  // namespace

SolveOutcome solve_linkage(const Graph& g, const PatternMultigraph& h,
                           const TerminalInjection& tau, const SearchBudget& budget) {
  if (static_cast<int>(tau.images.size()) != h.vertex_count())
    throw DomainError("injection length " + std::to_string(tau.images.size()) +
                      " does not match pattern order " + std::to_string(h.vertex_count()));
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex v : tau.images) {
    check_vertex(g, v, "injection image");
    if (seen[v]) throw DomainError("injection is not injective at vertex " + std::to_string(v));
    seen[v] = 1;
  }
  return detail::route(g, linkage_problem(h, tau), budget);
}

std::vector<std::vector<int>> pattern_automorphisms(const PatternMultigraph& h) {
  const int n = h.vertex_count();
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (const auto& e : h.multi_edges()) mult[e.u][e.v] = mult[e.v][e.u] = e.multiplicity;

  std::vector<std::vector<int>> out;
  std::vector<int> perm(n, -1);
  std::vector<char> taken(n, 0);
  // Backtracking over partial permutations; each assignment must preserve
  // multiplicities towards all earlier-assigned vertices.
  auto extend = [&](auto&& self, int u) -> void {
    if (u == n) {
      out.push_back(perm);
      return;
    }
    for (int img = 0; img < n; ++img) {
      if (taken[img] || h.degree(img) != h.degree(u)) continue;
      bool ok = true;
      for (int w = 0; w < u && ok; ++w) ok = mult[u][w] == mult[img][perm[w]];
      if (!ok) continue;
      perm[u] = img;
      taken[img] = 1;
      self(self, u + 1);
      taken[img] = 0;
    }
  };
  extend(extend, 0);
  return out;  // identity comes first: images are tried in ascending order
}

HLinkedResult is_h_linked(const Graph& g, const PatternMultigraph& h, const SearchBudget& budget,
                          unsigned threads) {
  HLinkedResult result;
  const int n = g.vertex_count(), k = h.vertex_count();
  if (n < k) {
    result.decision = Decision::No;
    return result;
  }
  const auto autos = pattern_automorphisms(h);

  constexpr std::size_t kBlock = 4096;
  std::vector<Vertex> tau(k);
  std::vector<char> used(n, 0);
  for (int i = 0; i < k; ++i) {
    tau[i] = i;
    used[i] = 1;
  }
  bool more = true;
  bool unknown = false;
  while (more) {
    std::vector<std::vector<Vertex>> block;
    while (more && block.size() < kBlock) {
      if (is_canonical(tau, autos)) block.push_back(tau);
      more = next_injection(tau, n, used);
    }
    std::vector<Verdict> verdicts(block.size(), Verdict::Found);
    std::vector<std::uint64_t> nodes(block.size(), 0);
    std::atomic<std::size_t> first_failure{std::numeric_limits<std::size_t>::max()};
    parallel_for(block.size(), threads, [&](std::size_t i) {
      if (i > first_failure.load()) return;
      const SolveOutcome o = solve_linkage(g, h, TerminalInjection{block[i]}, budget);
      verdicts[i] = o.verdict;
      nodes[i] = o.nodes_expanded;
      if (o.verdict == Verdict::NoLinkage) {
        std::size_t cur = first_failure.load();
        while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
        }
      }
    });
    const std::size_t stop = std::min(first_failure.load(), block.size());
    const std::size_t counted = stop < block.size() ? stop + 1 : block.size();
    for (std::size_t i = 0; i < counted; ++i) {
      ++result.injections_checked;
      result.nodes_expanded += nodes[i];
      if (verdicts[i] == Verdict::BudgetExceeded) unknown = true;
    }
    if (stop < block.size()) {
      result.decision = Decision::No;
      result.witness = TerminalInjection{block[stop]};
      return result;
    }
  }
  result.decision = unknown ? Decision::Unknown : Decision::Yes;
  return result;
}

LinkedPairResult is_linked_pair(const Graph& g, std::span<const Vertex> x_in,
                                const SearchBudget& budget) {
  std::vector<Vertex> x(x_in.begin(), x_in.end());
  std::sort(x.begin(), x.end());
  if (std::adjacent_find(x.begin(), x.end()) != x.end())
    throw DomainError("linked-pair set has repeated vertices");
  if (x.size() < 2) throw DomainError("linked-pair set needs at least two vertices");
  for (Vertex v : x) check_vertex(g, v, "linked-pair vertex");

  // Pairings of fewer vertices extend to maximal ones by pairing up spare
  // vertices of X, so only k = |X|/2 needs checking.
  const int k = static_cast<int>(x.size()) / 2;
  const int m = static_cast<int>(x.size());
  LinkedPairResult result;
  bool unknown = false;

  std::vector<int> chosen(2 * k);
  for (int i = 0; i < 2 * k; ++i) chosen[i] = i;
  std::vector<std::pair<Vertex, Vertex>> pairing;

  // Returns false to stop the enumeration (a failing pairing was found).
  auto match = [&](auto&& self, std::vector<Vertex>& rest) -> bool {
    if (rest.empty()) {
      ++result.pairings_checked;
      detail::RoutingProblem p;
      for (auto [s, t] : pairing) p.demands.push_back({s, t});
      p.terminals = x;
      p.fully_disjoint = true;
      const SolveOutcome o = detail::route(g, p, budget);
      if (o.verdict == Verdict::NoLinkage) {
        result.decision = Decision::No;
        result.witness_pairing = pairing;
        return false;
      }
      if (o.verdict == Verdict::BudgetExceeded) unknown = true;
      return true;
    }
    const Vertex first = rest.front();
    for (std::size_t i = 1; i < rest.size(); ++i) {
      std::vector<Vertex> next;
      for (std::size_t j = 1; j < rest.size(); ++j)
        if (j != i) next.push_back(rest[j]);
      pairing.emplace_back(first, rest[i]);
      const bool go_on = self(self, next);
      pairing.pop_back();
      if (!go_on) return false;
    }
    return true;
  };

  while (true) {
    std::vector<Vertex> subset;
    for (int i : chosen) subset.push_back(x[i]);
    if (!match(match, subset)) return result;
    int i = 2 * k - 1;
    while (i >= 0 && chosen[i] == m - 2 * k + i) --i;
    if (i < 0) break;
    ++chosen[i];
    for (int j = i + 1; j < 2 * k; ++j) chosen[j] = chosen[j - 1] + 1;
  }
  result.decision = unknown ? Decision::Unknown : Decision::Yes;
  return result;
}

DoubledGraph double_vertices(const Graph& g, Vertex b, Vertex c) {
  check_vertex(g, b, "vertex");
  check_vertex(g, c, "vertex");
  if (b == c) throw DomainError("double_vertices needs two distinct vertices");
  GraphBuilder builder(g);
  const Vertex bp = builder.add_vertex();
  const Vertex cp = builder.add_vertex();
  for (Vertex w : g.neighbors(b)) builder.add_edge(bp, w);
  for (Vertex w : g.neighbors(c)) builder.add_edge(cp, w);
  return {builder.build(), bp, cp};
}

ObstructionResult is_obstruction(const Graph& g, const ObstructionSlots& s,
                                 const SearchBudget& budget) {
  const Vertex all[] = {s.a, s.b, s.b_prime, s.a_prime, s.c, s.c_prime};
  for (Vertex v : all) check_vertex(g, v, "obstruction vertex");
  if (std::set<Vertex>{s.a, s.b, s.b_prime}.size() != 3 ||
      std::set<Vertex>{s.a_prime, s.c, s.c_prime}.size() != 3)
    throw DomainError("obstruction triples must each consist of three distinct vertices");

  const Vertex sinks[2] = {s.c, s.c_prime};
  ObstructionResult result;
  bool unknown = false;
  // a goes to c or c'; b and b' take the other two sinks in either order.
  for (int first = 0; first < 2; ++first) {
    const Vertex a_to = sinks[first];
    const Vertex others[2] = {s.a_prime, sinks[1 - first]};
    for (int swap = 0; swap < 2; ++swap) {
      detail::RoutingProblem p;
      p.demands = {{s.a, a_to}, {s.b, others[swap]}, {s.b_prime, others[1 - swap]}};
      p.terminals.assign(std::begin(all), std::end(all));
      p.fully_disjoint = true;
      SolveOutcome o = detail::route(g, p, budget);
      if (o.verdict == Verdict::Found) {
        result.decision = Decision::No;
        result.witness = std::move(o.paths);
        return result;
      }
      if (o.verdict == Verdict::BudgetExceeded) unknown = true;
    }
  }
  result.decision = unknown ? Decision::Unknown : Decision::Yes;
  return result;
}

}  // namespace hlink
