// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.
// HLINK_ACCEPTANCE_BUDGET overrides the node budget of criterion 3.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hlink/bounds.hpp"
#include "hlink/cli.hpp"
#include "hlink/connectivity.hpp"
#include "hlink/constructions.hpp"
#include "hlink/graph6.hpp"
#include "hlink/linkage.hpp"
#include "oracles.hpp"

using namespace hlink;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool condition, const std::string& what) {
    if (!condition && failures_.size() < 3) failures_.push_back(what);
    ok_ = ok_ && condition;
  }
  Outcome finish(std::string summary) const {
    if (ok_) return {true, std::move(summary)};
    std::string text;
    for (const auto& f : failures_) text += (text.empty() ? "" : "; ") + f;
    return {false, text};
  }

 private:
  bool ok_ = true;
  std::vector<std::string> failures_;
};

const SearchBudget kUnbounded = SearchBudget::unbounded();

std::vector<Vertex> random_tau(std::mt19937_64& rng, int n, int k) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  return {all.begin(), all.begin() + k};
}

bool linked(const Graph& g, const PatternMultigraph& h) {
  const auto r = is_h_linked(g, h, kUnbounded);
  if (r.decision == Decision::Unknown) throw std::runtime_error("unexpected Unknown");
  return r.decision == Decision::Yes;
}

// Drops isolated vertices and renumbers the rest in order.
PatternMultigraph compact(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> index(n, -1);
  int next = 0;
  for (const auto& [u, v] : edges) {
    if (index[u] < 0) index[u] = next++;
    if (index[v] < 0) index[v] = next++;
  }
  std::vector<std::pair<int, int>> renamed;
  for (const auto& [u, v] : edges) renamed.emplace_back(index[u], index[v]);
  return PatternMultigraph(next, renamed);
}

std::vector<std::pair<int, int>> random_multigraph_edges(std::mt19937_64& rng, int vertices, int edges) {
  std::vector<std::pair<int, int>> out;
  while (static_cast<int>(out.size()) < edges) {
    const int u = static_cast<int>(rng() % vertices), v = static_cast<int>(rng() % vertices);
    if (u != v) out.emplace_back(u, v);
  }
  return out;
}

Outcome criterion_1() {
  Checker c;
  auto check = [&](const ConstructedInstance& inst, int n, int delta, int kappa) {
    const std::string name = inst.family + "(" + inst.params.front().second + ")";
    c.expect(inst.claimed_n == n && inst.graph.vertex_count() == n, name + " N");
    c.expect(min_degree(inst.graph) == delta, name + " min degree");
    c.expect(vertex_connectivity(inst.graph).kappa == kappa, name + " kappa");
  };
  for (int d : {4, 5, 6}) check(construct_p4_k4(d), d * d, d, 4);
  for (int d : {6, 7}) check(construct_p4_k5(d), 4 * d * d * d - 33 * d * d + 84 * d - 58, d, 5);
  c.expect(construct_p4_k5(6).claimed_n == 122 && construct_p4_k5(7).claimed_n == 285, "p4-k5 N values");
  const int k2p3_n[] = {16, 29, 46};
  for (int d : {5, 6, 7}) {
    check(construct_k2p3_k5(d), 2 * d * d - 9 * d + 11, d, 5);
    c.expect(construct_k2p3_k5(d).claimed_n == k2p3_n[d - 5], "k2p3-k5 N values");
  }
  const int p3p3_n[] = {30, 47};
  for (int d : {7, 8}) {
    check(construct_p3p3_k7(d), 2 * d * d - 13 * d + 23, d, 7);
    c.expect(construct_p3p3_k7(d).claimed_n == p3p3_n[d - 7], "p3p3-k7 N values");
  }
  return c.finish("10 instances, N, min degree and kappa exact");
}

Outcome criterion_2() {
  Checker c;
  const std::vector<ConstructedInstance> cases = {
      construct_p4_k4(4),
      construct_k2p3_k5(5),
      construct_p3p3_k7(7),
      two_cliques(14, TwoCliqueVariant::P4),
      two_cliques(14, TwoCliqueVariant::K2P3),
      two_cliques(15, TwoCliqueVariant::P3P3),
      three_cliques_k3(11),
  };
  std::uint64_t nodes = 0;
  for (const auto& inst : cases) {
    const auto o = solve_linkage(inst.graph, inst.pattern(), inst.witness_tau, kUnbounded);
    nodes += o.nodes_expanded;
    c.expect(o.verdict == Verdict::NoLinkage, inst.family + " witness verdict " + std::string(to_string(o.verdict)));
  }
  const auto tc = three_cliques_k3(11);
  c.expect(is_h_linked(tc.graph, make_pattern("k3"), kUnbounded, 0).decision == Decision::No,
           "three-cliques-k3(11) is K3-linked");
  return c.finish("7 witnesses NoLinkage (" + std::to_string(nodes) +
                  " nodes), three-cliques-k3(11) not K3-linked");
}

Outcome criterion_3() {
  Checker c;
  std::uint64_t budget = 1'000'000'000ULL;
  if (const char* env = std::getenv("HLINK_ACCEPTANCE_BUDGET")) budget = std::strtoull(env, nullptr, 10);
  const SearchBudget b = SearchBudget::from_flag(budget);
  std::string summary;
  auto run = [&](const ConstructedInstance& inst, bool need_exhaustive) {
    const auto o = solve_linkage(inst.graph, inst.pattern(), inst.witness_tau, b);
    const std::string name = inst.family + " N=" + std::to_string(inst.claimed_n);
    c.expect(o.verdict != Verdict::Found, name + " witness linked");
    if (need_exhaustive) c.expect(o.verdict == Verdict::NoLinkage, name + " not exhausted");
    summary += (summary.empty() ? "" : ", ") + name + " " + std::string(to_string(o.verdict));
  };
  run(construct_p4_k5(6), false);
  run(lk2_lower_bound_graph(3), true);
  run(lk2p3_lower_bound_graph(2, 5), true);
  return c.finish(summary + " (budget " + std::to_string(budget) + ")");
}

Outcome criterion_4() {
  Checker c;
  const EnumerationOptions options{7, 0};
  const auto k3 = make_pattern("k3");
  c.expect(delta_exact(2, k3, 6, kUnbounded, options).value == 3, "delta(2,K3,6)");
  const auto seven = delta_exact(2, k3, 7, kUnbounded, options);
  const auto row = paper_bounds(2, parse_hid("k3"), 7);
  c.expect(seven.value == 3 && row && row->exact && row->lower == 3, "delta(2,K3,7)");
  c.expect(delta_exact(3, k3, 6, kUnbounded, options).value == 3, "delta(3,K3,6)");
  c.expect(delta_shift_check(2, k3, 5, kUnbounded, options), "shift (2,K3,5)");
  return c.finish("delta(2,K3,6)=3, delta(2,K3,7)=3=ceil(9/3), delta(3,K3,6)=3, shift holds at (2,K3,5)");
}

Outcome criterion_5() {
  Checker c;
  std::mt19937_64 rng(501);
  std::vector<Graph> graphs;
  for (std::uint64_t mask = 0; mask < 1024; ++mask) graphs.push_back(oracle::graph_from_mask(5, mask));
  for (int n : {6, 7})
    for (int i = 0; i < 2000; ++i)
      graphs.push_back(oracle::random_graph(n, std::uniform_real_distribution<double>(0.3, 0.95)(rng), rng));

  const PatternMultigraph stars[] = {make_pattern("star:1"), make_pattern("star:2"), make_pattern("star:3")};
  const PatternMultigraph multi[] = {make_pattern("me:1"), make_pattern("me:2"), make_pattern("me:3")};
  const auto matching = make_pattern("matching:2");
  const auto cycle = make_pattern("cycle:3");
  int disagreements = 0, positives = 0;
  for (const auto& g : graphs) {
    const int n = g.vertex_count();
    const int kappa = vertex_connectivity(g).kappa;
    for (int k = 1; k <= 3; ++k) {
      const bool expect = n >= k + 1 && kappa >= k;
      positives += expect;
      disagreements += linked(g, stars[k - 1]) != expect;
      disagreements += linked(g, multi[k - 1]) != expect;
    }
    const bool two_linked = oracle::is_k_linked(g, 2);
    positives += two_linked;
    disagreements += linked(g, matching) != two_linked;
    const bool ordered = oracle::is_k_ordered(g, 3);
    positives += ordered;
    disagreements += linked(g, cycle) != ordered;
  }
  c.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
  c.expect(positives > 1000, "too few positive cases");
  return c.finish(std::to_string(graphs.size()) + " graphs x 8 patterns, 0 disagreements");
}

Outcome criterion_6() {
  Checker c;
  std::mt19937_64 rng(601);
  int menger_bad = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    const Graph g = oracle::random_graph(n, std::uniform_real_distribution<double>(0.2, 0.8)(rng), rng);
    const auto pair = random_tau(rng, n, 2);
    const int flow = local_connectivity(g, pair[0], pair[1]);
    menger_bad += flow != oracle::max_disjoint_paths(g, pair[0], pair[1]);
    const int cut = g.adjacent(pair[0], pair[1])
                        ? 1 + oracle::min_vertex_cut(without_edge(g, pair[0], pair[1]), pair[0], pair[1])
                        : oracle::min_vertex_cut(g, pair[0], pair[1]);
    menger_bad += flow != cut;
  }
  c.expect(menger_bad == 0, std::to_string(menger_bad) + " Menger disagreements");

  const char* patterns[] = {"k2", "p3", "k3", "c2", "2*k2", "p4", "star:3", "me:3", "k2+p3",
                            "c4", "k2+c2", "p5", "star:4", "me:4", "k2+k3", "c2+c2", "2*p3"};
  int linkage_bad = 0, found = 0, runs = 0;
  while (runs < 2000) {
    const int n = std::uniform_int_distribution<int>(2, 7)(rng);
    const Graph g = oracle::random_graph(n, std::uniform_real_distribution<double>(0.2, 0.9)(rng), rng);
    const auto h = make_pattern(patterns[rng() % std::size(patterns)]);
    if (h.vertex_count() > n) continue;
    ++runs;
    const auto tau = random_tau(rng, n, h.vertex_count());
    const auto o = solve_linkage(g, h, {tau}, kUnbounded);
    const bool expect = oracle::has_linkage(g, h, tau);
    found += expect;
    linkage_bad += (o.verdict == Verdict::Found) != expect;
    if (o.paths && oracle::validate_paths(g, h, tau, *o.paths)) ++linkage_bad;
  }
  c.expect(linkage_bad == 0, std::to_string(linkage_bad) + " linkage disagreements");
  return c.finish("500 Menger pairs and 2000 linkage instances (" + std::to_string(found) +
                  " linkable), 0 disagreements");
}

Outcome criterion_7() {
  Checker c;
  std::mt19937_64 rng(701);
  auto random_graph = [&] {
    const int n = std::uniform_int_distribution<int>(4, 7)(rng);
    return oracle::random_graph(n, std::uniform_real_distribution<double>(0.5, 1.0)(rng), rng);
  };
  int premises[3] = {0, 0, 0}, violations[3] = {0, 0, 0};

  for (int i = 0; i < 1000; ++i) {
    const Graph g = random_graph();
    const int hv = std::uniform_int_distribution<int>(2, 5)(rng);
    const auto edges = random_multigraph_edges(rng, hv, std::uniform_int_distribution<int>(1, 4)(rng));
    const auto h1 = compact(hv, edges);
    std::vector<std::pair<int, int>> kept;
    for (const auto& e : edges)
      if (rng() % 2) kept.push_back(e);
    if (kept.empty()) kept.push_back(edges.front());
    const auto h2 = compact(hv, kept);
    if (!linked(g, h1)) continue;
    ++premises[0];
    violations[0] += !linked(g, h2);
  }

  for (int i = 0; i < 1000;) {
    const int hv = std::uniform_int_distribution<int>(3, 5)(rng);
    const auto h1 = compact(hv, random_multigraph_edges(rng, hv, std::uniform_int_distribution<int>(2, 4)(rng)));
    std::vector<std::pair<int, int>> choices;
    for (int x = 0; x < h1.vertex_count(); ++x)
      if (h1.degree(x) == 1)
        for (int y = 0; y < h1.vertex_count(); ++y)
          if (y != x && h1.multiplicity(x, y) == 0) choices.emplace_back(x, y);
    if (choices.empty()) continue;
    ++i;
    const auto [x, y] = choices[rng() % choices.size()];
    std::vector<std::pair<int, int>> merged;
    for (auto [u, v] : h1.edge_slots()) merged.emplace_back(u == x ? y : u, v == x ? y : v);
    const auto h2 = compact(h1.vertex_count(), merged);
    const Graph g = random_graph();
    if (!linked(g, h1)) continue;
    ++premises[1];
    violations[1] += !linked(g, h2);
  }

  for (int i = 0; i < 1000; ++i) {
    const Graph g = random_graph();
    const int hv = std::uniform_int_distribution<int>(2, 4)(rng);
    auto edges = random_multigraph_edges(rng, hv, std::uniform_int_distribution<int>(1, 3)(rng));
    edges.push_back(edges.front());
    const auto h = compact(hv, edges);
    if (!linked(g, h)) continue;
    ++premises[2];
    const int k = h.max_multiplicity();
    violations[2] += vertex_connectivity(g).kappa < h.vertex_count() - 2 + k;
  }

  for (int f = 0; f < 3; ++f) {
    c.expect(violations[f] == 0, "Fact " + std::to_string(f + 1) + ": " + std::to_string(violations[f]) + " violations");
    c.expect(premises[f] >= 50, "Fact " + std::to_string(f + 1) + ": only " + std::to_string(premises[f]) +
                                    " instances with the premise");
  }
  return c.finish("Facts 1-3 on 1000 instances each (premise held " + std::to_string(premises[0]) + "/" +
                  std::to_string(premises[1]) + "/" + std::to_string(premises[2]) + " times), 0 violations");
}

Outcome criterion_8() {
  Checker c;
  std::mt19937_64 rng(801);
  int bad = 0, yes = 0;
  for (int i = 0; i < 300; ++i) {
    const int n = std::uniform_int_distribution<int>(4, 9)(rng);
    const Graph g = oracle::random_graph(n, std::uniform_real_distribution<double>(0.25, 0.7)(rng), rng);
    const auto t = random_tau(rng, n, 4);
    const Vertex a = t[0], cc = t[1], b = t[2], a2 = t[3];
    const auto d = double_vertices(g, b, cc);
    const auto r = is_obstruction(d.graph, {a, b, d.b_prime, a2, cc, d.c_prime}, kUnbounded);
    const bool no_path = !oracle::has_ordered_path(g, {a, cc, b, a2});
    yes += r.decision == Decision::Yes;
    bad += (r.decision == Decision::Yes) != no_path || r.decision == Decision::Unknown;
  }
  c.expect(bad == 0, std::to_string(bad) + " disagreements");
  const auto tc = two_cliques(14, TwoCliqueVariant::P4);
  auto at = [&](const std::string& label) {
    return static_cast<Vertex>(std::find(tc.labels.begin(), tc.labels.end(), label) - tc.labels.begin());
  };
  const auto d = double_vertices(tc.graph, at("p3"), at("p2"));
  c.expect(is_obstruction(d.graph, {at("p1"), at("p3"), d.b_prime, at("p4"), at("p2"), d.c_prime}, kUnbounded)
                   .decision == Decision::Yes,
           "doubled two-cliques(14,p4) is not an obstruction");
  return c.finish("300 random graphs (" + std::to_string(yes) +
                  " obstructions), 0 disagreements; doubled two-cliques(14,p4) is an obstruction");
}

Outcome criterion_9() {
  Checker c;
  struct Row {
    int k;
    const char* h;
    int n;
    double value;
  };
  const Row rows[] = {{7, "p4", 1000, 7},  {4, "k2+p3", 29, 15}, {2, "k3", 100, 34},
                      {6, "k2+p4", 100, 51}, {6, "2*k2+p3", 40, 21}};
  for (const auto& r : rows) {
    const auto b = paper_bounds(r.k, parse_hid(r.h), r.n);
    c.expect(b && b->exact && b->lower == r.value && b->upper == r.value,
             std::string("(") + std::to_string(r.k) + "," + r.h + "," + std::to_string(r.n) + ")");
  }
  return c.finish("5 rows exact as tabulated");
}

Outcome criterion_10() {
  Checker c;
  std::mt19937_64 rng(1001);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const Graph g = oracle::random_graph(static_cast<int>(rng() % 71),
                                         std::uniform_real_distribution<double>(0, 1)(rng), rng);
    bad += decode_graph6(encode_graph6(g)) != g;
  }
  c.expect(bad == 0, std::to_string(bad) + " graph6 round-trip failures");

  auto run = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return std::make_pair(code, out.str());
  };
  const std::vector<std::vector<std::string>> commands = {
      {"verify", "--family", "p4-k4", "--param", "delta=4"},
      {"construct", "--family", "k2p3-k5", "--param", "delta=6"},
      {"bounds", "--k", "5", "--pattern", "k2+p3", "--n", "100"},
      {"delta-exact", "--k", "2", "--pattern", "k3", "--n", "6"},
  };
  for (const auto& cmd : commands) {
    const auto first = run(cmd), second = run(cmd);
    c.expect(first.first == 0 && first == second, "non-deterministic: " + cmd[0]);
  }
  c.expect(run({"verify", "--family", "p3p3-k7", "--param", "delta=7"}).first == cli::kOk, "exit 0");
  c.expect(run({"bounds", "--k", "x"}).first == cli::kUsage, "exit 1");
  c.expect(run({"verify", "--family", "p4-k5", "--param", "delta=6", "--budget", "100"}).first ==
               cli::kInconclusive,
           "exit 3");
  c.expect(run({"connectivity", "--graph", "/nonexistent/graph.g6"}).first == cli::kIo, "exit 4");
  const std::vector<std::vector<std::string>> shipped = {
      {"two-cliques", "n=14", "variant=p4"}, {"two-cliques", "n=14", "variant=k2p3"},
      {"two-cliques", "n=15", "variant=p3p3"}, {"three-cliques-k3", "n=11"},
      {"p4-k4", "delta=4"}, {"k2p3-k5", "delta=5"}, {"lk2", "l=2"}, {"lk2p3", "l=2", "delta=5"}};
  for (const auto& s : shipped) {
    std::vector<std::string> args{"verify", "--family", s[0]};
    for (std::size_t i = 1; i < s.size(); ++i) {
      args.push_back("--param");
      args.push_back(s[i]);
    }
    c.expect(run(args).first != cli::kRefuted, "exit 2 on " + s[0]);
  }
  return c.finish("1000 graph6 round trips, 4 repeated CLI runs identical, exit codes 0/1/3/4 observed, no exit 2 on 8 shipped families");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"construction formulas", criterion_1},
      {"exhaustive non-linkage witnesses", criterion_2},
      {"budgeted non-linkage witnesses", criterion_3},
      {"exact delta reproduction", criterion_4},
      {"specialization equivalences", criterion_5},
      {"Menger and linkage oracles", criterion_6},
      {"Facts 1-3", criterion_7},
      {"obstruction equivalence", criterion_8},
      {"bounds spot checks", criterion_9},
      {"serialization and CLI contract", criterion_10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1f s", seconds);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << (i + 1) << " " << criteria[i].first << ": "
              << o.detail << " [" << timing << "]" << std::endl;
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
