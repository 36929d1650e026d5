#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "hlink/connectivity.hpp"
#include "hlink/constructions.hpp"
#include "hlink/instance_json.hpp"
#include "oracles.hpp"

using namespace hlink;

namespace {

void check_claims(const ConstructedInstance& inst) {
  CAPTURE(inst.family);
  CHECK(inst.graph.vertex_count() == inst.claimed_n);
  CHECK(static_cast<int>(inst.labels.size()) == inst.claimed_n);
  CHECK(std::set<std::string>(inst.labels.begin(), inst.labels.end()).size() == inst.labels.size());
  CHECK(min_degree(inst.graph) == inst.claimed_min_degree);
  CHECK(vertex_connectivity(inst.graph).kappa == inst.claimed_kappa);
  CHECK(static_cast<int>(inst.witness_tau.images.size()) == inst.pattern().vertex_count());
}

void check_no_linkage(const ConstructedInstance& inst) {
  CAPTURE(inst.family);
  CHECK(solve_linkage(inst.graph, inst.pattern(), inst.witness_tau, SearchBudget::unbounded()).verdict ==
        Verdict::NoLinkage);
}

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return build_graph(n, edges);
}

}  // namespace

TEST_CASE("two_cliques") {
  auto p4 = two_cliques(14, TwoCliqueVariant::P4);
  check_claims(p4);
  CHECK(p4.claimed_min_degree == 7);
  CHECK(p4.witness_labels() == std::vector<std::string>{"p1", "p2", "p3", "p4"});
  check_no_linkage(p4);

  auto k2p3 = two_cliques(14, TwoCliqueVariant::K2P3);
  check_claims(k2p3);
  CHECK(k2p3.witness_labels() == std::vector<std::string>{"a", "b", "p1", "p2", "p3"});
  check_no_linkage(k2p3);

  auto p3p3 = two_cliques(15, TwoCliqueVariant::P3P3);
  check_claims(p3p3);
  CHECK(p3p3.witness_labels() == std::vector<std::string>{"p1", "q2", "p3", "q1", "p2", "q3"});
  check_no_linkage(p3p3);

  for (int n = 10; n <= 17; ++n) {
    check_claims(two_cliques(n, TwoCliqueVariant::P4));
    check_claims(two_cliques(n, TwoCliqueVariant::K2P3));
    if (n >= 12) check_claims(two_cliques(n, TwoCliqueVariant::P3P3));
  }
  CHECK_THROWS_AS(two_cliques(9, TwoCliqueVariant::P4), DomainError);
  CHECK_THROWS_AS(two_cliques(11, TwoCliqueVariant::P3P3), DomainError);
}

TEST_CASE("three_cliques_k3") {
  auto t = three_cliques_k3(11);
  check_claims(t);
  CHECK(t.claimed_min_degree == 4);
  CHECK(t.claimed_kappa == 2);
  check_no_linkage(t);

  const auto cut = vertex_connectivity(t.graph).witness_cut;
  REQUIRE(cut);
  std::vector<std::string> names;
  for (Vertex v : *cut) names.push_back(t.labels[v]);
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"u", "w"});

  auto eight = three_cliques_k3(8);
  check_claims(eight);
  CHECK(eight.claimed_min_degree == 3);
  for (int n = 8; n <= 16; ++n) check_claims(three_cliques_k3(n));
  CHECK_THROWS_AS(three_cliques_k3(7), DomainError);
}

TEST_CASE("construct_p4_k4") {
  for (int d = 4; d <= 6; ++d) {
    const auto inst = construct_p4_k4(d);
    check_claims(inst);
    CHECK(inst.claimed_n == d * d);
    CHECK(inst.claimed_kappa == 4);
    check_no_linkage(inst);
  }
  CHECK(construct_p4_k4(4).witness_labels() == std::vector<std::string>{"p1", "a3", "b1", "p4"});
  CHECK_THROWS_AS(construct_p4_k4(3), DomainError);
}

TEST_CASE("construct_p4_k5") {
  for (int d : {6, 7}) {
    const auto inst = construct_p4_k5(d);
    check_claims(inst);
    CHECK(inst.claimed_n == 4 * d * d * d - 33 * d * d + 84 * d - 58);
    CHECK(inst.claimed_n < 4 * std::pow(d - 2.7, 3));
    CHECK(inst.claimed_kappa == 5);
    CHECK(inst.witness_labels() == std::vector<std::string>{"p3", "p1", "p4", "p2"});
    CHECK(solve_linkage(inst.graph, inst.pattern(), inst.witness_tau, SearchBudget::nodes(200'000)).verdict !=
          Verdict::Found);
  }
  CHECK(construct_p4_k5(6).claimed_n == 122);
  CHECK(construct_p4_k5(7).claimed_n == 285);
  CHECK_THROWS_AS(construct_p4_k5(5), DomainError);
}

TEST_CASE("construct_k2p3_k5") {
  const int expected[] = {16, 29, 46};
  for (int d = 5; d <= 7; ++d) {
    const auto inst = construct_k2p3_k5(d);
    check_claims(inst);
    CHECK(inst.claimed_n == expected[d - 5]);
    CHECK(inst.claimed_n == 2 * d * d - 9 * d + 11);
    CHECK(inst.claimed_kappa == 5);
    check_no_linkage(inst);
  }
  CHECK_THROWS_AS(construct_k2p3_k5(4), DomainError);
}

TEST_CASE("construct_p3p3_k7") {
  for (int d : {7, 8}) {
    const auto inst = construct_p3p3_k7(d);
    check_claims(inst);
    CHECK(inst.claimed_n == 2 * d * d - 13 * d + 23);
    CHECK(inst.claimed_n < 2 * (d - 3.25) * (d - 3.25) + 2);
    CHECK(inst.claimed_kappa == 7);
    CHECK(inst.witness_labels() == std::vector<std::string>{"p1", "q2", "p3", "q1", "p2", "q3"});
  }
  CHECK(construct_p3p3_k7(7).claimed_n == 30);
  CHECK(construct_p3p3_k7(8).claimed_n == 47);
  check_no_linkage(construct_p3p3_k7(7));
  CHECK_THROWS_AS(construct_p3p3_k7(6), DomainError);
}

TEST_CASE("universal_augment") {
  const Graph wheel = universal_augment(cycle(5), 1);
  CHECK(wheel.vertex_count() == 6);
  CHECK(wheel.degree(5) == 5);
  CHECK(vertex_connectivity(wheel).kappa == 3);
  CHECK(universal_augment(cycle(5), 0) == cycle(5));
  CHECK(vertex_connectivity(universal_augment(snub_cube(), 2)).kappa == 7);

  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    const int t = std::uniform_int_distribution<int>(0, 3)(rng);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const int kappa = oracle::connectivity(g);
    CHECK(vertex_connectivity(universal_augment(g, t)).kappa == std::min(kappa + t, n + t - 1));
  }
}

TEST_CASE("snub cube asset") {
  const Graph s = snub_cube();
  CHECK(s.vertex_count() == 24);
  CHECK(s.edge_count() == 60);
  for (int v = 0; v < 24; ++v) CHECK(s.degree(v) == 5);
  CHECK(vertex_connectivity(s).kappa == 5);
  const auto sq = snub_cube_square();
  REQUIRE(sq.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(s.adjacent(sq[i], sq[(i + 1) % 4]));
  CHECK_FALSE(s.adjacent(sq[0], sq[2]));
  CHECK_FALSE(s.adjacent(sq[1], sq[3]));
}

TEST_CASE("lower-bound augmentations") {
  for (int l = 2; l <= 4; ++l) {
    const auto inst = lk2_lower_bound_graph(l);
    check_claims(inst);
    CHECK(inst.claimed_n == 24 + 2 * l - 4);
    CHECK(inst.claimed_kappa == 2 * l + 1);
    CHECK(inst.witness_pattern == "matching:" + std::to_string(l));
  }
  check_no_linkage(lk2_lower_bound_graph(2));
  check_no_linkage(lk2_lower_bound_graph(3));
  CHECK_THROWS_AS(lk2_lower_bound_graph(1), DomainError);

  const auto two = lk2p3_lower_bound_graph(2, 5);
  check_claims(two);
  CHECK(two.claimed_n == 18);
  CHECK(two.claimed_kappa == 7);
  check_no_linkage(two);
  const auto one = lk2p3_lower_bound_graph(1, 5);
  CHECK(one.graph == construct_k2p3_k5(5).graph);
  CHECK(lk2p3_lower_bound_graph(2, 6).claimed_n == 31);
  CHECK_THROWS_AS(lk2p3_lower_bound_graph(0, 5), DomainError);
  CHECK_THROWS_AS(lk2p3_lower_bound_graph(2, 4), DomainError);
}

TEST_CASE("construct_family and metadata") {
  const auto inst = construct_family("p4-k4", {{"delta", "5"}});
  CHECK(inst.graph == construct_p4_k4(5).graph);
  CHECK_THROWS_AS(construct_family("nope", {}), DomainError);
  CHECK_THROWS_AS(construct_family("p4-k4", {}), DomainError);
  CHECK_THROWS_AS(construct_family("p4-k4", {{"delta", "x"}}), DomainError);
  CHECK_THROWS_AS(construct_family("p4-k4", {{"delta", "4"}, {"extra", "1"}}), DomainError);
  CHECK_THROWS_AS(construct_family("two-cliques", {{"n", "14"}, {"variant", "q"}}), DomainError);
  for (const auto& name : family_names()) CHECK_FALSE(name.empty());

  const auto meta = instance_metadata(construct_family("two-cliques", {{"n", "14"}, {"variant", "k2p3"}}));
  CHECK(meta["family"] == "two-cliques");
  CHECK(meta["params"]["n"] == 14);
  CHECK(meta["params"]["variant"] == "k2p3");
  CHECK(meta["labels"].size() == 14);
  CHECK(meta["witness"]["pattern"] == "k2+p3");
  CHECK(meta["witness"]["tau_by_label"].size() == 5);
}
