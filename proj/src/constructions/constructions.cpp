#include "hlink/constructions.hpp"

#include <algorithm>
#include <charconv>

#include "hlink/errors.hpp"
#include "labeled_builder.hpp"

namespace hlink {

namespace {

using detail::LabeledBuilder;

std::string name(const char* stem, int i) { return stem + std::to_string(i); }
std::string name(const char* stem, int i, int j) {
  return stem + std::to_string(i) + "_" + std::to_string(j);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

ConstructedInstance finish(const LabeledBuilder& b, std::string family,
                           std::vector<std::pair<std::string, std::string>> params, int n,
                           int min_degree, int kappa, std::string pattern,
                           const std::vector<std::string>& tau) {
  ConstructedInstance inst;
  inst.family = std::move(family);
  inst.params = std::move(params);
  inst.graph = b.build();
  inst.labels = b.labels();
  inst.claimed_n = n;
  inst.claimed_min_degree = min_degree;
  inst.claimed_kappa = kappa;
  inst.witness_pattern = std::move(pattern);
  for (const auto& t : tau) inst.witness_tau.images.push_back(b.at(t));
  return inst;
}

std::string variant_name(TwoCliqueVariant v) {
  switch (v) {
    case TwoCliqueVariant::P4: return "p4";
    case TwoCliqueVariant::K2P3: return "k2p3";
    case TwoCliqueVariant::P3P3: return "p3p3";
  }
  return "?";
}

}  // namespace

std::vector<std::string> ConstructedInstance::witness_labels() const {
  std::vector<std::string> out;
  for (Vertex v : witness_tau.images) out.push_back(labels.at(v));
  return out;
}

ConstructedInstance two_cliques(int n, TwoCliqueVariant variant) {
  const int s = variant == TwoCliqueVariant::P3P3 ? 3 : 2;
  const int min_n = variant == TwoCliqueVariant::P3P3 ? 12 : 10;
  require(n >= min_n, "two_cliques(" + variant_name(variant) + ") needs n >= " +
                          std::to_string(min_n));
  const int big = (n + s + 1) / 2, small = (n + s) / 2;

  // Private terminals of each side come first in its private part.
  std::vector<std::string> left, right;
  switch (variant) {
    case TwoCliqueVariant::P4:
      left = {"p1", "p3"};
      right = {"p2", "p4"};
      break;
    case TwoCliqueVariant::K2P3:
      left = {"p2", "a"};
      right = {"p1", "b", "p3"};
      break;
    case TwoCliqueVariant::P3P3:
      left = {"p1", "p2", "p3"};
      right = {"q1", "q2", "q3"};
      break;
  }
  for (int i = static_cast<int>(left.size()) + 1; left.size() < static_cast<std::size_t>(big - s); ++i)
    left.push_back(name("l", i));
  for (int i = static_cast<int>(right.size()) + 1; right.size() < static_cast<std::size_t>(small - s); ++i)
    right.push_back(name("r", i));
  std::vector<std::string> shared;
  for (int i = 1; i <= s; ++i) shared.push_back(name("s", i));

  LabeledBuilder b;
  std::vector<std::string> g1 = left, g2 = shared;
  g1.insert(g1.end(), shared.begin(), shared.end());
  g2.insert(g2.end(), right.begin(), right.end());
  b.clique(g1);
  b.clique(g2);

  std::string pattern;
  std::vector<std::string> tau;
  int min_degree = n / 2, kappa = 0;
  switch (variant) {
    case TwoCliqueVariant::P4:
      b.edge("p1", "p4");
      pattern = "p4";
      tau = {"p1", "p2", "p3", "p4"};
      kappa = 3;
      break;
    case TwoCliqueVariant::K2P3:
      b.edge("p2", "b");
      b.edge("p1", "a");
      pattern = "k2+p3";
      tau = {"a", "b", "p1", "p2", "p3"};
      kappa = 4;
      break;
    case TwoCliqueVariant::P3P3:
      for (int i = 1; i <= 3; ++i) b.edge(name("p", i), name("q", i));
      pattern = "p3+p3";
      tau = {"p1", "q2", "p3", "q1", "p2", "q3"};
      min_degree = (n + 1) / 2;
      kappa = 6;
      break;
  }
  return finish(b, "two-cliques", {{"n", std::to_string(n)}, {"variant", variant_name(variant)}},
                n, min_degree, kappa, pattern, tau);
}

ConstructedInstance three_cliques_k3(int n) {
  require(n >= 8, "three_cliques_k3 needs n >= 8");
  const int rest = n - 2;
  LabeledBuilder b;
  std::vector<std::string> firsts;
  for (int c = 0; c < 3; ++c) {
    const int size = rest / 3 + (c < rest % 3 ? 1 : 0);
    std::vector<std::string> members;
    for (int j = 1; j <= size; ++j) members.push_back(name("c", c + 1, j));
    b.clique(members);
    firsts.push_back(members.front());
  }
  for (int c = 0; c < 3; ++c) {
    const int size = rest / 3 + (c < rest % 3 ? 1 : 0);
    for (int j = 1; j <= size; ++j) {
      b.edge(name("c", c + 1, j), "u");
      b.edge(name("c", c + 1, j), "w");
    }
  }
  return finish(b, "three-cliques-k3", {{"n", std::to_string(n)}}, n, (n + 1) / 3, 2, "k3",
                firsts);
}

ConstructedInstance construct_p4_k4(int d) {
  require(d >= 4, "construct_p4_k4 needs delta >= 4");
  auto a = [](int i) { return name("a", i); };
  auto bb = [](int i) { return i == 2 ? std::string("a1") : name("b", i); };  // a1 = b2
  auto x = [](int i) { return name("x", i); };
  auto y = [](int i) { return name("y", i); };

  LabeledBuilder b;
  for (int i = 1; i <= d - 1; ++i) {
    std::vector<std::string> z = {a(i), bb(i), x(i), y(i)};
    for (int j = 1; j <= d + 1 - 4; ++j) z.push_back(name("z", i, j));
    b.clique(z);
  }
  for (int i = 1; i <= d - 2; ++i) {
    if (i != 1) b.edge(a(i), bb(i + 1));  // a1 b2 would be a loop
    b.edge(x(i), x(i + 1));
    b.edge(y(i), y(i + 1));
  }
  // P = b1 b2 a2 b3 a3 ... b_{δ−1} a_{δ−1}, with b2 = a1.
  std::vector<std::string> p = {bb(1)};
  for (int i = 2; i <= d - 1; ++i) {
    p.push_back(bb(i));
    p.push_back(a(i));
  }
  b.edge("p1", "p4");
  for (int i = 0; i < d - 1; ++i) b.edge("p1", p[i]);
  for (std::size_t i = p.size() - (d - 1); i < p.size(); ++i) b.edge("p4", p[i]);
  return finish(b, "p4-k4", {{"delta", std::to_string(d)}}, d * d, d, 4, "p4",
                {"p1", a(d - 1), bb(1), "p4"});
}

ConstructedInstance construct_p4_k5(int d) {
  require(d >= 6, "construct_p4_k5 needs delta >= 6");
  LabeledBuilder b;
  b.edge("p1", "p2");
  b.edge("p2", "p3");
  b.edge("p3", "p4");

  // Second level: four r-paths of lengths δ−3, δ−2, δ−2, δ−3 glued at their
  // ends into one path; p_i sees every r of its segment.
  const int lengths[4] = {d - 3, d - 2, d - 2, d - 3};
  std::vector<std::vector<int>> owners;  // owners[k] = p-indices seeing r_k
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < lengths[i]; ++j) {
      if (i > 0 && j == 0) {
        owners.back().push_back(i + 1);
        continue;
      }
      owners.push_back({i + 1});
    }
  const int r_count = static_cast<int>(owners.size());
  for (int k = 1; k <= r_count; ++k) b.vertex(name("r", k));
  for (int k = 1; k < r_count; ++k) b.edge(name("r", k), name("r", k + 1));
  for (int k = 0; k < r_count; ++k)
    for (int i : owners[k]) b.edge(name("p", i), name("r", k + 1));

  // Third level: one v-block per r, outer blocks δ−4 long, inner δ−3,
  // consecutive blocks sharing an end; the blocks form a single v-path.
  std::vector<std::vector<int>> blocks;
  int v_count = 0;
  for (int k = 0; k < r_count; ++k) {
    const int size = (k == 0 || k == r_count - 1) ? d - 4 : d - 3;
    std::vector<int> block;
    for (int j = 0; j < size; ++j) {
      if (k > 0 && j == 0) {
        block.push_back(v_count);
        continue;
      }
      block.push_back(++v_count);
    }
    blocks.push_back(block);
  }
  for (int k = 1; k <= v_count; ++k) b.vertex(name("v", k));
  for (int k = 1; k < v_count; ++k) b.edge(name("v", k), name("v", k + 1));
  for (int k = 0; k < r_count; ++k)
    for (int v : blocks[k]) b.edge(name("r", k + 1), name("v", v));

  // One clique per v: v, the pair it shares with the previous clique, the
  // pair it shares with the next, and δ−4 private vertices.
  for (int k = 1; k <= v_count; ++k) {
    std::vector<std::string> z = {name("v", k), name("w", k - 1), name("x", k - 1), name("w", k),
                                  name("x", k)};
    for (int j = 1; j <= d + 1 - 5; ++j) z.push_back(name("z", k, j));
    b.clique(z);
  }
  for (const auto& end : {name("w", 0), name("x", 0)}) {
    b.edge("p1", end);
    b.edge(name("r", 1), end);
  }
  for (const auto& end : {name("w", v_count), name("x", v_count)}) {
    b.edge("p4", end);
    b.edge(name("r", r_count), end);
  }
  const int n = 4 * d * d * d - 33 * d * d + 84 * d - 58;
  return finish(b, "p4-k5", {{"delta", std::to_string(d)}}, n, d, 5, "p4",
                {"p3", "p1", "p4", "p2"});
}

ConstructedInstance construct_k2p3_k5(int d) {
  require(d >= 5, "construct_k2p3_k5 needs delta >= 5");
  const int m = 2 * d - 7;
  // Chain ends double as terminals: x_m = p1, y_m = p3, x_0 = b.
  auto x = [m](int i) { return i == m ? std::string("p1") : i == 0 ? std::string("b") : name("x", i); };
  auto y = [m](int i) { return i == m ? std::string("p3") : name("y", i); };
  auto v = [](int i) { return name("v", i); };

  LabeledBuilder b;
  b.vertex("a");
  b.vertex("b");
  b.vertex("p1");
  b.vertex("p2");
  b.vertex("p3");
  for (int i = 1; i <= m; ++i) {
    std::vector<std::string> z = {v(i), x(i - 1), y(i - 1), x(i), y(i)};
    for (int j = 1; j <= d + 1 - 5; ++j) z.push_back(name("z", i, j));
    b.clique(z);
  }
  for (const char* p : {"p1", "p2"}) {
    b.edge("a", p);
    b.edge("b", p);
  }
  b.edge("a", "p3");  // lifts deg(a) and κ to δ and 5
  b.edge("p2", y(0));
  for (int j = 1; j <= d - 3; ++j) {
    b.edge("a", v(2 * d - 6 - j));
    b.edge("p2", v(j));
  }
  for (int j = 1; j < m; ++j) b.edge(v(j), v(j + 1));
  return finish(b, "k2p3-k5", {{"delta", std::to_string(d)}}, 2 * d * d - 9 * d + 11, d, 5,
                "k2+p3", {"a", "b", "p1", "p2", "p3"});
}

ConstructedInstance construct_p3p3_k7(int d) {
  require(d >= 7, "construct_p3p3_k7 needs delta >= 7");
  const int m = 2 * d - 9;
  auto x = [m](int i) { return i == m ? std::string("p1") : i == 0 ? std::string("q1") : name("x", i); };
  auto y = [m](int i) { return i == m ? std::string("p3") : i == 0 ? std::string("q3") : name("y", i); };
  auto z = [](int i) { return name("z", i); };
  auto v = [](int i) { return name("v", i); };

  LabeledBuilder b;
  for (const char* t : {"p1", "p2", "p3", "q1", "q2", "q3"}) b.vertex(t);
  for (int i = 1; i <= m; ++i) {
    std::vector<std::string> c = {v(i), x(i - 1), y(i - 1), z(i - 1), x(i), y(i), z(i)};
    for (int j = 1; j <= d + 1 - 7; ++j) c.push_back(name("u", i, j));
    b.clique(c);
  }
  for (int i = 1; i <= 3; ++i) b.edge(name("p", i), name("q", i));
  b.edge("p1", "p2");
  b.edge("p2", "p3");
  b.edge("p2", z(m));
  b.edge("q1", "q2");
  b.edge("q2", "q3");
  b.edge("q2", z(0));
  for (int j = 1; j <= d - 4; ++j) {
    b.edge("q2", v(j));
    b.edge("p2", v(2 * d - 8 - j));
  }
  for (int j = 1; j < m; ++j) b.edge(v(j), v(j + 1));
  return finish(b, "p3p3-k7", {{"delta", std::to_string(d)}}, 2 * d * d - 13 * d + 23, d, 7,
                "p3+p3", {"p1", "q2", "p3", "q1", "p2", "q3"});
}

Graph universal_augment(const Graph& g, int t) {
  require(t >= 0, "universal_augment needs t >= 0");
  GraphBuilder b(g);
  const int n = g.vertex_count();
  for (int i = 0; i < t; ++i) {
    const Vertex u = b.add_vertex();
    for (Vertex w = 0; w < n + i; ++w) b.add_edge(u, w);
  }
  return b.build();
}

Graph snub_cube() {
  static constexpr Edge kEdges[] = {
      {0, 1},   {0, 2},   {0, 4},   {0, 5},   {0, 13},  {1, 2},   {1, 5},   {1, 6},
      {1, 8},   {2, 6},   {2, 12},  {2, 13},  {3, 4},   {3, 5},   {3, 10},  {3, 11},
      {3, 17},  {4, 5},   {4, 15},  {4, 17},  {5, 10},  {6, 7},   {6, 8},   {6, 20},
      {7, 8},   {7, 9},   {7, 18},  {7, 20},  {8, 9},   {8, 10},  {9, 10},  {9, 11},
      {9, 22},  {10, 11}, {11, 21}, {11, 22}, {12, 13}, {12, 14}, {12, 19}, {12, 20},
      {13, 14}, {13, 15}, {14, 15}, {14, 16}, {14, 19}, {15, 16}, {15, 17}, {16, 17},
      {16, 21}, {16, 23}, {17, 21}, {18, 19}, {18, 20}, {18, 22}, {18, 23}, {19, 20},
      {19, 23}, {21, 22}, {21, 23}, {22, 23}};
  return Graph::from_edges(24, kEdges);
}

std::vector<Vertex> snub_cube_square() { return {1, 8, 10, 5}; }

ConstructedInstance lk2_lower_bound_graph(int l) {
  require(l >= 2, "lk2_lower_bound_graph needs l >= 2");
  const int t = 2 * l - 4;
  const Graph base = snub_cube();
  LabeledBuilder b;
  for (Vertex v = 0; v < base.vertex_count(); ++v) b.vertex(name("s", v));
  for (auto [u, v] : base.edges()) b.edge(name("s", u), name("s", v));
  for (int i = 1; i <= t; ++i) {
    for (Vertex v = 0; v < base.vertex_count(); ++v) b.edge(name("u", i), name("s", v));
    for (int j = 1; j < i; ++j) b.edge(name("u", i), name("u", j));
  }
  // The two diagonals of a square face cross; the other pairs sit on the
  // universal vertices.
  const auto sq = snub_cube_square();
  std::vector<std::string> tau = {name("s", sq[0]), name("s", sq[2]), name("s", sq[1]),
                                  name("s", sq[3])};
  for (int i = 1; i <= t; ++i) tau.push_back(name("u", i));
  return finish(b, "lk2", {{"l", std::to_string(l)}}, 24 + t, 5 + t, 5 + t,
                "matching:" + std::to_string(l), tau);
}

ConstructedInstance lk2p3_lower_bound_graph(int l, int delta) {
  require(l >= 1, "lk2p3_lower_bound_graph needs l >= 1");
  require(delta >= 5, "lk2p3_lower_bound_graph needs delta >= 5");
  ConstructedInstance base = construct_k2p3_k5(delta);
  const int t = 2 * l - 2;
  LabeledBuilder b;
  for (const auto& label : base.labels) b.vertex(label);
  for (auto [u, v] : base.graph.edges()) b.edge(base.labels[u], base.labels[v]);
  for (int i = 1; i <= t; ++i) {
    for (const auto& label : base.labels) b.edge(name("u", i), label);
    for (int j = 1; j < i; ++j) b.edge(name("u", i), name("u", j));
  }
  std::vector<std::string> tau = {"a", "b"};
  for (int i = 1; i <= t; ++i) tau.push_back(name("u", i));
  for (const char* p : {"p1", "p2", "p3"}) tau.push_back(p);
  const std::string pattern = l == 1 ? "k2+p3" : std::to_string(l) + "*k2+p3";
  return finish(b, "lk2p3", {{"l", std::to_string(l)}, {"delta", std::to_string(delta)}},
                base.claimed_n + t, delta + t, 2 * l + 3, pattern, tau);
}

std::vector<std::string> family_names() {
  return {"two-cliques", "three-cliques-k3", "p4-k4", "p4-k5", "k2p3-k5", "p3p3-k7", "lk2", "lk2p3"};
}

namespace {

class ParamReader {
 public:
  ParamReader(std::string_view family, const std::map<std::string, std::string>& params)
      : family_(family), params_(params) {}

  int integer(const std::string& key) {
    const std::string& text = raw(key);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw DomainError("parameter " + key + "=" + text + " is not an integer");
    return value;
  }

  const std::string& raw(const std::string& key) {
    auto it = params_.find(key);
    if (it == params_.end()) throw DomainError(family_ + " needs parameter " + key);
    used_.push_back(key);
    return it->second;
  }

  void done() const {
    for (const auto& [key, value] : params_)
      if (std::find(used_.begin(), used_.end(), key) == used_.end())
        throw DomainError("unknown parameter " + key + " for family " + family_);
  }

 private:
  std::string family_;
  const std::map<std::string, std::string>& params_;
  std::vector<std::string> used_;
};

}  // namespace

ConstructedInstance construct_family(std::string_view family,
                                     const std::map<std::string, std::string>& params) {
  ParamReader p(family, params);
  if (family == "two-cliques") {
    const int n = p.integer("n");
    const std::string& v = p.raw("variant");
    TwoCliqueVariant variant;
    if (v == "p4") variant = TwoCliqueVariant::P4;
    else if (v == "k2p3") variant = TwoCliqueVariant::K2P3;
    else if (v == "p3p3") variant = TwoCliqueVariant::P3P3;
    else throw DomainError("unknown two-cliques variant " + v + " (expected p4, k2p3 or p3p3)");
    p.done();
    return two_cliques(n, variant);
  }
  if (family == "three-cliques-k3") {
    const int n = p.integer("n");
    p.done();
    return three_cliques_k3(n);
  }
  if (family == "lk2") {
    const int l = p.integer("l");
    p.done();
    return lk2_lower_bound_graph(l);
  }
  if (family == "lk2p3") {
    const int l = p.integer("l");
    const int d = p.integer("delta");
    p.done();
    return lk2p3_lower_bound_graph(l, d);
  }
  using Maker = ConstructedInstance (*)(int);
  const std::pair<std::string_view, Maker> by_delta[] = {{"p4-k4", construct_p4_k4},
                                                         {"p4-k5", construct_p4_k5},
                                                         {"k2p3-k5", construct_k2p3_k5},
                                                         {"p3p3-k7", construct_p3p3_k7}};
  for (auto [fam, make] : by_delta)
    if (family == fam) {
      const int d = p.integer("delta");
      p.done();
      return make(d);
    }
  throw DomainError("unknown family " + std::string(family));
}

}  // namespace hlink
