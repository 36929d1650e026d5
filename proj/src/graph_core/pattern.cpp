#include "hlink/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>

namespace hlink {

PatternMultigraph::PatternMultigraph(int vertex_count,
                                     const std::vector<std::pair<int, int>>& edges)
    : PatternMultigraph(vertex_count, edges, false) {}

PatternMultigraph::PatternMultigraph(int vertex_count,
                                     const std::vector<std::pair<int, int>>& edges,
                                     bool allow_isolated)
    : vertex_count_(vertex_count) {
  if (vertex_count < 1) throw DomainError("pattern must have at least one vertex");
  std::vector<int> degree(vertex_count, 0);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
      throw DomainError("pattern edge endpoint out of range");
    if (a == b) throw DomainError("pattern edges must not be loops");
    const int u = std::min(a, b), v = std::max(a, b);
    auto it = std::find_if(multi_edges_.begin(), multi_edges_.end(),
                           [&](const MultiEdge& e) { return e.u == u && e.v == v; });
    if (it == multi_edges_.end())
      multi_edges_.push_back({u, v, 1});
    else
      ++it->multiplicity;
    slots_.emplace_back(u, v);
    ++degree[u];
    ++degree[v];
  }
  if (!allow_isolated) {
    for (int v = 0; v < vertex_count; ++v)
      if (degree[v] == 0)
        throw DomainError("pattern vertex " + std::to_string(v) + " is isolated");
  }
}

int PatternMultigraph::multiplicity(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (const auto& e : multi_edges_)
    if (e.u == u && e.v == v) return e.multiplicity;
  return 0;
}

int PatternMultigraph::degree(int u) const {
  int d = 0;
  for (auto [a, b] : slots_) d += (a == u) + (b == u);
  return d;
}

int PatternMultigraph::max_multiplicity() const {
  int m = 0;
  for (const auto& e : multi_edges_) m = std::max(m, e.multiplicity);
  return m;
}

PatternMultigraph PatternMultigraph::with_isolated_vertex() const {
  return PatternMultigraph(vertex_count_ + 1, slots_, true);
}

PatternMultigraph pattern_union(const PatternMultigraph& p, const PatternMultigraph& q) {
  std::vector<std::pair<int, int>> edges = p.edge_slots();
  for (auto [u, v] : q.edge_slots())
    edges.emplace_back(u + p.vertex_count(), v + p.vertex_count());
  return PatternMultigraph(p.vertex_count() + q.vertex_count(), edges);
}

namespace {

std::vector<std::pair<int, int>> path_edges(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

class PatternParser {
 public:
  explicit PatternParser(std::string_view text) {
    // Keep original offsets so diagnostics point into the caller's string.
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[i]))));
        offsets_.push_back(i);
      }
    end_offset_ = text.size();
  }

  PatternMultigraph parse() {
    if (chars_.empty()) fail("empty pattern expression");
    std::optional<PatternMultigraph> result = term();
    while (pos_ < chars_.size()) {
      expect('+');
      result = pattern_union(*result, term());
    }
    return *result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(pos_ < offsets_.size() ? offsets_[pos_] : end_offset_, message);
  }

  bool peek_digit() const { return pos_ < chars_.size() && std::isdigit(chars_[pos_]); }

  bool accept(std::string_view word) {
    if (chars_.size() - pos_ < word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i)
      if (chars_[pos_ + i] != word[i]) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    if (pos_ >= chars_.size() || chars_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer() {
    if (!peek_digit()) fail("expected an integer");
    long long value = 0;
    while (peek_digit()) {
      value = value * 10 + (chars_[pos_] - '0');
      if (value > 1'000'000) fail("integer too large");
      ++pos_;
    }
    return static_cast<int>(value);
  }

  PatternMultigraph term() {
    int copies = 1;
    if (peek_digit()) {
      const std::size_t start = pos_;
      copies = integer();
      if (pos_ >= chars_.size() || chars_[pos_] != '*') {
        pos_ = start;
        fail("expected '*' after multiplier");
      }
      ++pos_;
      if (copies < 1) {
        pos_ = start;
        fail("multiplier must be at least 1");
      }
    }
    PatternMultigraph one = atom();
    PatternMultigraph acc = one;
    for (int i = 1; i < copies; ++i) acc = pattern_union(acc, one);
    return acc;
  }

  int positive(int minimum, const char* what) {
    const std::size_t start = pos_;
    const int value = integer();
    if (value < minimum) {
      pos_ = start;
      fail(std::string(what) + " needs a parameter of at least " + std::to_string(minimum));
    }
    return value;
  }

  PatternMultigraph atom() {
    const std::size_t start = pos_;
    if (accept("star:")) {
      const int k = positive(1, "star");
      std::vector<std::pair<int, int>> e;
      for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
      return PatternMultigraph(k + 1, e);
    }
    if (accept("matching:")) {
      const int l = positive(1, "matching");
      std::vector<std::pair<int, int>> e;
      for (int i = 0; i < l; ++i) e.emplace_back(2 * i, 2 * i + 1);
      return PatternMultigraph(2 * l, e);
    }
    if (accept("me:")) {
      const int k = positive(1, "multi-edge");
      return PatternMultigraph(2, std::vector<std::pair<int, int>>(k, {0, 1}));
    }
    if (accept("cycle:")) return cycle(positive(2, "cycle"));
    if (accept("k")) {
      const int size = integer();
      if (size == 2) return PatternMultigraph(2, {{0, 1}});
      if (size == 3) return PatternMultigraph(3, {{0, 1}, {1, 2}, {0, 2}});
      pos_ = start;
      fail("only k2 and k3 are complete-graph atoms");
    }
    if (accept("p")) {
      const int n = positive(2, "path");
      return PatternMultigraph(n, path_edges(n));
    }
    if (accept("c")) return cycle(positive(2, "cycle"));
    fail("unknown pattern atom");
  }

  PatternMultigraph cycle(int k) {
    if (k == 2) return PatternMultigraph(2, {{0, 1}, {0, 1}});
    std::vector<std::pair<int, int>> e = path_edges(k);
    e.emplace_back(k - 1, 0);
    return PatternMultigraph(k, e);
  }

  std::vector<char> chars_;
  std::vector<std::size_t> offsets_;
  std::size_t end_offset_ = 0;
  std::size_t pos_ = 0;
};

}  // namespace

PatternMultigraph make_pattern(std::string_view expression) {
  return PatternParser(expression).parse();
}

}  // namespace hlink
