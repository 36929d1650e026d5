// Exhaustive router for systems of internally disjoint paths.
//
// Demands are routed one at a time, each path grown vertex by vertex from
// its source. Only chordless paths are generated (the chord between the two
// endpoints excepted): any linkage can be shortcut to one of those without
// touching new vertices, so the restriction keeps the search complete.

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

#include "hlink/errors.hpp"
#include "hlink/linkage.hpp"

namespace hlink::detail {

namespace {

using Word = std::uint64_t;

struct Job {
  Vertex from;
  Vertex to;
  int original;     // index into RoutingProblem::demands
  bool reversed;    // job runs to -> from relative to the demand
  bool fixed;       // realised before the search (trivial or direct edge)
  bool no_direct;   // a parallel copy whose direct edge is already taken
  int prev_copy;    // earlier searched copy of the same pair, or -1
};

class Router {
 public:
  Router(const Graph& g, const RoutingProblem& p, const SearchBudget& budget)
      : g_(g), n_(g.vertex_count()), words_(g.words_per_row()), budget_(budget) {
    free_.assign(words_, 0);
    for (Vertex v = 0; v < n_; ++v) free_[v >> 6] |= Word{1} << (v & 63);
    auto block = [&](Vertex t) { free_[t >> 6] &= ~(Word{1} << (t & 63)); };
    for (Vertex t : p.terminals) block(t);
    for (const Demand& d : p.demands) {
      block(d.from);
      block(d.to);
    }
    reach_.resize(words_);
    frontier_.resize(words_);
    next_.resize(words_);
    plan(p);
    find_twins();
  }

  SolveOutcome run(std::size_t demand_count) {
    SolveOutcome out;
    const bool found = solve_from(0);
    out.nodes_expanded = nodes_;
    if (found) {
      out.verdict = Verdict::Found;
      PathSystem system;
      system.paths.resize(demand_count);
      for (std::size_t j = 0; j < jobs_.size(); ++j) {
        std::vector<Vertex> path = paths_[j];
        if (jobs_[j].reversed) std::reverse(path.begin(), path.end());
        system.paths[jobs_[j].original] = std::move(path);
      }
      out.paths = std::move(system);
    } else {
      out.verdict = exhausted_ ? Verdict::BudgetExceeded : Verdict::NoLinkage;
    }
    return out;
  }

 private:
  void plan(const RoutingProblem& p) {
    const auto& d = p.demands;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const Vertex a = std::min(d[i].from, d[i].to), b = std::max(d[i].from, d[i].to);
      jobs_.push_back({a, b, static_cast<int>(i), d[i].from != a, false, false, -1});
    }
    auto key = [&](const Job& j) {
      const long long w = static_cast<long long>(g_.degree(j.from)) * g_.degree(j.to);
      return std::make_tuple(w, j.from, j.to, j.original);
    };
    std::sort(jobs_.begin(), jobs_.end(),
              [&](const Job& x, const Job& y) { return key(x) < key(y); });

    for (std::size_t j = 0; j < jobs_.size(); ++j) {
      Job& job = jobs_[j];
      if (job.from == job.to) {
        job.fixed = true;
        continue;
      }
      const bool first = j == 0 || jobs_[j - 1].from != job.from || jobs_[j - 1].to != job.to;
      if (first) {
        // One copy may always take the direct edge.
        if (g_.adjacent(job.from, job.to)) job.fixed = true;
        continue;
      }
      const Job& prev = jobs_[j - 1];
      job.no_direct = g_.adjacent(job.from, job.to);
      job.prev_copy = prev.fixed ? -1 : static_cast<int>(j - 1);
    }

    paths_.resize(jobs_.size());
    touch_.assign(jobs_.size(), std::vector<int>());
    near_.assign(jobs_.size(), std::vector<Word>());
    for (std::size_t j = 0; j < jobs_.size(); ++j) {
      if (jobs_[j].fixed) {
        paths_[j] = jobs_[j].from == jobs_[j].to
                        ? std::vector<Vertex>{jobs_[j].from}
                        : std::vector<Vertex>{jobs_[j].from, jobs_[j].to};
      } else {
        touch_[j].assign(n_, 0);
        near_[j].assign(words_, 0);
      }
    }
  }

  /// Non-terminal vertices with equal open or equal closed neighbourhoods
  /// are exchanged by an automorphism fixing everything else, so a solution
  /// may be assumed to use each class in index order. Combining this with the
  /// ordering of parallel copies is not sound in general, so it is skipped then.
  void find_twins() {
    twin_prev_.assign(n_, -1);
    for (const Job& j : jobs_)
      if (j.prev_copy >= 0) return;
    for (int closed = 0; closed < 2; ++closed) {
      std::map<std::vector<Word>, Vertex> last;
      for (Vertex v = 0; v < n_; ++v) {
        if (!is_free(v)) continue;
        const auto row = g_.adjacency_row(v);
        std::vector<Word> key(row.begin(), row.end());
        if (closed) key[v >> 6] |= Word{1} << (v & 63);
        auto [it, fresh] = last.try_emplace(std::move(key), v);
        if (!fresh) {
          twin_prev_[v] = it->second;
          it->second = v;
        }
      }
    }
  }

  bool is_free(Vertex v) const { return (free_[v >> 6] >> (v & 63)) & 1U; }

  bool step() {
    ++nodes_;
    if (budget_.max_nodes && nodes_ > *budget_.max_nodes) {
      exhausted_ = true;
      return false;
    }
    return true;
  }

  /// a and b can still be joined: by the edge ab if allowed, else through a
  /// connected piece of free vertices meeting both neighbourhoods.
  bool connected(Vertex a, Vertex b, bool direct_ok) {
    if (direct_ok && g_.adjacent(a, b)) return true;
    const auto na = g_.adjacency_row(a), nb = g_.adjacency_row(b);
    bool any = false;
    for (int w = 0; w < words_; ++w) {
      reach_[w] = frontier_[w] = na[w] & free_[w];
      if (reach_[w] & nb[w]) return true;
      any |= reach_[w] != 0;
    }
    while (any) {
      std::fill(next_.begin(), next_.end(), 0);
      for (int w = 0; w < words_; ++w) {
        Word bits = frontier_[w];
        while (bits) {
          const Vertex x = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          const auto nx = g_.adjacency_row(x);
          for (int i = 0; i < words_; ++i) next_[i] |= nx[i];
        }
      }
      any = false;
      for (int w = 0; w < words_; ++w) {
        frontier_[w] = next_[w] & free_[w] & ~reach_[w];
        reach_[w] |= frontier_[w];
        if (frontier_[w] & nb[w]) return true;
        any |= frontier_[w] != 0;
      }
    }
    return false;
  }

  /// The open path of job j can still close chordlessly: its next vertex
  /// sees only the head among path vertices, later ones see none of them.
  bool can_close(std::size_t j) {
    const Vertex head = paths_[j].back(), target = jobs_[j].to;
    if (g_.adjacent(head, target)) return true;
    const auto nt = g_.adjacency_row(target);
    const auto& near = near_[j];
    bool any = false;
    std::fill(reach_.begin(), reach_.end(), 0);
    for (Vertex x : g_.neighbors(head))
      if (is_free(x) && touch_[j][x] == 1) {
        if (g_.adjacent(x, target)) return true;
        reach_[x >> 6] |= Word{1} << (x & 63);
        any = true;
      }
    frontier_ = reach_;
    while (any) {
      std::fill(next_.begin(), next_.end(), 0);
      for (int w = 0; w < words_; ++w) {
        Word bits = frontier_[w];
        while (bits) {
          const Vertex x = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          const auto nx = g_.adjacency_row(x);
          for (int i = 0; i < words_; ++i) next_[i] |= nx[i];
        }
      }
      any = false;
      for (int w = 0; w < words_; ++w) {
        frontier_[w] = next_[w] & free_[w] & ~near[w] & ~reach_[w];
        reach_[w] |= frontier_[w];
        if (frontier_[w] & nt[w]) return true;
        any |= frontier_[w] != 0;
      }
    }
    return false;
  }

  /// Every unfinished demand, and the open path of job j, can still finish.
  bool feasible(std::size_t j) {
    if (!can_close(j)) return false;
    for (std::size_t e = j + 1; e < jobs_.size(); ++e)
      if (!jobs_[e].fixed && !connected(jobs_[e].from, jobs_[e].to, !jobs_[e].no_direct))
        return false;
    return true;
  }

  /// Per-job counts of path vertices adjacent to each vertex; near_ holds
  /// the nonzero ones as a bitset.
  void touch(std::size_t j, Vertex v, int delta) {
    auto& t = touch_[j];
    auto& near = near_[j];
    for (Vertex x : g_.neighbors(v)) {
      t[x] += delta;
      if (t[x] == 0) near[x >> 6] &= ~(Word{1} << (x & 63));
      else near[x >> 6] |= Word{1} << (x & 63);
    }
  }

  bool solve_from(std::size_t j) {
    while (j < jobs_.size() && jobs_[j].fixed) ++j;
    if (j == jobs_.size()) return true;
    if (!connected(jobs_[j].from, jobs_[j].to, !jobs_[j].no_direct)) return false;
    paths_[j].assign(1, jobs_[j].from);
    touch(j, jobs_[j].from, +1);
    const bool ok = extend(j);
    touch(j, jobs_[j].from, -1);
    return ok;
  }

  bool extend(std::size_t j) {
    if (exhausted_) return false;
    auto& path = paths_[j];
    const Job& job = jobs_[j];
    const Vertex head = path.back();

    if (g_.adjacent(head, job.to) && (path.size() > 1 || !job.no_direct)) {
      // A chordless path must close here.
      if (!step()) return false;
      path.push_back(job.to);
      if (solve_from(j + 1)) return true;
      path.pop_back();
      return false;
    }

    const Vertex floor =
        path.size() == 1 && job.prev_copy >= 0 ? paths_[job.prev_copy][1] : Vertex{-1};
    for (Vertex w : g_.neighbors(head)) {
      if (w <= floor || !is_free(w) || touch_[j][w] != 1) continue;
      if (twin_prev_[w] >= 0 && is_free(twin_prev_[w])) continue;
      if (!step()) return false;
      free_[w >> 6] &= ~(Word{1} << (w & 63));
      path.push_back(w);
      touch(j, w, +1);
      if (feasible(j) && extend(j)) return true;
      touch(j, w, -1);
      path.pop_back();
      free_[w >> 6] |= Word{1} << (w & 63);
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& g_;
  const int n_;
  const int words_;
  const SearchBudget budget_;
  std::vector<Job> jobs_;
  std::vector<std::vector<Vertex>> paths_;
  std::vector<std::vector<int>> touch_;
  std::vector<Word> free_, reach_, frontier_, next_;
  std::vector<std::vector<Word>> near_;
  std::vector<Vertex> twin_prev_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

SolveOutcome route(const Graph& g, const RoutingProblem& problem, const SearchBudget& budget) {
  const int n = g.vertex_count();
  auto check = [&](Vertex v) {
    if (v < 0 || v >= n) throw DomainError("routing endpoint " + std::to_string(v) + " out of range");
  };
  for (const Demand& d : problem.demands) {
    check(d.from);
    check(d.to);
    if (d.from == d.to && !problem.fully_disjoint)
      throw DomainError("demand endpoints must differ");
  }
  for (Vertex t : problem.terminals) check(t);

  if (problem.fully_disjoint) {
    std::vector<char> used(n, 0);
    for (const Demand& d : problem.demands) {
      if (used[d.from] || (d.to != d.from && used[d.to])) return {Verdict::NoLinkage, {}, 0};
      used[d.from] = used[d.to] = 1;
    }
  }
  return Router(g, problem, budget).run(problem.demands.size());
}

}  // namespace hlink::detail
