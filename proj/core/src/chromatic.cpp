#include <algorithm>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

#include "loccol/error.hpp"
#include "loccol/solvers.hpp"

namespace loccol {

namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<Bits> adjacency_bits(const Graph& g, bool complement) {
  const int n = g.order();
  std::vector<Bits> rows(n, Bits(n));
  for (auto [u, v] : g.edges()) {
    rows[u].set(v);
    rows[v].set(u);
  }
  if (complement) {
    for (int v = 0; v < n; ++v) {
      rows[v].flip();
      rows[v].reset(v);
    }
  }
  return rows;
}

// Maximum clique by branch and bound with a greedy-coloring bound.
class CliqueSearch {
 public:
  CliqueSearch(std::vector<Bits> adj, BudgetMeter& meter) : adj_(std::move(adj)), meter_(meter) {}

  std::vector<Vertex> run() {
    Bits all(adj_.size());
    all.set();
    std::vector<Vertex> current;
    expand(current, all);
    return best_;
  }

 private:
  void expand(std::vector<Vertex>& current, Bits candidates) {
    if (!meter_.tick()) return;
    if (candidates.none()) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    // colour classes give an upper bound on what the candidates can add
    std::vector<Vertex> order;
    std::vector<int> bound;
    {
      Bits uncolored = candidates;
      int color = 0;
      while (uncolored.any()) {
        ++color;
        Bits available = uncolored;
        while (available.any()) {
          auto v = available.find_first();
          available.reset(v);
          available &= ~adj_[v];
          uncolored.reset(v);
          order.push_back(static_cast<Vertex>(v));
          bound.push_back(color);
        }
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current.size() + bound[i] <= best_.size()) return;
      const Vertex v = order[i];
      current.push_back(v);
      expand(current, candidates & adj_[v]);
      current.pop_back();
      candidates.reset(v);
      if (meter_.exhausted()) return;
    }
  }

  std::vector<Bits> adj_;
  BudgetMeter& meter_;
  std::vector<Vertex> best_;
};

class Dsatur {
 public:
  Dsatur(const Graph& g, BudgetMeter& meter) : g_(g), meter_(meter), n_(g.order()) {}

  // Greedy DSATUR; returns the number of colors and fills best_.
  int greedy() {
    reset(n_ + 1);
    for (int step = 0; step < n_; ++step) {
      const Vertex v = select();
      int c = 0;
      while (count_[v][c] > 0) ++c;
      assign(v, c);
    }
    best_ = color_;
    best_count_ = used_;
    return used_;
  }

  // Improves on greedy(); stops at `lower`.
  void exact(int lower) {
    lower_ = lower;
    if (best_count_ <= lower_) return;
    reset(best_count_);
    search(0);
  }

  int best_count() const { return best_count_; }
  const std::vector<int>& best() const { return best_; }

 private:
  void reset(int palette) {
    color_.assign(n_, -1);
    count_.assign(n_, std::vector<int>(palette + 1, 0));
    saturation_.assign(n_, 0);
    used_ = 0;
    uses_.assign(palette + 1, 0);
  }

  Vertex select() const {
    Vertex pick = -1;
    int best_sat = -1, best_deg = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      int deg = 0;
      for (Vertex u : g_.neighbors(v)) deg += color_[u] < 0;
      if (saturation_[v] > best_sat || (saturation_[v] == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = saturation_[v];
        best_deg = deg;
      }
    }
    return pick;
  }

  void assign(Vertex v, int c) {
    color_[v] = c;
    if (uses_[c]++ == 0) ++used_;
    for (Vertex u : g_.neighbors(v)) {
      if (count_[u][c]++ == 0) ++saturation_[u];
    }
  }

  void unassign(Vertex v) {
    const int c = color_[v];
    color_[v] = -1;
    if (--uses_[c] == 0) --used_;
    for (Vertex u : g_.neighbors(v)) {
      if (--count_[u][c] == 0) --saturation_[u];
    }
  }

  void search(int colored) {
    if (best_count_ <= lower_ || !meter_.tick()) return;
    if (colored == n_) {
      best_ = color_;
      best_count_ = used_;
      return;
    }
    const Vertex v = select();
    // colors 0..used_-1, plus one fresh color if that can still improve
    const int limit = std::min(used_ + 1, best_count_ - 1);
    for (int c = 0; c < limit; ++c) {
      if (count_[v][c] > 0) continue;
      assign(v, c);
      search(colored + 1);
      unassign(v);
      if (best_count_ <= lower_ || meter_.exhausted()) return;
    }
  }

  const Graph& g_;
  BudgetMeter& meter_;
  int n_;
  int lower_ = 0;
  std::vector<int> color_;
  std::vector<std::vector<int>> count_;
  std::vector<int> saturation_;
  std::vector<int> uses_;
  int used_ = 0;
  std::vector<int> best_;
  int best_count_ = 0;
};

void finish(SolveReport& r, const BudgetMeter& meter) {
  r.nodes = meter.nodes();
  r.elapsed = meter.elapsed();
  r.exact = !meter.exhausted();
  if (r.exact) r.bound = r.value;
}

}  // namespace

std::vector<Vertex> maximum_clique(const Graph& g) {
  BudgetMeter meter(Budget::unlimited());
  auto clique = CliqueSearch(adjacency_bits(g, false), meter).run();
  std::sort(clique.begin(), clique.end());
  return clique;
}

SolveReport chromatic_number(const Graph& g, const SolverOptions& opts) {
  if (g.order() == 0) throw Error(ErrorCode::BadParameter, "empty graph");
  BudgetMeter meter(opts.budget);
  SolveReport r;
  auto clique = CliqueSearch(adjacency_bits(g, false), meter).run();
  const int lower = std::max<int>(1, static_cast<int>(clique.size()));
  Dsatur dsatur(g, meter);
  dsatur.greedy();
  if (!meter.exhausted()) dsatur.exact(lower);
  r.value = dsatur.best_count();
  r.bound = lower;
  r.coloring = Coloring{dsatur.best()};
  finish(r, meter);
  return r;
}

SolveReport independence_number(const Graph& g, const SolverOptions& opts) {
  if (g.order() == 0) throw Error(ErrorCode::BadParameter, "empty graph");
  BudgetMeter meter(opts.budget);
  SolveReport r;
  auto set = CliqueSearch(adjacency_bits(g, true), meter).run();
  std::sort(set.begin(), set.end());
  r.value = static_cast<int>(set.size());
  r.bound = g.order();  // trivial upper bound until proven
  r.vertex_set = std::move(set);
  finish(r, meter);
  return r;
}

std::optional<Coloring> two_coloring(const Graph& g) {
  const int n = g.order();
  Coloring c{std::vector<int>(n, -1)};
  for (Vertex s = 0; s < n; ++s) {
    if (c.colors[s] >= 0) continue;
    c.colors[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex u : g.neighbors(v)) {
        if (c.colors[u] < 0) {
          c.colors[u] = 1 - c.colors[v];
          queue.push_back(u);
        } else if (c.colors[u] == c.colors[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return c;
}

std::uint64_t for_each_proper_coloring(const Graph& g,
                                       const std::function<bool(const Coloring&)>& visit) {
  const int n = g.order();
  Coloring c{std::vector<int>(n, -1)};
  std::uint64_t visited = 0;
  bool stop = false;
  std::function<void(Vertex, int)> rec = [&](Vertex v, int used) {
    if (stop) return;
    if (v == n) {
      ++visited;
      stop = !visit(c);
      return;
    }
    for (int col = 0; col <= used && !stop; ++col) {
      bool clash = false;
      for (Vertex u : g.neighbors(v)) {
        if (u < v && c.colors[u] == col) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      c.colors[v] = col;
      rec(v + 1, std::max(used, col + 1));
      c.colors[v] = -1;
    }
  };
  rec(0, 0);
  return visited;
}

}  // namespace loccol
