// Exact local and directed local chromatic numbers.
//
// Both are the same search: colorings are enumerated as canonical set
// partitions (a vertex may open at most one fresh color) and a partial
// coloring is cut as soon as some vertex already sees as many colors in its
// watched neighborhood as the incumbent allows. For psi the watched
// neighborhood is N(v), for psi_d it is N+(v).

#include <algorithm>

#include "loccol/coloring.hpp"
#include "loccol/error.hpp"
#include "loccol/solvers.hpp"

namespace loccol {

namespace {

using AdjacencyLists = std::vector<std::vector<Vertex>>;

// Smallest-last elimination order, reversed; ties go to the smaller index.
std::vector<Vertex> degeneracy_order(const AdjacencyLists& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> degree(n);
  std::vector<bool> removed(n, false);
  for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].size());
  std::vector<Vertex> elimination;
  elimination.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!removed[v] && (pick < 0 || degree[v] < degree[pick])) pick = v;
    }
    removed[pick] = true;
    elimination.push_back(pick);
    for (Vertex u : adj[pick]) {
      if (!removed[u]) --degree[u];
    }
  }
  std::reverse(elimination.begin(), elimination.end());
  return elimination;
}

class LocalSearch {
 public:
  // conflicts: underlying undirected adjacency (properness).
  // watchers[v]: vertices w such that v lies in w's watched neighborhood.
  LocalSearch(AdjacencyLists conflicts, AdjacencyLists watchers, BudgetMeter& meter)
      : conflicts_(std::move(conflicts)),
        watchers_(std::move(watchers)),
        meter_(meter),
        n_(static_cast<int>(conflicts_.size())),
        order_(degeneracy_order(conflicts_)) {
    color_.assign(n_, -1);
    clash_.assign(n_, std::vector<int>(n_ + 1, 0));
    seen_.assign(n_, std::vector<int>(n_ + 1, 0));
    distinct_.assign(n_, 0);
    histogram_.assign(n_ + 2, 0);
    histogram_[0] = n_;
  }

  // Returns the best value; best_coloring() holds the witness.
  int run(int lower) {
    lower_ = lower;
    seed_with_first_fit();
    if (best_value_ > lower_) search(0, 0);
    return best_value_;
  }

  const std::vector<int>& best_coloring() const { return best_; }

 private:
  int current_max() const {
    for (int d = n_; d > 0; --d) {
      if (histogram_[d] > 0) return d;
    }
    return 0;
  }

  void assign(Vertex v, int c) {
    color_[v] = c;
    for (Vertex u : conflicts_[v]) ++clash_[u][c];
    for (Vertex w : watchers_[v]) {
      if (seen_[w][c]++ == 0) {
        --histogram_[distinct_[w]];
        ++histogram_[++distinct_[w]];
      }
    }
  }

  void unassign(Vertex v) {
    const int c = color_[v];
    color_[v] = -1;
    for (Vertex u : conflicts_[v]) --clash_[u][c];
    for (Vertex w : watchers_[v]) {
      if (--seen_[w][c] == 0) {
        --histogram_[distinct_[w]];
        ++histogram_[--distinct_[w]];
      }
    }
  }

  void seed_with_first_fit() {
    int used = 0;
    for (Vertex v : order_) {
      int c = 0;
      while (clash_[v][c] > 0) ++c;
      used = std::max(used, c + 1);
      assign(v, c);
    }
    best_ = color_;
    best_value_ = current_max() + 1;
    for (Vertex v : order_) unassign(v);
  }

  void search(int depth, int used) {
    if (!meter_.tick()) return;
    if (current_max() + 1 >= best_value_) return;
    if (depth == n_) {
      best_ = color_;
      best_value_ = current_max() + 1;
      return;
    }
    const Vertex v = order_[depth];
    for (int c = 0; c <= used; ++c) {
      if (clash_[v][c] > 0) continue;
      assign(v, c);
      search(depth + 1, std::max(used, c + 1));
      unassign(v);
      if (best_value_ <= lower_ || meter_.exhausted()) return;
    }
  }

  AdjacencyLists conflicts_;
  AdjacencyLists watchers_;
  BudgetMeter& meter_;
  int n_;
  std::vector<Vertex> order_;
  std::vector<int> color_;
  std::vector<std::vector<int>> clash_;
  std::vector<std::vector<int>> seen_;
  std::vector<int> distinct_;
  std::vector<int> histogram_;
  std::vector<int> best_;
  int best_value_ = 0;
  int lower_ = 1;
};

AdjacencyLists adjacency_lists(const Graph& g) {
  AdjacencyLists adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  return adj;
}

SolveReport solve(AdjacencyLists conflicts, AdjacencyLists watchers, int lower,
                  const SolverOptions& opts) {
  BudgetMeter meter(opts.budget);
  LocalSearch search(std::move(conflicts), std::move(watchers), meter);
  SolveReport r;
  r.value = search.run(lower);
  r.bound = lower;
  r.coloring = Coloring{search.best_coloring()};
  r.nodes = meter.nodes();
  r.elapsed = meter.elapsed();
  r.exact = !meter.exhausted() || r.value == lower;
  if (r.exact) r.bound = r.value;
  return r;
}

void check_limit(int n, const SolverOptions& opts) {
  if (n > opts.vertex_limit) {
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " vertices exceed the limit of " +
                                         std::to_string(opts.vertex_limit));
  }
}

}  // namespace

SolveReport local_chromatic(const Graph& g, const SolverOptions& opts) {
  check_limit(g.order(), opts);
  int lower = g.size() > 0 ? 2 : 1;
  if (g.size() > 0 && !two_coloring(g)) lower = 3;  // odd cycles need three colors locally
  lower = std::max(lower, static_cast<int>(maximum_clique(g).size()));
  auto adj = adjacency_lists(g);
  return solve(adj, adj, lower, opts);
}

SolveReport directed_local_chromatic(const Digraph& d, const SolverOptions& opts) {
  check_limit(d.order(), opts);
  AdjacencyLists watchers(d.order());
  for (Vertex v = 0; v < d.order(); ++v) {
    watchers[v].assign(d.in_neighbors(v).begin(), d.in_neighbors(v).end());
  }
  const int lower = d.arc_count() > 0 ? 2 : 1;
  return solve(adjacency_lists(d.underlying()), std::move(watchers), lower, opts);
}

}  // namespace loccol
