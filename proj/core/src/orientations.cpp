// Exhaustive optimisation of psi_d over the orientations of a graph.
//
// Edges are decided in index order, u->v (u < v) before v->u. A partial
// orientation P bounds every completion F from both sides:
//   psi_d(P) <= psi_d(F) <= psi_d(P + both directions of every open edge)
// because psi_d is monotone under adding arcs. The minimum search cuts on
// the left bound, the maximum search on the right one.
//
// With several workers the tree is split on a prefix of the edges. Workers
// share only the incumbent value and prune strictly worse subtrees against
// it, so every task still reports its own first optimum and the overall
// witness (first optimum in search order) does not depend on scheduling.

#include <algorithm>
#include <atomic>
#include <thread>

#include "loccol/error.hpp"
#include "loccol/solvers.hpp"

namespace loccol {

namespace {

enum class Goal { Minimize, Maximize };

struct TaskResult {
  std::optional<int> value;
  std::optional<Digraph> orientation;
  std::optional<Coloring> coloring;
  std::uint64_t nodes = 0;
  bool exhausted = false;
};

class OrientationSearch {
 public:
  OrientationSearch(const Graph& g, Goal goal, int target, const SolverOptions& opts,
                    std::atomic<int>& shared)
      : g_(g), goal_(goal), target_(target), opts_(opts), shared_(shared) {
    inner_.vertex_limit = opts.vertex_limit;
  }

  TaskResult run(const std::vector<bool>& prefix) {
    BudgetMeter meter(opts_.budget);
    meter_ = &meter;
    result_ = TaskResult{};
    arcs_.clear();
    for (std::size_t i = 0; i < prefix.size(); ++i) push(static_cast<int>(i), prefix[i]);
    descend(static_cast<int>(prefix.size()));
    result_.nodes = meter.nodes();
    result_.exhausted = meter.exhausted();
    return result_;
  }

 private:
  void push(int edge, bool reversed) {
    auto [u, v] = g_.edges()[edge];
    arcs_.push_back(reversed ? Arc{v, u} : Arc{u, v});
  }

  bool done() const { return result_.value && *result_.value == target_; }

  void descend(int depth) {
    if (!meter_->tick() || done()) return;
    const int m = g_.size();
    if (goal_ == Goal::Minimize) {
      Digraph partial(g_.order(), arcs_, g_.labels());
      auto r = directed_local_chromatic(partial, inner_);
      if (result_.value && r.value >= *result_.value) return;
      if (r.value > shared_.load()) return;
      if (depth == m) return record(std::move(partial), r);
    } else {
      std::vector<Arc> widened = arcs_;
      for (int e = depth; e < m; ++e) {
        auto [u, v] = g_.edges()[e];
        widened.emplace_back(u, v);
        widened.emplace_back(v, u);
      }
      Digraph upper(g_.order(), std::move(widened), g_.labels());
      auto r = directed_local_chromatic(upper, inner_);
      if (result_.value && r.value <= *result_.value) return;
      if (r.value < shared_.load()) return;
      if (depth == m) return record(std::move(upper), r);
    }
    for (bool reversed : {false, true}) {
      push(depth, reversed);
      descend(depth + 1);
      arcs_.pop_back();
      if (meter_->exhausted() || done()) return;
    }
  }

  void record(Digraph d, const SolveReport& r) {
    result_.value = r.value;
    result_.orientation = std::move(d);
    result_.coloring = r.coloring;
    int seen = shared_.load();
    if (goal_ == Goal::Minimize) {
      while (r.value < seen && !shared_.compare_exchange_weak(seen, r.value)) {
      }
    } else {
      while (r.value > seen && !shared_.compare_exchange_weak(seen, r.value)) {
      }
    }
  }

  const Graph& g_;
  Goal goal_;
  int target_;
  SolverOptions opts_;
  SolverOptions inner_;
  std::atomic<int>& shared_;
  BudgetMeter* meter_ = nullptr;
  std::vector<Arc> arcs_;
  TaskResult result_;
};

SolveReport optimise(const Graph& g, Goal goal, const SolverOptions& opts) {
  if (g.size() > opts.edge_limit) {
    throw Error(ErrorCode::TooLarge, std::to_string(g.size()) + " edges exceed the limit of " +
                                         std::to_string(opts.edge_limit));
  }
  if (g.order() > opts.vertex_limit) {
    throw Error(ErrorCode::TooLarge, std::to_string(g.order()) + " vertices exceed the limit");
  }
  const auto start = std::chrono::steady_clock::now();

  // Known bounds let the search stop as soon as they are met.
  int target;
  int other_side;
  if (goal == Goal::Minimize) {
    const int clique = static_cast<int>(maximum_clique(g).size());
    target = g.size() == 0 ? 1 : std::max(2, clique / 2 + 1);
    other_side = target;
  } else {
    SolverOptions inner;
    inner.vertex_limit = opts.vertex_limit;
    target = local_chromatic(g, inner).value;
    other_side = target;
  }

  const int workers = std::max(1, opts.workers);
  int split = 0;
  while ((1 << split) < 4 * workers && split < g.size() && workers > 1) ++split;
  const int tasks = 1 << split;

  std::atomic<int> shared(goal == Goal::Minimize ? g.order() + 2 : 0);
  std::vector<TaskResult> results(tasks);
  // Tasks after one that met `target` cannot supply an earlier witness.
  std::atomic<int> first_hit(tasks);
  auto run_task = [&](int t) {
    if (t > first_hit.load()) return;
    std::vector<bool> prefix(split);
    for (int i = 0; i < split; ++i) prefix[i] = (t >> (split - 1 - i)) & 1;
    OrientationSearch search(g, goal, target, opts, shared);
    results[t] = search.run(prefix);
    if (results[t].value && *results[t].value == target) {
      int seen = first_hit.load();
      while (t < seen && !first_hit.compare_exchange_weak(seen, t)) {
      }
    }
  };
  if (workers == 1) {
    for (int t = 0; t < tasks; ++t) run_task(t);
  } else {
    std::atomic<int> next(0);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int t = next++; t < tasks; t = next++) run_task(t);
      });
    }
    for (auto& th : pool) th.join();
  }

  SolveReport r;
  bool exhausted = false;
  const TaskResult* best = nullptr;
  for (const auto& res : results) {
    r.nodes += res.nodes;
    exhausted = exhausted || res.exhausted;
    if (!res.value) continue;
    const bool better = !best || (goal == Goal::Minimize ? *res.value < *best->value
                                                         : *res.value > *best->value);
    if (better) best = &res;
  }
  if (best) {
    r.value = *best->value;
    r.orientation = best->orientation;
    r.coloring = best->coloring;
  }
  r.exact = !exhausted || (best && r.value == target);
  r.bound = r.exact ? r.value : other_side;
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return r;
}

}  // namespace

SolveReport psi_d_min(const Graph& g, const SolverOptions& opts) {
  return optimise(g, Goal::Minimize, opts);
}

SolveReport psi_d_max(const Graph& g, const SolverOptions& opts) {
  return optimise(g, Goal::Maximize, opts);
}

}  // namespace loccol
