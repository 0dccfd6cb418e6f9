#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "loccol/budget.hpp"
#include "loccol/graph.hpp"

namespace loccol {

/// Result of an exact search.
///
/// When `exact` is false the budget ran out: `value` is the best incumbent
/// (an upper bound for minimization, a lower bound for maximization) and
/// `bound` is the proven bound on the other side. When `exact` is true,
/// value == bound.
struct SolveReport {
  int value = 0;
  int bound = 0;
  bool exact = false;
  std::optional<Coloring> coloring;
  std::optional<Digraph> orientation;
  std::optional<std::vector<Vertex>> vertex_set;
  std::uint64_t nodes = 0;
  std::chrono::milliseconds elapsed{0};
};

struct SolverOptions {
  Budget budget;
  /// Largest graph the exponential local searches accept.
  int vertex_limit = 30;
  /// Largest edge count for exhaustive orientation enumeration.
  int edge_limit = 16;
  /// Worker threads for orientation enumeration; never changes results.
  int workers = 1;
};

/// chi(G) by DSATUR branch and bound with a clique lower bound.
SolveReport chromatic_number(const Graph& g, const SolverOptions& opts = {});

/// alpha(G) by branch and bound over the complement; witness in vertex_set.
SolveReport independence_number(const Graph& g, const SolverOptions& opts = {});

/// Largest clique, exact (small graphs only).
std::vector<Vertex> maximum_clique(const Graph& g);

/// Local chromatic number psi(G). Throws TooLarge above vertex_limit.
SolveReport local_chromatic(const Graph& g, const SolverOptions& opts = {});

/// Directed local chromatic number psi_d(D) over proper colorings of the
/// underlying graph. Throws TooLarge above vertex_limit.
SolveReport directed_local_chromatic(const Digraph& d, const SolverOptions& opts = {});

/// Minimum / maximum of psi_d over all orientations of G. Throws TooLarge
/// when |E| > edge_limit. The witness orientation comes with its coloring.
SolveReport psi_d_min(const Graph& g, const SolverOptions& opts = {});
SolveReport psi_d_max(const Graph& g, const SolverOptions& opts = {});

struct WideCheck {
  bool wide = true;
  /// A same-colored pair joined by a walk of length 2s-1 (u <= v).
  std::optional<std::pair<Vertex, Vertex>> violation;

  explicit operator bool() const { return wide; }
};

WideCheck is_s_wide(const Graph& g, const Coloring& c, int s);

/// Homomorphism search (backtracking with arc consistency). Returns the
/// image of every vertex of `from`, or nullopt if none exists. Throws
/// BudgetExceeded if the budget runs out before the search completes.
std::optional<std::vector<Vertex>> find_homomorphism(const Graph& from, const Graph& to,
                                                     const Budget& budget = {});
std::optional<std::vector<Vertex>> find_homomorphism(const Digraph& from, const Digraph& to,
                                                     const Budget& budget = {});

bool is_homomorphism(const Graph& from, const Graph& to, const std::vector<Vertex>& map);
bool is_homomorphism(const Digraph& from, const Digraph& to, const std::vector<Vertex>& map);

/// Calls `visit` once per proper coloring up to renaming of colors (colors
/// numbered by first occurrence). Stops early when `visit` returns false.
/// Returns the number of colorings visited.
std::uint64_t for_each_proper_coloring(const Graph& g,
                                       const std::function<bool(const Coloring&)>& visit);

/// Proper 2-coloring if G is bipartite.
std::optional<Coloring> two_coloring(const Graph& g);

}  // namespace loccol
