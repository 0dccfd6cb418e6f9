#pragma once

#include <utility>
#include <vector>

#include "loccol/graph.hpp"

namespace loccol {

// Every generator lists vertices in lexicographic label order and is
// deterministic. Parameter violations throw BadParameter.

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Digraph directed_cycle(int n);
Digraph transitive_tournament(int n);

/// H_m: pairs (i,j), 1 <= i < j <= m; (i,j) ~ (k,l) iff j == k or l == i.
Graph shift_graph(int m);
/// S_m: all ordered pairs (i,j), i != j, same adjacency rule.
Graph symmetric_shift_graph(int m);
/// The symmetric directed shift graph: arcs (a,b) -> (b,c) for distinct
/// a,b,c plus both arcs between (a,b) and (b,a). Not an orientation.
Digraph sym_directed_shift(int m);

/// Index of (i,j) in shift_graph(m) / symmetric_shift_graph(m), 1-based
/// coordinates.
Vertex shift_index(int m, int i, int j);
Vertex symmetric_shift_index(int m, int i, int j);

/// c(i,j) = i on H_m or S_m.
Coloring first_coordinate_coloring(const Graph& shift);

Graph kneser(int n, int k);
Graph schrijver(int n, int k);

/// M_r(G): levels (i,v), 0 <= i < r, then the apex z.
Graph generalized_mycielski(const Graph& g, int r);

/// f : {1..t} -> {0..s} with exactly one zero and at least one 1.
struct WideVertex {
  std::vector<int> f;  // f[i-1] is f(i)

  int at(int i) const { return f[i - 1]; }
  int size() const { return static_cast<int>(f.size()); }
  /// The unique i with f(i) = 0 (1-based).
  int color() const;
  friend bool operator==(const WideVertex&, const WideVertex&) = default;
};

bool is_wide_vertex(const std::vector<int>& f, int s);

/// W(s,t) and its natural coloring (color i for the vertex with f(i) = 0,
/// colors 1..t).
struct WideUniversal {
  Graph graph;
  Coloring natural;
  std::vector<WideVertex> vertices;
  int s = 0;
  int t = 0;
};
WideUniversal wide_universal(int s, int t);
/// Vertex count t * (s^(t-1) - (s-1)^(t-1)) without building the graph.
long long wide_universal_order(int s, int t);

/// Oriented (2h+1)-cycle v_0..v_2h: v_0 has outdegree 1, v_2, v_4, ..., v_2h
/// have outdegree 2 and the odd-indexed vertices are sinks.
Digraph alternating_odd_cycle(int h);
/// True iff d is an oriented odd cycle with exactly one outdegree-1 vertex.
bool is_alternating_odd_cycle(const Digraph& d);

/// Orientation of K_r with maximum outdegree floor(r/2): i -> i+j (mod r)
/// for j = 1..floor((r-1)/2), plus i -> i + r/2 for i < r/2 when r is even.
Digraph balanced_complete_orientation(int r);

}  // namespace loccol
