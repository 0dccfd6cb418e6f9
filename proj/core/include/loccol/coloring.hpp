#pragma once

#include <optional>
#include <set>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "loccol/graph.hpp"

namespace loccol {

/// Boolean relation "there is a walk of length exactly L from u to v".
class WalkRelation {
 public:
  explicit WalkRelation(std::vector<boost::dynamic_bitset<>> rows) : rows_(std::move(rows)) {}

  bool operator()(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const boost::dynamic_bitset<>& row(Vertex u) const { return rows_[u]; }
  int order() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<boost::dynamic_bitset<>> rows_;
};

/// L-th boolean power of the adjacency relation (closed walks included).
WalkRelation walk_reach(const Graph& g, int length);

struct ProperCheck {
  bool proper = true;
  std::optional<Edge> violation;

  explicit operator bool() const { return proper; }
};

/// Throws PartialColoring if `c` does not cover every vertex.
ProperCheck is_proper(const Graph& g, const Coloring& c);

/// S_c(v): the set of colors on the neighbors of v.
std::set<int> neighbor_colors(const Graph& g, const Coloring& c, Vertex v);
std::set<int> out_neighbor_colors(const Digraph& d, const Coloring& c, Vertex v);

/// max_v |c(N(v))| + 1. Throws NotProper on an improper coloring.
int local_value(const Graph& g, const Coloring& c);
/// max_v |c(N+(v))| + 1, properness taken on the underlying graph.
int directed_local_value(const Digraph& d, const Coloring& c);

struct RainbowBiclique {
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
};

/// Exhaustive search for a K_{a,b} subgraph whose a+b vertices all carry
/// different colors. The first hit in lexicographic order of (side_a, side_b)
/// is returned.
std::optional<RainbowBiclique> find_rainbow_biclique(const Graph& g, const Coloring& c, int a,
                                                     int b);

/// True iff `r` satisfies the rainbow biclique invariants in (g, c).
bool is_rainbow_biclique(const Graph& g, const Coloring& c, const RainbowBiclique& r);

}  // namespace loccol
