#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace loccol {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using Arc = std::pair<Vertex, Vertex>;

// Structured vertex labels. Generators emit the structured kinds; anything
// read back from a file is a TextLabel.
struct PairLabel {
  int first;
  int second;
  friend bool operator==(const PairLabel&, const PairLabel&) = default;
};

struct SubsetLabel {
  std::vector<int> elements;  // sorted
  friend bool operator==(const SubsetLabel&, const SubsetLabel&) = default;
};

// Vertex (level, base) of a generalized Mycielskian; the apex has no level.
struct LevelLabel {
  std::optional<int> level;
  std::string base;
  friend bool operator==(const LevelLabel&, const LevelLabel&) = default;
};

struct VectorLabel {
  std::vector<int> values;
  friend bool operator==(const VectorLabel&, const VectorLabel&) = default;
};

struct TextLabel {
  std::string text;
  friend bool operator==(const TextLabel&, const TextLabel&) = default;
};

using VertexLabel = std::variant<TextLabel, PairLabel, SubsetLabel, LevelLabel, VectorLabel>;

std::string to_string(const VertexLabel& label);

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v) and sorted; adjacency lists are sorted.
/// Instances are immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds from index-based edges. Throws Error on self-loops, duplicate
  /// edges, out-of-range endpoints or duplicate labels. An empty label list
  /// means "label vertices by their index".
  Graph(int n, std::vector<Edge> edges, std::vector<VertexLabel> labels = {});

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexLabel>& labels() const { return labels_; }
  const VertexLabel& label(Vertex v) const { return labels_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  bool adjacent(Vertex u, Vertex v) const;
  std::optional<Vertex> find_label(const VertexLabel& label) const;

  /// Subgraph induced by `keep` (in the given order).
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexLabel> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Directed graph; symmetric arc pairs are allowed. `is_orientation()` is
/// true iff no pair (u,v),(v,u) is present.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int n, std::vector<Arc> arcs, std::vector<VertexLabel> labels = {});

  int order() const { return static_cast<int>(out_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<VertexLabel>& labels() const { return labels_; }
  const VertexLabel& label(Vertex v) const { return labels_[v]; }
  std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
  int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }

  bool has_arc(Vertex u, Vertex v) const;
  bool is_orientation() const { return orientation_; }

  /// Underlying simple graph (a symmetric pair collapses to one edge).
  Graph underlying() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<VertexLabel> labels_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  bool orientation_ = true;
};

/// Total map vertex -> non-negative color id. Ids need not be contiguous.
struct Coloring {
  std::vector<int> colors;

  int operator[](Vertex v) const { return colors[v]; }
  std::size_t size() const { return colors.size(); }
  int distinct_count() const;
  /// Relabels colors by first occurrence: 0, 1, 2, ...
  Coloring canonical() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Builds a graph from labels and label-pair edges.
/// Errors: DuplicateLabel, UnknownEndpoint, SelfLoop.
Graph build_graph(std::vector<VertexLabel> labels,
                  const std::vector<std::pair<VertexLabel, VertexLabel>>& edges);

/// Orientation of `g` that takes each edge in the direction chosen by
/// `forward(u, v)` for u < v.
template <typename Pred>
Digraph orient(const Graph& g, Pred forward) {
  std::vector<Arc> arcs;
  arcs.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) {
    if (forward(u, v)) {
      arcs.emplace_back(u, v);
    } else {
      arcs.emplace_back(v, u);
    }
  }
  return Digraph(g.order(), std::move(arcs), g.labels());
}

}  // namespace loccol
