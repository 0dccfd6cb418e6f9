#include "loccol/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

#include "loccol/error.hpp"

namespace loccol {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::PartialColoring: return "PartialColoring";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotOrientation: return "NotOrientation";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NotWide: return "NotWide";
    case ErrorCode::WrongColorCount: return "WrongColorCount";
    case ErrorCode::WrongGraphShape: return "WrongGraphShape";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

namespace {

void join(std::ostringstream& out, const std::vector<int>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ',';
    out << xs[i];
  }
}

std::vector<VertexLabel> default_labels(int n) {
  std::vector<VertexLabel> labels;
  labels.reserve(n);
  for (int v = 0; v < n; ++v) labels.emplace_back(TextLabel{std::to_string(v)});
  return labels;
}

void check_labels(int n, const std::vector<VertexLabel>& labels) {
  if (static_cast<int>(labels.size()) != n) {
    throw Error(ErrorCode::BadParameter, "label count " + std::to_string(labels.size()) +
                                             " does not match vertex count " + std::to_string(n));
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    // Distinct structured labels can share a text form only across kinds;
    // the text form is what files carry, so it must be unique.
    if (!seen.insert(to_string(l)).second) {
      throw Error(ErrorCode::DuplicateLabel, to_string(l));
    }
  }
}

}  // namespace

std::string to_string(const VertexLabel& label) {
  std::ostringstream out;
  std::visit(
      [&](const auto& l) {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, TextLabel>) {
          out << l.text;
        } else if constexpr (std::is_same_v<T, PairLabel>) {
          out << '(' << l.first << ',' << l.second << ')';
        } else if constexpr (std::is_same_v<T, SubsetLabel>) {
          out << '{';
          join(out, l.elements);
          out << '}';
        } else if constexpr (std::is_same_v<T, LevelLabel>) {
          if (l.level) {
            out << '(' << *l.level << ',' << l.base << ')';
          } else {
            out << l.base;
          }
        } else {
          out << '[';
          join(out, l.values);
          out << ']';
        }
      },
      label);
  return out.str();
}

Graph::Graph(int n, std::vector<Edge> edges, std::vector<VertexLabel> labels) {
  if (n < 0) throw Error(ErrorCode::BadParameter, "negative vertex count");
  labels_ = labels.empty() && n > 0 ? default_labels(n) : std::move(labels);
  check_labels(n, labels_);
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::UnknownEndpoint,
                  "edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error(ErrorCode::DuplicateEdge,
                "{" + std::to_string(dup->first) + "," + std::to_string(dup->second) + "}");
  }
  edges_ = std::move(edges);
  adjacency_.assign(n, {});
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::optional<Vertex> Graph::find_label(const VertexLabel& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> index(order(), -1);
  std::vector<VertexLabel> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    index[keep[i]] = static_cast<int>(i);
    labels.push_back(labels_[keep[i]]);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : edges_) {
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  }
  return Graph(static_cast<int>(keep.size()), std::move(edges), std::move(labels));
}

Digraph::Digraph(int n, std::vector<Arc> arcs, std::vector<VertexLabel> labels) {
  if (n < 0) throw Error(ErrorCode::BadParameter, "negative vertex count");
  labels_ = labels.empty() && n > 0 ? default_labels(n) : std::move(labels);
  check_labels(n, labels_);
  for (auto [u, v] : arcs) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::UnknownEndpoint,
                  "arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
  }
  std::sort(arcs.begin(), arcs.end());
  if (auto dup = std::adjacent_find(arcs.begin(), arcs.end()); dup != arcs.end()) {
    throw Error(ErrorCode::DuplicateEdge,
                "(" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
  }
  arcs_ = std::move(arcs);
  out_.assign(n, {});
  in_.assign(n, {});
  for (auto [u, v] : arcs_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (auto& row : in_) std::sort(row.begin(), row.end());
  for (auto [u, v] : arcs_) {
    if (has_arc(v, u)) {
      orientation_ = false;
      break;
    }
  }
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  const auto& row = out_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

Graph Digraph::underlying() const {
  std::vector<Edge> edges;
  edges.reserve(arcs_.size());
  for (auto [u, v] : arcs_) {
    if (u < v || !has_arc(v, u)) edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return Graph(order(), std::move(edges), labels_);
}

int Coloring::distinct_count() const {
  std::vector<int> sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

Coloring Coloring::canonical() const {
  std::map<int, int> rename;
  Coloring out;
  out.colors.reserve(colors.size());
  for (int c : colors) {
    auto [it, inserted] = rename.try_emplace(c, static_cast<int>(rename.size()));
    out.colors.push_back(it->second);
  }
  return out;
}

Graph build_graph(std::vector<VertexLabel> labels,
                  const std::vector<std::pair<VertexLabel, VertexLabel>>& edges) {
  const int n = static_cast<int>(labels.size());
  check_labels(n, labels);
  std::map<std::string, Vertex> index;
  for (int v = 0; v < n; ++v) index.emplace(to_string(labels[v]), v);
  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(to_string(a));
    auto ib = index.find(to_string(b));
    if (ia == index.end()) throw Error(ErrorCode::UnknownEndpoint, to_string(a));
    if (ib == index.end()) throw Error(ErrorCode::UnknownEndpoint, to_string(b));
    if (ia->second == ib->second) throw Error(ErrorCode::SelfLoop, to_string(a));
    indexed.emplace_back(ia->second, ib->second);
  }
  return Graph(n, std::move(indexed), std::move(labels));
}

}  // namespace loccol
