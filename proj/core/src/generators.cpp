#include "loccol/generators.hpp"

#include <algorithm>
#include <numeric>

#include "loccol/error.hpp"

namespace loccol {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParameter, what);
}

// All k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 1);
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

Graph disjointness_graph(std::vector<std::vector<int>> sets) {
  std::vector<Edge> edges;
  const int n = static_cast<int>(sets.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (disjoint(sets[u], sets[v])) edges.emplace_back(u, v);
    }
  }
  std::vector<VertexLabel> labels;
  labels.reserve(n);
  for (auto& s : sets) labels.emplace_back(SubsetLabel{std::move(s)});
  return Graph(n, std::move(edges), std::move(labels));
}

std::vector<VertexLabel> pair_labels(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<VertexLabel> labels;
  labels.reserve(pairs.size());
  for (auto [i, j] : pairs) labels.emplace_back(PairLabel{i, j});
  return labels;
}

// Pairs (i,j) in lexicographic order, either i < j or i != j.
std::vector<std::pair<int, int>> shift_pairs(int m, bool symmetric) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= m; ++i) {
    for (int j = symmetric ? 1 : i + 1; j <= m; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

Graph shift_like(int m, bool symmetric) {
  require(m >= 2, "shift graph needs m >= 2");
  const auto pairs = shift_pairs(m, symmetric);
  const int n = static_cast<int>(pairs.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      auto [i, j] = pairs[u];
      auto [k, l] = pairs[v];
      if (j == k || l == i) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges), pair_labels(pairs));
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Digraph directed_cycle(int n) {
  require(n >= 3, "directed cycle needs n >= 3");
  std::vector<Arc> arcs;
  for (int v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
  return Digraph(n, std::move(arcs));
}

Digraph transitive_tournament(int n) {
  require(n >= 1, "tournament needs n >= 1");
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) arcs.emplace_back(u, v);
  }
  return Digraph(n, std::move(arcs));
}

Graph shift_graph(int m) { return shift_like(m, false); }

Graph symmetric_shift_graph(int m) { return shift_like(m, true); }

Digraph sym_directed_shift(int m) {
  require(m >= 2, "directed shift graph needs m >= 2");
  const auto pairs = shift_pairs(m, true);
  std::vector<Arc> arcs;
  for (int u = 0; u < static_cast<int>(pairs.size()); ++u) {
    auto [a, b] = pairs[u];
    for (int c = 1; c <= m; ++c) {
      if (c != b) arcs.emplace_back(u, symmetric_shift_index(m, b, c));
    }
  }
  return Digraph(static_cast<int>(pairs.size()), std::move(arcs), pair_labels(pairs));
}

Vertex shift_index(int m, int i, int j) {
  // rows 1..i-1 contribute (m - r) pairs each
  return (i - 1) * m - (i - 1) * i / 2 + (j - i - 1);
}

Vertex symmetric_shift_index(int m, int i, int j) {
  return (i - 1) * (m - 1) + (j < i ? j - 1 : j - 2);
}

Coloring first_coordinate_coloring(const Graph& shift) {
  Coloring c;
  c.colors.reserve(shift.order());
  for (const auto& l : shift.labels()) {
    const auto* p = std::get_if<PairLabel>(&l);
    if (!p) throw Error(ErrorCode::WrongGraphShape, "vertex labels are not pairs");
    c.colors.push_back(p->first);
  }
  return c;
}

Graph kneser(int n, int k) {
  require(k >= 1 && n >= 2 * k, "kneser needs n >= 2k >= 2");
  return disjointness_graph(subsets(n, k));
}

Graph schrijver(int n, int k) {
  require(k >= 1 && n >= 2 * k, "schrijver needs n >= 2k >= 2");
  std::vector<std::vector<int>> stable;
  for (auto& s : subsets(n, k)) {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < s.size() && ok; ++i) ok = s[i + 1] != s[i] + 1;
    if (ok && s.size() >= 2 && s.front() == 1 && s.back() == n) ok = false;
    if (ok) stable.push_back(std::move(s));
  }
  return disjointness_graph(std::move(stable));
}

Graph generalized_mycielski(const Graph& g, int r) {
  require(r >= 1, "generalized Mycielskian needs r >= 1");
  const int n = g.order();
  auto at = [n](int level, Vertex v) { return level * n + v; };
  const Vertex apex = r * n;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(at(0, u), at(0, v));
  for (int i = 0; i + 1 < r; ++i) {
    for (auto [u, v] : g.edges()) {
      edges.emplace_back(at(i, u), at(i + 1, v));
      edges.emplace_back(at(i, v), at(i + 1, u));
    }
  }
  for (Vertex u = 0; u < n; ++u) edges.emplace_back(at(r - 1, u), apex);

  std::vector<VertexLabel> labels;
  labels.reserve(r * n + 1);
  for (int i = 0; i < r; ++i) {
    for (Vertex v = 0; v < n; ++v) labels.emplace_back(LevelLabel{i, to_string(g.label(v))});
  }
  labels.emplace_back(LevelLabel{std::nullopt, "z"});
  return Graph(r * n + 1, std::move(edges), std::move(labels));
}

int WideVertex::color() const {
  auto it = std::find(f.begin(), f.end(), 0);
  return static_cast<int>(it - f.begin()) + 1;
}

bool is_wide_vertex(const std::vector<int>& f, int s) {
  int zeros = 0, ones = 0;
  for (int x : f) {
    if (x < 0 || x > s) return false;
    zeros += x == 0;
    ones += x == 1;
  }
  return zeros == 1 && ones >= 1;
}

long long wide_universal_order(int s, int t) {
  long long a = 1, b = 1;
  for (int i = 0; i < t - 1; ++i) {
    a *= s;
    b *= s - 1;
  }
  return t * (a - b);
}

WideUniversal wide_universal(int s, int t) {
  require(s >= 1 && t >= 2, "W(s,t) needs s >= 1 and t >= 2");
  WideUniversal w;
  w.s = s;
  w.t = t;
  // odometer over {0..s}^t in lexicographic order
  std::vector<int> f(t, 0);
  while (true) {
    if (is_wide_vertex(f, s)) w.vertices.push_back(WideVertex{f});
    int i = t - 1;
    while (i >= 0 && f[i] == s) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  const int n = static_cast<int>(w.vertices.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool adjacent = true;
      for (int i = 0; i < t && adjacent; ++i) {
        const int x = w.vertices[u].f[i];
        const int y = w.vertices[v].f[i];
        adjacent = (x - y == 1 || y - x == 1) || (x == s && y == s);
      }
      if (adjacent) edges.emplace_back(u, v);
    }
  }
  std::vector<VertexLabel> labels;
  labels.reserve(n);
  w.natural.colors.reserve(n);
  for (const auto& v : w.vertices) {
    labels.emplace_back(VectorLabel{v.f});
    w.natural.colors.push_back(v.color());
  }
  w.graph = Graph(n, std::move(edges), std::move(labels));
  return w;
}

Digraph alternating_odd_cycle(int h) {
  require(h >= 1, "alternating odd cycle needs h >= 1");
  const int n = 2 * h + 1;
  std::vector<Arc> arcs;
  arcs.emplace_back(0, 1);
  for (int v = 2; v < n; v += 2) {
    arcs.emplace_back(v, v - 1);
    arcs.emplace_back(v, (v + 1) % n);
  }
  return Digraph(n, std::move(arcs));
}

bool is_alternating_odd_cycle(const Digraph& d) {
  const int n = d.order();
  if (n < 3 || n % 2 == 0 || !d.is_orientation() || d.arc_count() != n) return false;
  const Graph g = d.underlying();
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2) return false;
  }
  // connected 2-regular graph is a single cycle
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != n) return false;
  int ones = 0;
  for (Vertex v = 0; v < n; ++v) ones += d.out_degree(v) == 1;
  return ones == 1;
}

Digraph balanced_complete_orientation(int r) {
  require(r >= 1, "complete orientation needs r >= 1");
  std::vector<Arc> arcs;
  for (int i = 0; i < r; ++i) {
    for (int j = 1; j <= (r - 1) / 2; ++j) arcs.emplace_back(i, (i + j) % r);
  }
  if (r % 2 == 0) {
    for (int i = 0; i < r / 2; ++i) arcs.emplace_back(i, i + r / 2);
  }
  return Digraph(r, std::move(arcs));
}

}  // namespace loccol
