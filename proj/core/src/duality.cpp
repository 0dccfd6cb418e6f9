// psi_d(D) <= 2 iff D maps to some symmetric directed shift graph iff no
// alternating odd cycle maps to D. Two vertices are related when they share
// an in-neighbor; coloring by classes of the transitive closure works unless
// an arc joins two vertices of one class, and then the chain of shared
// in-neighbors between them closes an alternating odd cycle.

#include "loccol/duality.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "loccol/generators.hpp"

namespace loccol {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

// Shortest chain from `from` to `to` where each step moves between two
// out-neighbors of a common vertex. Returns u_0, w_0, u_1, ..., u_h.
std::vector<Vertex> related_chain(const Digraph& d, Vertex from, Vertex to) {
  const int n = d.order();
  std::vector<Vertex> prev(n, -1), via(n, -1);
  std::vector<bool> seen(n, false);
  std::queue<Vertex> queue;
  queue.push(from);
  seen[from] = true;
  while (!queue.empty() && !seen[to]) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : d.in_neighbors(u)) {
      for (Vertex x : d.out_neighbors(w)) {
        if (seen[x]) continue;
        seen[x] = true;
        prev[x] = u;
        via[x] = w;
        queue.push(x);
      }
    }
  }
  std::vector<Vertex> chain{to};
  for (Vertex x = to; x != from; x = prev[x]) {
    chain.push_back(via[x]);
    chain.push_back(prev[x]);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

DualityOutcome decide_local2(const Digraph& d) {
  const int n = d.order();
  UnionFind classes(n);
  for (Vertex w = 0; w < n; ++w) {
    auto out = d.out_neighbors(w);
    for (std::size_t i = 1; i < out.size(); ++i) classes.unite(out[0], out[i]);
  }

  DualityOutcome result;
  for (auto [a, b] : d.arcs()) {
    if (classes.find(a) != classes.find(b)) continue;
    // tail a, head b: v_0 -> v_1 is the arc, v_2i = w_{h-i}, v_2i+1 = u_{h-i}
    result.chain = related_chain(d, a, b);
    result.h = static_cast<int>(result.chain.size()) / 2;
    const int h = result.h;
    std::vector<Vertex> images(2 * h + 1);
    images[0] = a;
    for (int i = 0; i < h; ++i) {
      images[2 * i + 1] = result.chain[2 * (h - i)];
      images[2 * i + 2] = result.chain[2 * (h - i) - 1];
    }
    result.witness = std::move(images);
    return result;
  }

  Coloring c;
  c.colors.assign(n, -1);
  std::vector<int> id_of_root(n, -1);
  int count = 0;
  for (Vertex v = 0; v < n; ++v) {
    const int root = classes.find(v);
    if (id_of_root[root] < 0) id_of_root[root] = count++;
    c.colors[v] = id_of_root[root];
  }

  // v -> (class(v)+1, class of N+(v)+1), with any other class for sinks
  const int m = std::max(2, count);
  std::vector<Vertex> map(n);
  for (Vertex v = 0; v < n; ++v) {
    const int i = c[v] + 1;
    int j;
    if (d.out_degree(v) > 0) {
      j = c[d.out_neighbors(v)[0]] + 1;
    } else {
      j = i == 1 ? 2 : 1;
    }
    map[v] = symmetric_shift_index(m, i, j);
  }
  result.coloring = std::move(c);
  result.shift_map = std::move(map);
  result.shift_m = m;
  return result;
}

}  // namespace loccol
