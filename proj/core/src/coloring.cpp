#include "loccol/coloring.hpp"

#include <algorithm>
#include <functional>

#include "loccol/error.hpp"

namespace loccol {

namespace {

using BitRows = std::vector<boost::dynamic_bitset<>>;

BitRows adjacency_rows(const Graph& g) {
  const int n = g.order();
  BitRows rows(n, boost::dynamic_bitset<>(n));
  for (auto [u, v] : g.edges()) {
    rows[u].set(v);
    rows[v].set(u);
  }
  return rows;
}

// (x * y)[u] = OR of y[v] over v in x[u]
BitRows compose(const BitRows& x, const BitRows& y) {
  const std::size_t n = x.size();
  BitRows out(n, boost::dynamic_bitset<>(n));
  for (std::size_t u = 0; u < n; ++u) {
    for (auto v = x[u].find_first(); v != boost::dynamic_bitset<>::npos; v = x[u].find_next(v)) {
      out[u] |= y[v];
    }
  }
  return out;
}

void require_total(int n, const Coloring& c) {
  if (static_cast<int>(c.size()) != n) {
    throw Error(ErrorCode::PartialColoring, "coloring covers " + std::to_string(c.size()) +
                                                " of " + std::to_string(n) + " vertices");
  }
  for (int x : c.colors) {
    if (x < 0) throw Error(ErrorCode::PartialColoring, "negative color id");
  }
}

void require_proper(const Graph& g, const Coloring& c) {
  auto check = is_proper(g, c);
  if (!check) {
    auto [u, v] = *check.violation;
    throw Error(ErrorCode::NotProper,
                "monochromatic edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
}

}  // namespace

WalkRelation walk_reach(const Graph& g, int length) {
  if (length < 1) throw Error(ErrorCode::BadParameter, "walk length must be >= 1");
  BitRows base = adjacency_rows(g);
  std::optional<BitRows> result;
  // binary exponentiation of the boolean adjacency matrix
  for (int e = length; e > 0; e >>= 1) {
    if (e & 1) result = result ? compose(*result, base) : base;
    if (e > 1) base = compose(base, base);
  }
  return WalkRelation(std::move(*result));
}

ProperCheck is_proper(const Graph& g, const Coloring& c) {
  require_total(g.order(), c);
  for (auto [u, v] : g.edges()) {
    if (c[u] == c[v]) return ProperCheck{false, Edge{u, v}};
  }
  return {};
}

std::set<int> neighbor_colors(const Graph& g, const Coloring& c, Vertex v) {
  std::set<int> out;
  for (Vertex u : g.neighbors(v)) out.insert(c[u]);
  return out;
}

std::set<int> out_neighbor_colors(const Digraph& d, const Coloring& c, Vertex v) {
  std::set<int> out;
  for (Vertex u : d.out_neighbors(v)) out.insert(c[u]);
  return out;
}

int local_value(const Graph& g, const Coloring& c) {
  require_proper(g, c);
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, neighbor_colors(g, c, v).size());
  return static_cast<int>(best) + 1;
}

int directed_local_value(const Digraph& d, const Coloring& c) {
  require_proper(d.underlying(), c);
  std::size_t best = 0;
  for (Vertex v = 0; v < d.order(); ++v) {
    best = std::max(best, out_neighbor_colors(d, c, v).size());
  }
  return static_cast<int>(best) + 1;
}

bool is_rainbow_biclique(const Graph& g, const Coloring& c, const RainbowBiclique& r) {
  if (r.side_a.empty() || r.side_b.empty()) return false;
  std::vector<int> seen_colors;
  std::vector<Vertex> all = r.side_a;
  all.insert(all.end(), r.side_b.begin(), r.side_b.end());
  for (Vertex v : all) {
    if (v < 0 || v >= g.order()) return false;
    seen_colors.push_back(c[v]);
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  std::sort(seen_colors.begin(), seen_colors.end());
  if (std::adjacent_find(seen_colors.begin(), seen_colors.end()) != seen_colors.end()) return false;
  for (Vertex a : r.side_a) {
    for (Vertex b : r.side_b) {
      if (!g.adjacent(a, b)) return false;
    }
  }
  return true;
}

std::optional<RainbowBiclique> find_rainbow_biclique(const Graph& g, const Coloring& c, int a,
                                                     int b) {
  if (a < 1 || b < 1) throw Error(ErrorCode::BadParameter, "biclique sides must be >= 1");
  require_total(g.order(), c);
  const int n = g.order();
  const BitRows adj = adjacency_rows(g);

  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  std::vector<int> used;  // colors taken so far

  auto color_free = [&](Vertex v) {
    return std::find(used.begin(), used.end(), c[v]) == used.end();
  };

  // Choose side_b from `pool` (common neighbors of side_a), ascending.
  std::function<bool(const boost::dynamic_bitset<>&, std::size_t)> pick_b =
      [&](const boost::dynamic_bitset<>& pool, std::size_t from) -> bool {
    if (static_cast<int>(side_b.size()) == b) return true;
    for (auto v = from; v < pool.size() && v != boost::dynamic_bitset<>::npos;
         v = pool.find_next(v)) {
      if (!pool.test(v) || !color_free(static_cast<Vertex>(v))) continue;
      side_b.push_back(static_cast<Vertex>(v));
      used.push_back(c[static_cast<Vertex>(v)]);
      if (pick_b(pool, v + 1)) return true;
      side_b.pop_back();
      used.pop_back();
    }
    return false;
  };

  std::function<bool(const boost::dynamic_bitset<>&, Vertex)> pick_a =
      [&](const boost::dynamic_bitset<>& common, Vertex from) -> bool {
    if (static_cast<int>(side_a.size()) == a) return pick_b(common, common.find_first());
    for (Vertex v = from; v < n; ++v) {
      if (!color_free(v)) continue;
      boost::dynamic_bitset<> next = common & adj[v];
      if (static_cast<int>(next.count()) < b) continue;
      side_a.push_back(v);
      used.push_back(c[v]);
      if (pick_a(next, v + 1)) return true;
      side_a.pop_back();
      used.pop_back();
    }
    return false;
  };

  boost::dynamic_bitset<> everyone(n);
  everyone.set();
  if (pick_a(everyone, 0)) return RainbowBiclique{side_a, side_b};
  return std::nullopt;
}

}  // namespace loccol
