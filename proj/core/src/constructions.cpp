#include "loccol/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "loccol/coloring.hpp"
#include "loccol/error.hpp"
#include "loccol/generators.hpp"
#include "loccol/solvers.hpp"

namespace loccol {

namespace {

void require_proper(const Graph& g, const Coloring& c) {
  if (auto check = is_proper(g, c); !check) {
    auto [u, v] = *check.violation;
    throw Error(ErrorCode::NotProper, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                          "} is monochromatic");
  }
}

std::map<int, int> color_ranks(const Coloring& c) {
  std::set<int> used(c.colors.begin(), c.colors.end());
  std::map<int, int> rank;
  for (int x : used) rank.emplace(x, static_cast<int>(rank.size()));
  return rank;
}

// m with m(m-1)/2 (ordered) or m(m-1) (symmetric) vertices.
int shift_parameter(int order, bool symmetric) {
  for (int m = 2; m * (m - 1) <= 2 * order + 2; ++m) {
    if ((symmetric ? m * (m - 1) : m * (m - 1) / 2) == order) return m;
  }
  return -1;
}

}  // namespace

Digraph orient_by_clique_coloring(const Graph& g, const Coloring& c) {
  require_proper(g, c);
  const auto rank = color_ranks(c);
  const Digraph k = balanced_complete_orientation(std::max<int>(1, rank.size()));
  return orient(g, [&](Vertex u, Vertex v) { return k.has_arc(rank.at(c[u]), rank.at(c[v])); });
}

OrientedShift oriented_shift_with_coloring(int m) {
  const Graph s = symmetric_shift_graph(m);
  auto pair_of = [&](Vertex v) { return std::get<PairLabel>(s.label(v)); };
  Digraph d = orient(s, [&](Vertex u, Vertex v) {
    auto a = pair_of(u);
    auto b = pair_of(v);
    if (a.first == b.second && a.second == b.first) return a.first < a.second;
    return a.second == b.first;
  });
  return {std::move(d), first_coordinate_coloring(s)};
}

CrossFamily coloring_to_families(const Graph& shift, const Coloring& c, bool symmetric) {
  const int m = shift_parameter(shift.order(), symmetric);
  if (m < 0 || shift != (symmetric ? symmetric_shift_graph(m) : shift_graph(m))) {
    throw Error(ErrorCode::WrongGraphShape, symmetric ? "expected a symmetric shift graph"
                                                      : "expected a shift graph");
  }
  require_proper(shift, c);
  auto color = [&](int i, int j) {
    return c[symmetric ? symmetric_shift_index(m, i, j) : shift_index(m, i, j)];
  };
  std::vector<IntSet> as(m), bs(m);
  for (int i = 1; i <= m; ++i) {
    std::set<int> a, b;
    for (int l = 1; l <= m; ++l) {
      if (l == i) continue;
      if (symmetric || l > i) a.insert(color(i, l));
      if (symmetric || l < i) b.insert(color(l, i));
    }
    as[i - 1].assign(a.begin(), a.end());
    bs[i - 1].assign(b.begin(), b.end());
  }
  return CrossFamily(std::move(as), std::move(bs));
}

Coloring families_to_coloring(const CrossFamily& fam, int m, bool symmetric) {
  if (m < 2 || fam.size() != m) {
    throw Error(ErrorCode::BadParameter, "family size must equal m >= 2");
  }
  Coloring c;
  c.colors.assign(symmetric ? m * (m - 1) : m * (m - 1) / 2, -1);
  for (int i = 1; i <= m; ++i) {
    for (int j = symmetric ? 1 : i + 1; j <= m; ++j) {
      if (i == j) continue;
      const IntSet& a = fam.A(i);
      const IntSet& b = fam.B(j);
      IntSet common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (common.empty()) {
        throw Error(ErrorCode::ConditionViolated, "A_i and B_j are disjoint at (" +
                                                      std::to_string(i) + "," +
                                                      std::to_string(j) + ")");
      }
      if (common.front() < 0) throw Error(ErrorCode::BadParameter, "negative color element");
      c.colors[symmetric ? symmetric_shift_index(m, i, j) : shift_index(m, i, j)] =
          common.front();
    }
  }
  return c;
}

Digraph hh_orientation(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.size()) != g.order()) {
    throw Error(ErrorCode::PartialColoring, "coloring does not cover the graph");
  }
  if (auto check = is_s_wide(g, c, 2); !check) {
    throw Error(ErrorCode::NotWide, "coloring is not 2-wide");
  }
  const int colors = c.distinct_count();
  if (colors % 2 != 0 || colors < 4) {
    throw Error(ErrorCode::WrongColorCount,
                "need 2h colors with h >= 2, got " + std::to_string(colors));
  }
  const int h = colors / 2;
  const int n = g.order();

  std::vector<std::set<int>> seen(n);
  for (Vertex v = 0; v < n; ++v) seen[v] = neighbor_colors(g, c, v);
  for (auto [u, v] : g.edges()) {
    for (int x : seen[u]) {
      if (seen[v].count(x)) {
        throw Error(ErrorCode::NotWide, "adjacent vertices see a common color");
      }
    }
  }
  auto high = [&](Vertex v) { return static_cast<int>(seen[v].size()) >= h; };

  // Components of the high part; each has two complementary color sets,
  // one seen from each side. H1 is the one seen by the smallest vertex.
  std::vector<int> component(n, -1);
  std::vector<std::set<int>> h1;
  for (Vertex root = 0; root < n; ++root) {
    if (!high(root) || component[root] >= 0) continue;
    const int id = static_cast<int>(h1.size());
    h1.push_back(seen[root]);
    std::vector<Vertex> stack{root};
    component[root] = id;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (high(u) && component[u] < 0) {
          component[u] = id;
          stack.push_back(u);
        }
      }
    }
  }

  // x_i -> y_j in K_{H1,H2} iff (j - i) mod h < ceil(h/2)
  const int reach = (h + 1) / 2;
  auto forward_high = [&](Vertex u, Vertex v) {
    const auto& first = h1[component[u]];
    const bool u_in_first = first.count(c[u]) > 0;
    const Vertex x = u_in_first ? u : v;
    const Vertex y = u_in_first ? v : u;
    std::set<int> second;
    for (int col : c.colors) {
      if (!first.count(col)) second.insert(col);
    }
    const int i = static_cast<int>(std::distance(first.begin(), first.find(c[x])));
    const int j = static_cast<int>(std::distance(second.begin(), second.find(c[y])));
    const bool x_to_y = ((j - i) % h + h) % h < reach;
    return u_in_first ? x_to_y : !x_to_y;
  };

  return orient(g, [&](Vertex u, Vertex v) {
    const bool hu = high(u), hv = high(v);
    if (hu && hv) return forward_high(u, v);
    if (!hu && hv) return true;
    if (hu && !hv) return false;
    return u < v;
  });
}

Digraph pullback_orientation(const Graph& g, const std::vector<Vertex>& hom,
                             const Digraph& target) {
  if (!target.is_orientation()) {
    throw Error(ErrorCode::NotOrientation, "target digraph has a symmetric pair");
  }
  if (!is_homomorphism(g, target.underlying(), hom)) {
    throw Error(ErrorCode::NotHomomorphism, "map is not a homomorphism");
  }
  return orient(g, [&](Vertex u, Vertex v) { return target.has_arc(hom[u], hom[v]); });
}

Coloring pullback_coloring(const std::vector<Vertex>& hom, const Coloring& c) {
  Coloring out;
  out.colors.reserve(hom.size());
  for (Vertex x : hom) {
    if (x < 0 || x >= static_cast<int>(c.size())) {
      throw Error(ErrorCode::NotHomomorphism, "image outside the colored graph");
    }
    out.colors.push_back(c[x]);
  }
  return out;
}

Digraph mycielski_orientation(const Digraph& g_hat) {
  if (!g_hat.is_orientation()) {
    throw Error(ErrorCode::NotOrientation, "input has a symmetric pair");
  }
  const Graph shape = generalized_mycielski(g_hat.underlying(), 2);
  const int n = g_hat.order();
  const Vertex apex = 2 * n;
  std::vector<Arc> arcs;
  for (auto [u, v] : g_hat.arcs()) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(n + u, v);
    arcs.emplace_back(u, n + v);
  }
  for (Vertex u = 0; u < n; ++u) arcs.emplace_back(n + u, apex);
  return Digraph(shape.order(), std::move(arcs), shape.labels());
}

}  // namespace loccol
