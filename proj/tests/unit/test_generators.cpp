#include <gtest/gtest.h>

#include <map>

#include "loccol/error.hpp"
#include "loccol/generators.hpp"
#include "loccol/io.hpp"
#include "loccol/solvers.hpp"
#include "oracles.hpp"

using namespace loccol;

namespace {

long long choose(int n, int k) {
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Edges of the shift-type graph straight from the defining rule.
int rule_edges(int m, bool symmetric) {
  std::vector<std::pair<int, int>> vs;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (symmetric ? i != j : i < j) vs.emplace_back(i, j);
  int count = 0;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      auto [i, j] = vs[a];
      auto [k, l] = vs[b];
      if (j == k || l == i) ++count;
    }
  return count;
}

std::vector<int> outdegrees(const Digraph& d) {
  std::vector<int> out;
  for (Vertex v = 0; v < d.order(); ++v) out.push_back(d.out_degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(ShiftGraph, SizesFromTripleCount) {
  for (int m = 2; m <= 9; ++m) {
    const Graph h = shift_graph(m);
    EXPECT_EQ(h.order(), m * (m - 1) / 2);
    EXPECT_EQ(h.size(), choose(m, 3));
    EXPECT_EQ(h.size(), rule_edges(m, false));
  }
  const Graph h3 = shift_graph(3);
  EXPECT_EQ(h3.size(), 1);
  EXPECT_TRUE(h3.adjacent(*h3.find_label(PairLabel{1, 2}), *h3.find_label(PairLabel{2, 3})));
  EXPECT_EQ(shift_graph(4).size(), 4);
  EXPECT_THROW(shift_graph(1), Error);
}

TEST(ShiftGraph, TriangleFree) {
  for (int m = 2; m <= 10; ++m) {
    const Graph h = shift_graph(m);
    for (auto [u, v] : h.edges())
      for (Vertex w : h.neighbors(u)) EXPECT_FALSE(h.adjacent(v, w)) << m;
  }
}

TEST(ShiftGraph, IndexFunctions) {
  for (int m = 2; m <= 7; ++m) {
    const Graph h = shift_graph(m);
    const Graph s = symmetric_shift_graph(m);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        if (i == j) continue;
        EXPECT_EQ(symmetric_shift_index(m, i, j), *s.find_label(PairLabel{i, j}));
        if (i < j) EXPECT_EQ(shift_index(m, i, j), *h.find_label(PairLabel{i, j}));
      }
  }
}

TEST(ShiftGraph, InducedInSymmetric) {
  for (int m = 2; m <= 7; ++m) {
    const Graph h = shift_graph(m);
    const Graph s = symmetric_shift_graph(m);
    for (Vertex u = 0; u < h.order(); ++u)
      for (Vertex v = 0; v < h.order(); ++v) {
        const Vertex su = *s.find_label(h.label(u));
        const Vertex sv = *s.find_label(h.label(v));
        EXPECT_EQ(h.adjacent(u, v), s.adjacent(su, sv));
      }
  }
}

TEST(SymmetricShift, Sizes) {
  const Graph s3 = symmetric_shift_graph(3);
  EXPECT_EQ(s3.order(), 6);
  EXPECT_EQ(s3.size(), 9);
  for (int m = 2; m <= 7; ++m) EXPECT_EQ(symmetric_shift_graph(m).size(), rule_edges(m, true));
}

TEST(SymmetricShift, DirectedVersion) {
  const Digraph d = sym_directed_shift(3);
  EXPECT_FALSE(d.is_orientation());
  const Graph s3 = symmetric_shift_graph(3);
  const Vertex a = *s3.find_label(PairLabel{1, 2});
  const Vertex b = *s3.find_label(PairLabel{2, 1});
  EXPECT_TRUE(d.has_arc(a, b));
  EXPECT_TRUE(d.has_arc(b, a));
  for (int m = 2; m <= 6; ++m) {
    const Digraph dm = sym_directed_shift(m);
    EXPECT_EQ(dm.underlying(), symmetric_shift_graph(m));
    for (auto [u, v] : dm.arcs()) {
      auto p = std::get<PairLabel>(dm.label(u));
      auto q = std::get<PairLabel>(dm.label(v));
      EXPECT_EQ(p.second, q.first);
    }
  }
}

TEST(Kneser, PetersenAndSchrijver) {
  const Graph p = kneser(5, 2);
  EXPECT_EQ(p.order(), 10);
  EXPECT_EQ(p.size(), 15);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3);
  const Graph sg = schrijver(6, 2);
  EXPECT_EQ(sg.order(), 9);
  EXPECT_EQ(oracle::chromatic(sg), 4);
  EXPECT_EQ(chromatic_number(sg).value, 4);
  const Graph tiny = schrijver(4, 2);
  EXPECT_EQ(tiny.order(), 2);
  EXPECT_EQ(tiny.size(), 1);
  EXPECT_EQ(to_string(tiny.label(0)), "{1,3}");
  EXPECT_THROW(kneser(3, 2), Error);
}

TEST(Mycielski, SmallCases) {
  const Graph c5 = generalized_mycielski(complete_graph(2), 2);
  EXPECT_EQ(c5.order(), 5);
  EXPECT_EQ(c5.size(), 5);
  for (int r = 1; r <= 5; ++r) {
    const Graph g = generalized_mycielski(complete_graph(2), r);
    EXPECT_EQ(g.order(), 2 * r + 1);
    EXPECT_EQ(g.size(), 2 * r + 1);
    for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(g.degree(v), 2);
    // connected and 2-regular: a single cycle, isomorphic to C_{2r+1}
    EXPECT_TRUE(find_homomorphism(g, cycle_graph(2 * r + 1)).has_value());
    EXPECT_EQ(oracle::chromatic(g), 3);
  }
  const Graph grotzsch = generalized_mycielski(cycle_graph(5), 2);
  EXPECT_EQ(grotzsch.order(), 11);
  EXPECT_EQ(grotzsch.size(), 20);
  EXPECT_EQ(chromatic_number(grotzsch).value, 4);
  EXPECT_THROW(generalized_mycielski(cycle_graph(5), 0), Error);
}

TEST(WideUniversal, OneIsComplete) {
  for (int t = 2; t <= 6; ++t) {
    auto w = wide_universal(1, t);
    EXPECT_EQ(w.graph.edges(), complete_graph(t).edges());
    EXPECT_EQ(w.graph.size(), t * (t - 1) / 2);
    EXPECT_EQ(w.natural.distinct_count(), t);
  }
}

TEST(WideUniversal, CountByFiltering) {
  for (int s = 1; s <= 3; ++s)
    for (int t = 2; t <= 5; ++t) {
      long long count = 0;
      oracle::each_assignment(t, s + 1, [&](const std::vector<int>& f) {
        count += is_wide_vertex(f, s);
      });
      auto w = wide_universal(s, t);
      EXPECT_EQ(w.graph.order(), count);
      EXPECT_EQ(wide_universal_order(s, t), count);
    }
  EXPECT_EQ(wide_universal(2, 4).graph.order(), 28);
}

TEST(WideUniversal, NaturalColoringIsWide) {
  for (int s = 1; s <= 3; ++s)
    for (int t = 2; t <= 5; ++t) {
      if (wide_universal_order(s, t) > 200) continue;
      auto w = wide_universal(s, t);
      EXPECT_TRUE(oracle::proper(w.graph, w.natural.colors));
      EXPECT_TRUE(oracle::s_wide(w.graph, w.natural.colors, s)) << s << "," << t;
      EXPECT_TRUE(is_s_wide(w.graph, w.natural, s));
    }
}

TEST(WideUniversal, Deterministic) {
  EXPECT_EQ(to_json(wide_universal(2, 4).graph), to_json(wide_universal(2, 4).graph));
  EXPECT_EQ(to_json(kneser(6, 2)), to_json(kneser(6, 2)));
}

TEST(AlternatingOddCycle, Shape) {
  EXPECT_EQ(outdegrees(alternating_odd_cycle(1)), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(outdegrees(alternating_odd_cycle(2)), (std::vector<int>{0, 0, 1, 2, 2}));
  for (int h = 1; h <= 6; ++h) {
    const Digraph d = alternating_odd_cycle(h);
    EXPECT_TRUE(is_alternating_odd_cycle(d));
    EXPECT_EQ(d.order(), 2 * h + 1);
  }
  EXPECT_FALSE(is_alternating_odd_cycle(directed_cycle(5)));
  EXPECT_THROW(alternating_odd_cycle(0), Error);
}

TEST(BalancedOrientation, Outdegrees) {
  EXPECT_EQ(outdegrees(balanced_complete_orientation(3)), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(outdegrees(balanced_complete_orientation(5)), (std::vector<int>{2, 2, 2, 2, 2}));
  for (int r = 1; r <= 9; ++r) {
    const Digraph d = balanced_complete_orientation(r);
    EXPECT_TRUE(d.is_orientation());
    EXPECT_EQ(d.underlying(), complete_graph(r));
    EXPECT_EQ(outdegrees(d).back(), r / 2) << r;
  }
}
