#include <gtest/gtest.h>

#include <random>

#include "loccol/coloring.hpp"
#include "loccol/error.hpp"
#include "loccol/generators.hpp"
#include "loccol/solvers.hpp"
#include "oracles.hpp"

using namespace loccol;

namespace {

int ceil_log2(int m) {
  int k = 0;
  while ((1 << k) < m) ++k;
  return k;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Digraph random_orientation(std::mt19937& rng, const Graph& g) {
  std::bernoulli_distribution coin(0.5);
  return orient(g, [&](Vertex, Vertex) { return coin(rng); });
}

}  // namespace

TEST(Chromatic, ShiftGraphs) {
  for (int m = 2; m <= 10; ++m) {
    auto r = chromatic_number(shift_graph(m));
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.value, ceil_log2(m)) << m;
    ASSERT_TRUE(r.coloring);
    EXPECT_TRUE(is_proper(shift_graph(m), *r.coloring));
    EXPECT_EQ(r.coloring->distinct_count(), r.value);
  }
  EXPECT_EQ(chromatic_number(complete_graph(5)).value, 5);
}

TEST(Chromatic, AgreesWithBruteForce) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(rng, 3 + trial % 6, 0.2 + 0.15 * (trial % 5));
    EXPECT_EQ(chromatic_number(g).value, oracle::chromatic(g));
    EXPECT_EQ(independence_number(g).value, oracle::independence(g));
  }
}

TEST(Independence, SymmetricShift) {
  for (int m = 3; m <= 6; ++m) {
    const Graph s = symmetric_shift_graph(m);
    auto r = independence_number(s);
    EXPECT_EQ(r.value, ((m + 1) / 2) * (m / 2));
    ASSERT_TRUE(r.vertex_set);
    EXPECT_EQ(static_cast<int>(r.vertex_set->size()), r.value);
    for (Vertex u : *r.vertex_set)
      for (Vertex v : *r.vertex_set) EXPECT_FALSE(s.adjacent(u, v));
    // vertex transitive: |V| / alpha is the fractional chromatic number, below 4
    EXPECT_LT(s.order(), 4 * r.value);
  }
  EXPECT_EQ(independence_number(complete_graph(6)).value, 1);
}

TEST(Chromatic, SymmetricShift) {
  auto chi = [](int m) {
    int k = 1;
    auto binom = [](int n, int j) {
      long long out = 1;
      for (int i = 1; i <= j; ++i) out = out * (n - j + i) / i;
      return out;
    };
    while (binom(k, (k + 1) / 2) < m) ++k;
    return k;
  };
  for (int m = 3; m <= 5; ++m) EXPECT_EQ(chromatic_number(symmetric_shift_graph(m)).value, chi(m));
}

TEST(LocalChromatic, SmallFamilies) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(local_chromatic(complete_graph(n)).value, n);
  EXPECT_EQ(local_chromatic(shift_graph(8)).value, 3);
  EXPECT_EQ(local_chromatic(shift_graph(7)).value, 3);
  EXPECT_EQ(local_chromatic(symmetric_shift_graph(3)).value, 3);
  EXPECT_GE(local_chromatic(symmetric_shift_graph(4)).value, 3);
  EXPECT_EQ(local_chromatic(cycle_graph(5)).value, 3);
  EXPECT_EQ(local_chromatic(cycle_graph(6)).value, 2);
}

TEST(LocalChromatic, AgreesWithBruteForce) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(rng, 3 + trial % 5, 0.3 + 0.1 * (trial % 4));
    auto r = local_chromatic(g);
    EXPECT_EQ(r.value, oracle::local_chromatic(g)) << trial;
    ASSERT_TRUE(r.coloring);
    EXPECT_EQ(local_value(g, *r.coloring), r.value);
  }
}

TEST(LocalChromatic, BipartiteIsTwo) {
  for (const Graph& g : {cycle_graph(8), path_graph(5), shift_graph(4), complete_graph(2)}) {
    EXPECT_EQ(local_chromatic(g).value, 2);
  }
}

TEST(LocalChromatic, TooLarge) {
  SolverOptions o;
  o.vertex_limit = 10;
  EXPECT_THROW(local_chromatic(shift_graph(6), o), Error);
}

TEST(DirectedLocal, SmallFamilies) {
  for (int h = 1; h <= 3; ++h) EXPECT_EQ(directed_local_chromatic(alternating_odd_cycle(h)).value, 3);
  EXPECT_EQ(directed_local_chromatic(directed_cycle(5)).value, 2);
  EXPECT_EQ(directed_local_chromatic(transitive_tournament(3)).value, 3);
}

TEST(DirectedLocal, AgreesWithBruteForce) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(rng, 3 + trial % 5, 0.4);
    const Digraph d = random_orientation(rng, g);
    auto r = directed_local_chromatic(d);
    EXPECT_EQ(r.value, oracle::directed_local_chromatic(d)) << trial;
    ASSERT_TRUE(r.coloring);
    EXPECT_EQ(directed_local_value(d, *r.coloring), r.value);
  }
}

TEST(Orientations, CompleteGraphs) {
  for (int r = 2; r <= 5; ++r) EXPECT_EQ(psi_d_min(complete_graph(r)).value, r / 2 + 1);
}

TEST(Orientations, FiveCycle) {
  EXPECT_EQ(psi_d_min(cycle_graph(5)).value, 2);
  auto hi = psi_d_max(cycle_graph(5));
  EXPECT_EQ(hi.value, 3);
  ASSERT_TRUE(hi.orientation);
  ASSERT_TRUE(hi.coloring);
  EXPECT_EQ(directed_local_value(*hi.orientation, *hi.coloring), 3);
}

// Reversing every arc can change psi_d: a source joined to a directed
// triangle needs 4, its reverse only 3.
TEST(Orientations, ReversalIsNotASymmetry) {
  const Digraph d(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}});
  std::vector<Arc> reversed;
  for (auto [u, v] : d.arcs()) reversed.emplace_back(v, u);
  EXPECT_EQ(directed_local_chromatic(d).value, 4);
  EXPECT_EQ(directed_local_chromatic(Digraph(4, reversed)).value, 3);
}

TEST(Orientations, AgreeWithEnumeration) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    const Graph g = random_graph(rng, 4 + trial % 3, 0.5);
    if (g.size() > 10) continue;
    int lo = 100, hi = 0;
    for (std::uint32_t mask = 0; mask < (1u << g.size()); ++mask) {
      const int v = oracle::directed_local_chromatic(oracle::orientation_from_mask(g, mask));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    EXPECT_EQ(psi_d_min(g).value, lo);
    EXPECT_EQ(psi_d_max(g).value, hi);
  }
}

TEST(Orientations, WorkersDoNotChangeResults) {
  for (const Graph& g : {complete_graph(5), cycle_graph(7), kneser(5, 2)}) {
    if (g.size() > 16) continue;
    SolverOptions one, four;
    four.workers = 4;
    auto a = psi_d_min(g, one);
    auto b = psi_d_min(g, four);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.orientation, b.orientation);
    auto c = psi_d_max(g, one);
    auto d = psi_d_max(g, four);
    EXPECT_EQ(c.value, d.value);
    EXPECT_EQ(c.orientation, d.orientation);
  }
}

TEST(Orientations, EdgeLimit) {
  EXPECT_THROW(psi_d_min(complete_graph(7)), Error);
}

TEST(Budget, InexactReport) {
  SolverOptions o;
  o.budget.nodes = 1;
  auto r = psi_d_max(complete_graph(5), o);
  if (!r.exact) EXPECT_GE(r.bound, r.value);
}

TEST(Wide, Basics) {
  EXPECT_TRUE(is_s_wide(cycle_graph(6), Coloring{{0, 1, 0, 1, 0, 1}}, 3));
  auto k3 = is_s_wide(complete_graph(3), Coloring{{0, 1, 2}}, 2);
  EXPECT_FALSE(k3);
  EXPECT_EQ(k3.violation->first, k3.violation->second);
  const auto w = wide_universal(2, 4);
  EXPECT_TRUE(is_s_wide(w.graph, w.natural, 2));
}

TEST(Wide, OneWideIsProper) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(rng, 6, 0.4);
    Coloring c;
    for (int v = 0; v < 6; ++v) c.colors.push_back(static_cast<int>(rng() % 3));
    EXPECT_EQ(static_cast<bool>(is_s_wide(g, c, 1)), static_cast<bool>(is_proper(g, c)));
    EXPECT_EQ(static_cast<bool>(is_s_wide(g, c, 2)), oracle::s_wide(g, c.colors, 2));
  }
}

TEST(Homomorphism, Undirected) {
  auto h = find_homomorphism(cycle_graph(5), complete_graph(3));
  ASSERT_TRUE(h);
  EXPECT_TRUE(is_homomorphism(cycle_graph(5), complete_graph(3), *h));
  EXPECT_FALSE(find_homomorphism(cycle_graph(5), cycle_graph(7)));
  EXPECT_TRUE(find_homomorphism(cycle_graph(7), cycle_graph(5)));
}

TEST(Homomorphism, AgreesWithBruteForce) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const Digraph a = random_orientation(rng, random_graph(rng, 5, 0.5));
    const Digraph b = random_orientation(rng, random_graph(rng, 4, 0.6));
    EXPECT_EQ(find_homomorphism(a, b).has_value(), oracle::hom_exists(a, b));
  }
}

TEST(Homomorphism, AlternatingCyclesAvoidShiftGraphs) {
  for (int h = 1; h <= 3; ++h)
    for (int m = 2; m <= 5; ++m)
      EXPECT_FALSE(find_homomorphism(alternating_odd_cycle(h), sym_directed_shift(m)));
}

TEST(Homomorphism, BudgetExceeded) {
  Budget tiny;
  tiny.nodes = 1;
  try {
    find_homomorphism(kneser(7, 3), complete_graph(4), tiny);
    SUCCEED();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(ProperColorings, CountsMatchBruteForce) {
  for (const Graph& g : {cycle_graph(5), path_graph(4), complete_graph(3)}) {
    std::set<std::vector<int>> canonical;
    oracle::each_assignment(g.order(), g.order(), [&](const std::vector<int>& c) {
      if (oracle::proper(g, c)) canonical.insert(Coloring{c}.canonical().colors);
    });
    std::uint64_t seen = 0;
    for_each_proper_coloring(g, [&](const Coloring& c) {
      EXPECT_TRUE(canonical.count(c.colors));
      ++seen;
      return true;
    });
    EXPECT_EQ(seen, canonical.size());
  }
}
