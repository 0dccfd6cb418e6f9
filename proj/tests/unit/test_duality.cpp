#include <gtest/gtest.h>

#include <random>
#include <set>

#include "loccol/duality.hpp"
#include "loccol/generators.hpp"
#include "loccol/solvers.hpp"
#include "oracles.hpp"

using namespace loccol;

namespace {

void validate(const Digraph& d, const DualityOutcome& out) {
  if (out.local2()) {
    const auto& c = out.coloring->colors;
    EXPECT_TRUE(oracle::proper(d.underlying(), c));
    for (Vertex v = 0; v < d.order(); ++v) {
      std::set<int> seen;
      for (Vertex w : d.out_neighbors(v)) seen.insert(c[w]);
      EXPECT_LE(seen.size(), 1u);
    }
    ASSERT_TRUE(out.shift_map);
    EXPECT_TRUE(is_homomorphism(d, sym_directed_shift(out.shift_m), *out.shift_map));
  } else {
    ASSERT_TRUE(out.witness);
    EXPECT_GE(out.h, 1);
    EXPECT_TRUE(is_homomorphism(alternating_odd_cycle(out.h), d, *out.witness));
  }
}

}  // namespace

TEST(Duality, AlternatingCyclesAreObstructions) {
  for (int h = 1; h <= 4; ++h) {
    const Digraph d = alternating_odd_cycle(h);
    const auto out = decide_local2(d);
    EXPECT_FALSE(out.local2());
    validate(d, out);
  }
}

TEST(Duality, DirectedCyclesAreLocal2) {
  for (int n : {3, 5, 7}) {
    const Digraph d = directed_cycle(n);
    const auto out = decide_local2(d);
    EXPECT_TRUE(out.local2());
    validate(d, out);
  }
}

TEST(Duality, AllOrientationsOfSmallCycles) {
  for (int n : {3, 5}) {
    const Graph c = cycle_graph(n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const Digraph d = oracle::orientation_from_mask(c, mask);
      const auto out = decide_local2(d);
      EXPECT_EQ(out.local2(), oracle::directed_local_chromatic(d) <= 2) << n << " " << mask;
      validate(d, out);
    }
  }
}

TEST(Duality, RandomDigraphs) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 5;
    std::bernoulli_distribution edge(0.45), dir(0.5);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (edge(rng)) dir(rng) ? arcs.emplace_back(u, v) : arcs.emplace_back(v, u);
    const Digraph d(n, arcs);
    const auto out = decide_local2(d);
    EXPECT_EQ(out.local2(), oracle::directed_local_chromatic(d) <= 2) << trial;
    validate(d, out);
  }
}

TEST(Duality, EdgelessDigraph) {
  const auto out = decide_local2(Digraph(3, {}));
  EXPECT_TRUE(out.local2());
  validate(Digraph(3, {}), out);
}
