#include <gtest/gtest.h>

#include <algorithm>

#include "loccol/coloring.hpp"
#include "loccol/error.hpp"
#include "loccol/swide.hpp"
#include "oracles.hpp"

using namespace loccol;

namespace {

// S(f) with every quantity scaled to an integer over L = 2 p_t q_t (s-1).
std::vector<int> integer_s(const std::vector<int>& f, int s, int t) {
  long long pt = 0, qt = 0;
  std::vector<long long> p, q;
  for (int x : f) {
    (x % 2 == 0 ? pt : qt) += s - x;
    p.push_back(pt);
    q.push_back(qt);
  }
  const long long L = 2 * pt * qt * (s - 1);
  const long long h = s - f[0];  // twice (s - f(1)) / 2
  auto P = [&](int i) {
    return f[0] % 2 == 0 ? (2 * p[i] - h) * qt * (s - 1) : 2 * p[i] * qt * (s - 1);
  };
  auto Q = [&](int i) {
    return f[0] % 2 == 0 ? 2 * q[i] * pt * (s - 1) : (2 * q[i] - h) * pt * (s - 1);
  };
  const int c = static_cast<int>(std::find(f.begin(), f.end(), 0) - f.begin());
  std::vector<std::pair<long long, int>> xs;
  for (int i = 0; i < t; ++i) {
    if (f[i] != 1) continue;
    const long long d = Q(i) - P(c) + 2LL * t * 2 * pt * qt;
    xs.emplace_back(((d % L) + L) % L, i + 1);
  }
  const int tau = (t + 3) / 4;
  std::sort(xs.begin(), xs.end());
  std::vector<int> out;
  for (int j = 0; j < std::min<int>(tau, xs.size()); ++j) out.push_back(xs[j].second);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(SwideState, HandExample) {
  const auto st = swide_state(WideVertex{{0, 1, 1, 1}}, 2, 4);
  EXPECT_EQ(st.chi, 1);
  EXPECT_EQ(st.even, (std::vector<int>{1}));
  EXPECT_EQ(st.odd, (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(st.p, (std::vector<long long>{2, 2, 2, 2}));
  EXPECT_EQ(st.q, (std::vector<long long>{0, 1, 2, 3}));
  EXPECT_EQ(st.P[0], Rational(1, 2));
  EXPECT_EQ(st.Q[2], Rational(2, 3));
  EXPECT_EQ(st.eps, Rational(4));
  EXPECT_EQ(st.X.at(2), Rational(5, 6));
  EXPECT_EQ(st.X.at(3), Rational(1, 6));
  EXPECT_EQ(st.X.at(4), Rational(1, 2));
  EXPECT_EQ(st.S, (std::vector<int>{3}));
}

TEST(SwideState, FewOnesAreTakenWhole) {
  const auto st = swide_state(WideVertex{{0, 1, 2, 2}}, 2, 4);
  EXPECT_EQ(st.S, (std::vector<int>{2}));
  EXPECT_TRUE(st.X.empty());
}

TEST(SwideState, MatchesIntegerArithmetic) {
  for (int s : {2, 3, 4})
    for (int t : {4, 5}) {
      const auto w = wide_universal(s, t);
      for (const auto& f : w.vertices) {
        const auto st = swide_state(f, s, t);
        EXPECT_EQ(st.S, integer_s(f.f, s, t));
        EXPECT_GE(st.p.back(), s);
        EXPECT_GE(st.q.back(), s - 1);
        EXPECT_LE(static_cast<int>(st.S.size()), swide_tau(t));
        for (int c : st.S) EXPECT_EQ(f.at(c), 1);
      }
    }
}

TEST(SwideState, Rejects) {
  EXPECT_THROW(swide_state(WideVertex{{1, 1, 1, 1}}, 2, 4), Error);
  EXPECT_THROW(swide_state(WideVertex{{0, 1, 1, 1}}, 1, 4), Error);
}

TEST(SwideOrientation, SmallWidthFails) {
  const auto r = swide_orientation(2, 4);
  EXPECT_TRUE(r.report.property1_ok);
  EXPECT_FALSE(r.report.property2_ok);
  EXPECT_FALSE(r.orientation);
  ASSERT_FALSE(r.report.failures.empty());
  for (auto [u, v] : r.report.failures) {
    EXPECT_TRUE(r.w.graph.adjacent(u, v));
    const auto& su = r.states[u].S;
    const auto& sv = r.states[v].S;
    EXPECT_EQ(std::count(su.begin(), su.end(), r.states[v].chi), 0);
    EXPECT_EQ(std::count(sv.begin(), sv.end(), r.states[u].chi), 0);
  }
}

TEST(SwideOrientation, WiderPassesWithValueTwo) {
  for (int s = 3; s <= 5; ++s) {
    const auto r = swide_orientation(s, 4);
    ASSERT_TRUE(r.orientation) << s;
    EXPECT_EQ(r.orientation->underlying(), r.w.graph);
    const int v = directed_local_value(*r.orientation, r.w.natural);
    EXPECT_EQ(v, oracle::directed_local_of(*r.orientation, r.w.natural.colors));
    EXPECT_LE(v, swide_tau(4) + 1);
  }
}

TEST(SwideOrientation, Budget) {
  Budget b;
  b.nodes = 3;
  try {
    swide_orientation(3, 4, b);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}
