#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "loccol/budget.hpp"
#include "loccol/generators.hpp"
#include "loccol/rational.hpp"

namespace loccol {

/// Per-vertex data of the s-wide orientation construction. Vectors indexed
/// by color are 0-based (entry i-1 belongs to color i); sets hold 1-based
/// colors.
struct SwideVertexState {
  WideVertex f;
  int s = 0;
  int t = 0;
  int chi = 0;
  std::vector<int> even;  // E
  std::vector<int> odd;   // O
  std::vector<long long> p;
  std::vector<long long> q;
  std::vector<Rational> P;
  std::vector<Rational> Q;
  Rational eps;
  std::map<int, Rational> D;  // keyed by color i with f(i) = 1
  std::map<int, Rational> X;
  std::vector<int> S;  // sorted
};

int swide_tau(int t);

/// Throws BadParameter unless s >= 2, t >= 2 and f is a vertex of W(s,t).
SwideVertexState swide_state(const WideVertex& f, int s, int t);

struct PropertyReport {
  bool property1_ok = true;
  bool property2_ok = true;
  /// Edges {f,g} (vertex indices of W(s,t)) with chi(f) not in S(g) and
  /// chi(g) not in S(f).
  std::vector<std::pair<Vertex, Vertex>> failures;
};

struct SwideResult {
  WideUniversal w;
  std::vector<SwideVertexState> states;
  PropertyReport report;
  /// Present only when both properties hold.
  std::optional<Digraph> orientation;
};

/// Builds W(s,t), computes S(f) everywhere and checks both properties. When
/// they hold, f -> g whenever chi(g) is in S(f) (lower index first if both
/// directions qualify). Throws BudgetExceeded.
SwideResult swide_orientation(int s, int t, const Budget& budget = {});

}  // namespace loccol
