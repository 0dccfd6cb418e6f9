#include "loccol/swide.hpp"

#include <algorithm>

#include "loccol/error.hpp"

namespace loccol {

namespace {

Rational fractional_part(const Rational& x) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(x);
  const cpp_int den = boost::multiprecision::denominator(x);
  cpp_int floor = num / den;
  if (num < 0 && floor * den != num) floor -= 1;
  return x - Rational(floor);
}

}  // namespace

int swide_tau(int t) { return (t + 3) / 4; }

SwideVertexState swide_state(const WideVertex& f, int s, int t) {
  if (s < 2 || t < 2) throw Error(ErrorCode::BadParameter, "need s >= 2 and t >= 2");
  if (f.size() != t || !is_wide_vertex(f.f, s)) {
    throw Error(ErrorCode::BadParameter, "not a vertex of W(s,t)");
  }
  SwideVertexState st;
  st.f = f;
  st.s = s;
  st.t = t;
  st.chi = f.color();
  long long p = 0, q = 0;
  for (int i = 1; i <= t; ++i) {
    const int weight = s - f.at(i);
    if (f.at(i) % 2 == 0) {
      st.even.push_back(i);
      p += weight;
    } else {
      st.odd.push_back(i);
      q += weight;
    }
    st.p.push_back(p);
    st.q.push_back(q);
  }
  const long long pt = st.p.back();
  const long long qt = st.q.back();
  const Rational half_first(s - f.at(1), 2);
  const bool first_even = f.at(1) % 2 == 0;
  for (int i = 0; i < t; ++i) {
    if (first_even) {
      st.P.push_back((Rational(st.p[i]) - half_first) / pt);
      st.Q.push_back(Rational(st.q[i], qt));
    } else {
      st.P.push_back(Rational(st.p[i], pt));
      st.Q.push_back((Rational(st.q[i]) - half_first) / qt);
    }
  }
  st.eps = Rational(t, s - 1);

  std::vector<int> ones;
  for (int i = 1; i <= t; ++i) {
    if (f.at(i) == 1) ones.push_back(i);
  }
  const int tau = swide_tau(t);
  if (static_cast<int>(ones.size()) <= tau) {
    st.S = ones;
    return st;
  }
  const Rational& pc = st.P[st.chi - 1];
  for (int i : ones) {
    Rational d = st.Q[i - 1] - pc + 2 * st.eps;
    st.X.emplace(i, fractional_part(d));
    st.D.emplace(i, std::move(d));
  }
  std::stable_sort(ones.begin(), ones.end(),
                   [&](int a, int b) { return st.X.at(a) < st.X.at(b); });
  st.S.assign(ones.begin(), ones.begin() + tau);
  std::sort(st.S.begin(), st.S.end());
  return st;
}

SwideResult swide_orientation(int s, int t, const Budget& budget) {
  if (s < 2 || t < 2) throw Error(ErrorCode::BadParameter, "need s >= 2 and t >= 2");
  BudgetMeter meter(budget);
  SwideResult out;
  out.w = wide_universal(s, t);
  const Graph& g = out.w.graph;
  const int tau = swide_tau(t);
  for (const auto& f : out.w.vertices) {
    if (!meter.tick()) throw Error(ErrorCode::BudgetExceeded, "swide state computation");
    out.states.push_back(swide_state(f, s, t));
    if (static_cast<int>(out.states.back().S.size()) > tau) out.report.property1_ok = false;
  }
  auto in_s = [&](Vertex v, int color) {
    const auto& set = out.states[v].S;
    return std::binary_search(set.begin(), set.end(), color);
  };
  for (auto [u, v] : g.edges()) {
    if (!meter.tick()) throw Error(ErrorCode::BudgetExceeded, "swide edge check");
    if (!in_s(u, out.states[v].chi) && !in_s(v, out.states[u].chi)) {
      out.report.property2_ok = false;
      out.report.failures.emplace_back(u, v);
    }
  }
  if (out.report.property1_ok && out.report.property2_ok) {
    out.orientation = orient(g, [&](Vertex u, Vertex v) { return in_s(u, out.states[v].chi); });
  }
  return out;
}

}  // namespace loccol
