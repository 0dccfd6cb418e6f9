#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "loccol/coloring.hpp"
#include "loccol/constructions.hpp"
#include "loccol/duality.hpp"
#include "loccol/error.hpp"
#include "loccol/generators.hpp"
#include "loccol/solvers.hpp"
#include "loccol/swide.hpp"

namespace loccol::harness {

bool VerificationSuite::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

int ceil_log2(int m) {
  int k = 0;
  while ((1 << k) < m) ++k;
  return k;
}

long long binom(int n, int k) {
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::string show(const SolveReport& r) {
  return r.exact ? std::to_string(r.value)
                 : std::to_string(r.value) + " (inexact, bound " + std::to_string(r.bound) + ")";
}

class Recorder {
 public:
  Recorder(VerificationSuite& suite, const HarnessOptions& opts) : suite_(suite), opts_(opts) {}

  void equal(std::string desc, long long expected, long long computed) {
    add(std::move(desc), std::to_string(expected), std::to_string(computed), expected == computed);
  }

  void equal(std::string desc, int expected, const SolveReport& r) {
    add(std::move(desc), std::to_string(expected), show(r), r.exact && r.value == expected);
  }

  void truth(std::string desc, bool ok, std::string computed = {}) {
    add(std::move(desc), "true", computed.empty() ? (ok ? "true" : "false") : computed, ok);
  }

  void add(std::string desc, std::string expected, std::string computed, bool pass) {
    suite_.checks.push_back({std::move(desc), std::move(expected), std::move(computed), pass});
  }

  void note(std::string text) { suite_.notes.push_back(std::move(text)); }

  SolverOptions solver() const {
    SolverOptions o;
    o.budget = opts_.budget;
    o.workers = opts_.workers;
    return o;
  }

  const HarnessOptions& options() const { return opts_; }

 private:
  VerificationSuite& suite_;
  const HarnessOptions& opts_;
};

std::string label_list(const Graph& g, const std::vector<Vertex>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += to_string(g.label(vs[i]));
  }
  return out + "}";
}

void suite_log_bands(Recorder& rec) {
  for (int m = 2; m <= 10; ++m) {
    rec.equal("chi(H_" + std::to_string(m) + ")", ceil_log2(m),
              chromatic_number(shift_graph(m), rec.solver()));
  }
  for (int m : {7, 8}) {
    rec.equal("psi(H_" + std::to_string(m) + ")", ceil_log2(m),
              local_chromatic(shift_graph(m), rec.solver()));
  }
  for (int m : {5, 6}) {
    const int c = ceil_log2(m);
    auto r = local_chromatic(shift_graph(m), rec.solver());
    rec.add("psi(H_" + std::to_string(m) + ") in {chi-1, chi}",
            std::to_string(c - 1) + " or " + std::to_string(c), show(r),
            r.exact && (r.value == c || r.value == c - 1));
  }
}

void suite_slog(Recorder& rec) {
  for (int m = 3; m <= 6; ++m) {
    rec.equal("alpha(S_" + std::to_string(m) + ")", ((m + 1) / 2) * (m / 2),
              independence_number(symmetric_shift_graph(m), rec.solver()));
  }
  for (int m = 3; m <= 5; ++m) {
    int k = 1;
    while (binom(k, (k + 1) / 2) < m) ++k;
    rec.equal("chi(S_" + std::to_string(m) + ")", k,
              chromatic_number(symmetric_shift_graph(m), rec.solver()));
  }
  rec.equal("psi(S_3)", 3, local_chromatic(symmetric_shift_graph(3), rec.solver()));
  auto r4 = local_chromatic(symmetric_shift_graph(4), rec.solver());
  const int lower = ceil_log2(4 + 2);
  rec.add("psi(S_4) >= ceil(log2 6)", ">= " + std::to_string(lower), show(r4),
          r4.exact ? r4.value >= lower : r4.bound >= lower);
}

void suite_notop(Recorder& rec) {
  for (int m = 2; m <= 8; ++m) {
    const Graph h = shift_graph(m);
    auto hit = find_rainbow_biclique(h, first_coordinate_coloring(h), 2, 2);
    rec.truth("no rainbow K_{2,2} in H_" + std::to_string(m), !hit.has_value());
  }
  for (int m = 3; m <= 6; ++m) {
    const Graph s = symmetric_shift_graph(m);
    auto hit = find_rainbow_biclique(s, first_coordinate_coloring(s), 2, 3);
    rec.truth("no rainbow K_{2,3} in S_" + std::to_string(m), !hit.has_value());
  }
  const Graph s4 = symmetric_shift_graph(4);
  auto hit = find_rainbow_biclique(s4, first_coordinate_coloring(s4), 2, 2);
  const std::string expected = "{(1,2),(3,4)}x{(2,3),(4,1)}";
  const std::string computed =
      hit ? label_list(s4, hit->side_a) + "x" + label_list(s4, hit->side_b) : "none";
  rec.add("rainbow K_{2,2} in S_4 under c(i,j)=i", expected, computed, expected == computed);

  std::uint64_t colorings = 0;
  bool every = true;
  for_each_proper_coloring(s4, [&](const Coloring& c) {
    ++colorings;
    if (!find_rainbow_biclique(s4, c, 2, 2)) every = false;
    return every;
  });
  rec.truth("every proper coloring of S_4 has a rainbow 4-cycle", every,
            std::string(every ? "true" : "false") + " over " + std::to_string(colorings) +
                " colorings");
}

void suite_shmind(Recorder& rec) {
  for (int m = 3; m <= 8; ++m) {
    auto [d, c] = oriented_shift_with_coloring(m);
    rec.equal("psi_d of oriented S_" + std::to_string(m) + " under c(i,j)=i", 2,
              directed_local_value(d, c));
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < d.order(); ++v) {
      auto p = std::get<PairLabel>(d.label(v));
      if (p.first < p.second) keep.push_back(v);
    }
    std::vector<int> index(d.order(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
    std::vector<Arc> arcs;
    for (auto [u, v] : d.arcs()) {
      if (index[u] >= 0 && index[v] >= 0) arcs.emplace_back(index[u], index[v]);
    }
    Coloring ch;
    for (Vertex v : keep) ch.colors.push_back(c[v]);
    Digraph restricted(static_cast<int>(keep.size()), std::move(arcs));
    rec.equal("restriction to H_" + std::to_string(m), 2, directed_local_value(restricted, ch));
  }
  for (int m = 3; m <= 4; ++m) {
    auto [d, c] = oriented_shift_with_coloring(m);
    rec.equal("exact psi_d of oriented S_" + std::to_string(m), 2,
              directed_local_chromatic(d, rec.solver()));
  }
}

void suite_compl(Recorder& rec) {
  for (int r = 2; r <= 5; ++r) {
    rec.equal("psi_d,min(K_" + std::to_string(r) + ")", r / 2 + 1,
              psi_d_min(complete_graph(r), rec.solver()));
  }
  const Graph c5 = cycle_graph(5);
  const Coloring three{{0, 1, 0, 1, 2}};
  rec.equal("clique-coloring orientation of C_5", 2,
            directed_local_value(orient_by_clique_coloring(c5, three), three));
  const Graph k4 = complete_graph(4);
  const Coloring four{{0, 1, 2, 3}};
  rec.equal("clique-coloring orientation of K_4", 3,
            directed_local_value(orient_by_clique_coloring(k4, four), four));
  for (int n : {5, 7}) {
    const Graph c = cycle_graph(n);
    auto lo = psi_d_min(c, rec.solver());
    auto hi = psi_d_max(c, rec.solver());
    auto chi = chromatic_number(c, rec.solver());
    rec.add("psi_d,min(C_" + std::to_string(n) + ") <= floor(chi/2)+1",
            "<= " + std::to_string(chi.value / 2 + 1), show(lo),
            lo.exact && lo.value <= chi.value / 2 + 1);
    rec.equal("psi_d,max(C_" + std::to_string(n) + ")", 3, hi);
  }
}

void suite_duality(Recorder& rec) {
  for (int h = 1; h <= 3; ++h) {
    rec.equal("psi_d(alternating odd cycle, h=" + std::to_string(h) + ")", 3,
              directed_local_chromatic(alternating_odd_cycle(h), rec.solver()));
  }

  auto certified = [](const Digraph& d, const DualityOutcome& out) {
    if (out.coloring) {
      const Coloring& c = *out.coloring;
      if (!is_proper(d.underlying(), c)) return false;
      for (Vertex v = 0; v < d.order(); ++v) {
        if (out_neighbor_colors(d, c, v).size() > 1) return false;
      }
      return is_homomorphism(d, sym_directed_shift(out.shift_m), *out.shift_map);
    }
    return is_homomorphism(alternating_odd_cycle(out.h), d, *out.witness);
  };

  int agree = 0, total = 0, certificates = 0;
  std::vector<std::string> disagreements;
  auto compare = [&](const Digraph& d, const std::string& name) {
    const auto out = decide_local2(d);
    const auto exact = directed_local_chromatic(d, rec.solver());
    ++total;
    if (exact.exact && out.local2() == (exact.value <= 2)) {
      ++agree;
    } else if (disagreements.size() < 5) {
      disagreements.push_back(name);
    }
    certificates += certified(d, out);
  };

  for (int n : {3, 5}) {
    const Graph c = cycle_graph(n);
    for (int mask = 0; mask < (1 << n); ++mask) {
      int e = 0;
      compare(orient(c, [&](Vertex, Vertex) { return (mask >> e++) & 1; }),
              "C_" + std::to_string(n) + " mask " + std::to_string(mask));
    }
  }
  std::mt19937_64 rng(rec.options().seed);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 10)(rng);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const double density = coin(rng) * 0.6 + 0.1;
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (coin(rng) >= density) continue;
        if (coin(rng) < 0.5) {
          arcs.emplace_back(u, v);
        } else {
          arcs.emplace_back(v, u);
        }
      }
    }
    compare(Digraph(n, std::move(arcs)), "random #" + std::to_string(trial));
  }
  std::string computed = std::to_string(agree) + "/" + std::to_string(total);
  for (const auto& d : disagreements) computed += "; " + d;
  rec.add("decide_local2 agrees with psi_d <= 2", std::to_string(total) + "/" +
          std::to_string(total), computed, agree == total);
  rec.equal("outcomes carrying a valid certificate", total, certificates);
}

void suite_myc_chain(Recorder& rec) {
  const Digraph arc(2, {{0, 1}});
  const Digraph c5 = mycielski_orientation(arc);
  rec.truth("lift of a single arc is an alternating C_5", is_alternating_odd_cycle(c5));
  rec.equal("psi_d(lifted C_5)", 3, directed_local_chromatic(c5, rec.solver()));
  const Digraph grotzsch = mycielski_orientation(c5);
  const Graph shape = grotzsch.underlying();
  rec.equal("lifted graph order", 11, shape.order());
  rec.equal("lifted graph size", 20, shape.size());
  rec.equal("chi(M(C_5))", 4, chromatic_number(shape, rec.solver()));
  rec.equal("psi_d(oriented Grotzsch graph)", 4,
            directed_local_chromatic(grotzsch, rec.solver()));
}

void suite_hh(Recorder& rec) {
  const auto w4 = wide_universal(2, 4);
  rec.truth("natural coloring of W(2,4) is 2-wide",
            static_cast<bool>(is_s_wide(w4.graph, w4.natural, 2)));
  const Digraph d4 = hh_orientation(w4.graph, w4.natural);
  rec.equal("hh orientation of W(2,4)", 2, directed_local_value(d4, w4.natural));
  const auto w6 = wide_universal(2, 6);
  const Digraph d6 = hh_orientation(w6.graph, w6.natural);
  const int v6 = directed_local_value(d6, w6.natural);
  rec.add("hh orientation of W(2,6)", "<= 3", std::to_string(v6), v6 <= 3);
  rec.truth("hh orientations cover the graphs",
            d4.underlying() == w4.graph && d6.underlying() == w6.graph);
}

void suite_swide(Recorder& rec) {
  const int t = 4;
  const int bound = swide_tau(t) + 1;
  std::optional<int> threshold;
  for (int s = 2;; ++s) {
    if (wide_universal_order(s, t) > 1000) break;
    const auto res = swide_orientation(s, t, rec.options().budget);
    const std::string tag = "(s,t)=(" + std::to_string(s) + "," + std::to_string(t) + ")";
    rec.truth("property 1 " + tag, res.report.property1_ok);
    if (res.orientation) {
      const int value = directed_local_value(*res.orientation, res.w.natural);
      rec.add("oriented W" + tag + " value", "<= " + std::to_string(bound),
              std::to_string(value), value <= bound);
      bool inside = true;
      for (Vertex v = 0; v < res.orientation->order(); ++v) {
        for (int col : out_neighbor_colors(*res.orientation, res.w.natural, v)) {
          const auto& S = res.states[v].S;
          if (!std::binary_search(S.begin(), S.end(), col)) inside = false;
        }
      }
      rec.truth("outneighborhood colors inside S(f) " + tag, inside);
      rec.note("s=" + std::to_string(s) + ": property 2 holds, value " + std::to_string(value));
      if (!threshold) threshold = s;
    } else {
      bool genuine = !res.report.failures.empty();
      for (auto [u, v] : res.report.failures) {
        const auto& su = res.states[u].S;
        const auto& sv = res.states[v].S;
        genuine = genuine && res.w.graph.adjacent(u, v) &&
                  !std::binary_search(su.begin(), su.end(), res.states[v].chi) &&
                  !std::binary_search(sv.begin(), sv.end(), res.states[u].chi);
      }
      rec.truth("property 2 failure comes with witness edges " + tag, genuine,
                std::to_string(res.report.failures.size()) + " failing edges");
      rec.note("s=" + std::to_string(s) + ": property 2 fails on " +
               std::to_string(res.report.failures.size()) + " edges");
    }
  }
  rec.note(threshold ? "empirical threshold s* = " + std::to_string(*threshold)
                     : "no passing s with |V| <= 1000");
}

// Greedily grows families that satisfy the Bollobas condition.
CrossFamily random_bollobas_family(std::mt19937_64& rng, int ground) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::vector<IntSet> as, bs;
  for (int tries = 0; tries < 40; ++tries) {
    IntSet a, b;
    for (int e = 1; e <= ground; ++e) {
      const int where = pick(rng);
      if (where == 1) a.push_back(e);
      if (where == 2) b.push_back(e);
    }
    if (a.empty() && b.empty()) continue;
    bool ok = true;
    for (std::size_t i = 0; i < as.size() && ok; ++i) {
      ok = sets_intersect(as[i], b) && sets_intersect(a, bs[i]);
    }
    if (!ok) continue;
    as.push_back(std::move(a));
    bs.push_back(std::move(b));
  }
  return CrossFamily(std::move(as), std::move(bs));
}

void suite_bollobas(Recorder& rec) {
  for (auto [r, s] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}}) {
    const auto fam = complement_family(r, s);
    const Rational sum = bollobas_sum(fam);
    rec.add("Bollobas sum of the complement family (" + std::to_string(r) + "," +
                std::to_string(s) + ")",
            "1", sum.str(), sum == 1);
  }
  std::mt19937_64 rng(rec.options().seed);
  int within = 0;
  Rational largest = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto fam = random_bollobas_family(rng, 4 + trial % 4);
    const Rational sum = bollobas_sum(fam);
    largest = std::max(largest, sum);
    within += sum <= 1;
  }
  rec.add("Bollobas sum <= 1 on random valid families", "1000/1000",
          std::to_string(within) + "/1000 (max " + largest.str() + ")", within == 1000);
}

// Uniform family: pairs appended in random order whenever the Frankl
// condition stays intact.
CrossFamily random_frankl_family(std::mt19937_64& rng, int r, int s, int ground) {
  std::vector<std::pair<IntSet, IntSet>> candidates;
  for (std::uint32_t ma = 0; ma < (1u << ground); ++ma) {
    if (std::popcount(ma) != r) continue;
    for (std::uint32_t mb = 0; mb < (1u << ground); ++mb) {
      if (std::popcount(mb) != s || (ma & mb)) continue;
      IntSet a, b;
      for (int e = 0; e < ground; ++e) {
        if (ma >> e & 1u) a.push_back(e + 1);
        if (mb >> e & 1u) b.push_back(e + 1);
      }
      candidates.emplace_back(std::move(a), std::move(b));
    }
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::vector<IntSet> as, bs;
  for (auto& [a, b] : candidates) {
    bool ok = true;
    for (const auto& earlier : as) ok = ok && sets_intersect(earlier, b);
    if (!ok) continue;
    as.push_back(a);
    bs.push_back(b);
  }
  return CrossFamily(std::move(as), std::move(bs));
}

void suite_frankl(Recorder& rec) {
  std::mt19937_64 rng(rec.options().seed);
  int within = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int r = 1 + trial % 3;
    const int s = 1 + (trial / 3) % 3;
    const int ground = std::min(8, r + s + 1 + trial % 2);
    const auto fam = random_frankl_family(rng, r, s, ground);
    within += check_condition(fam, Condition::frankl()) &&
              fam.size() <= binom(r + s, r);
  }
  rec.add("Frankl families have m <= C(r+s, r)", "1000/1000", std::to_string(within) + "/1000",
          within == 1000);

  const auto k2 = max_shift_order(2, 6, rec.options().budget);
  rec.add("max shift order for k=2", "4 (exhaustive)",
          std::to_string(k2.best_m) + (k2.exhaustive ? " (exhaustive)" : " (budget)"),
          k2.best_m == 4 && k2.exhaustive);
  Budget three = rec.options().budget;
  if (!three.time) three.time = std::chrono::milliseconds(20000);
  const auto k3 = max_shift_order(3, 5, three);
  rec.add("max shift order for k=3", "<= 12",
          std::to_string(k3.best_m) + " (ground " + std::to_string(k3.ground_used) +
              (k3.exhaustive ? ", exhaustive)" : ", budget)"),
          k3.best_m <= theorem_bound(3, ShiftVariant::Ordered));
  rec.note("k=3 search: best m = " + std::to_string(k3.best_m) + ", ground " +
           std::to_string(k3.ground_used) + (k3.exhaustive ? ", exhaustive" : ", not exhaustive"));
  for (const auto* found : {&k2, &k3}) {
    const int k = found == &k2 ? 2 : 3;
    const auto& cert = found->certificate;
    bool ok = static_cast<bool>(check_condition(cert, Condition::beq(k)));
    const Coloring c = families_to_coloring(cert, cert.size(), false);
    const Graph h = shift_graph(cert.size());
    ok = ok && is_proper(h, c) && local_value(h, c) <= k;
    rec.truth("k=" + std::to_string(k) + " certificate round-trips to a coloring", ok);
  }
}

using SuiteFn = void (*)(Recorder&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> table = {
      {"notop", suite_notop},       {"log-bands", suite_log_bands},
      {"slog", suite_slog},         {"shmind", suite_shmind},
      {"hh", suite_hh},             {"swide-threshold", suite_swide},
      {"myc-chain", suite_myc_chain}, {"duality", suite_duality},
      {"bollobas", suite_bollobas}, {"frankl", suite_frankl},
      {"compl", suite_compl},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "notop", "log-bands", "slog",     "shmind",   "hh",    "swide-threshold",
      "myc-chain", "duality", "bollobas", "frankl", "compl",
  };
  return ids;
}

VerificationSuite run_suite(const std::string& id, const HarnessOptions& opts) {
  auto it = registry().find(id);
  if (it == registry().end()) throw Error(ErrorCode::UnknownSuite, "unknown suite '" + id + "'");
  VerificationSuite suite;
  suite.id = id;
  const auto start = std::chrono::steady_clock::now();
  Recorder rec(suite, opts);
  it->second(rec);
  suite.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return suite;
}

SwideThreshold swide_threshold(int t, int s_max, long long max_order, const Budget& budget) {
  SwideThreshold out;
  out.t = t;
  for (int s = 2; s <= s_max; ++s) {
    const long long order = wide_universal_order(s, t);
    if (order > max_order) break;
    const auto res = swide_orientation(s, t, budget);
    SwideRow row;
    row.s = s;
    row.order = order;
    row.property1_ok = res.report.property1_ok;
    row.property2_ok = res.report.property2_ok;
    row.failures = res.report.failures.size();
    if (res.orientation) {
      row.value = directed_local_value(*res.orientation, res.w.natural);
      if (!out.threshold) out.threshold = s;
    }
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace loccol::harness
