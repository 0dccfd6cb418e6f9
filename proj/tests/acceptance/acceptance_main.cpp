// One line per acceptance criterion. Criteria 1-12 reuse the verification
// suites of the harness, split by check; 13 and the outdegree averaging
// property are computed here.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "harness/suites.hpp"
#include "loccol/coloring.hpp"
#include "loccol/error.hpp"
#include "loccol/generators.hpp"
#include "loccol/solvers.hpp"

using namespace loccol;
using loccol::harness::Check;
using loccol::harness::VerificationSuite;

namespace {

std::map<std::string, VerificationSuite> cache;

const VerificationSuite& suite(const std::string& id) {
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, harness::run_suite(id)).first;
  return it->second;
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Every check of the suite whose description passes `keep`; at least one.
Outcome checks_of(const std::string& id, const std::function<bool(const Check&)>& keep) {
  Outcome out;
  int n = 0;
  for (const Check& c : suite(id).checks) {
    if (!keep(c)) continue;
    ++n;
    if (!c.pass) {
      out.pass = false;
      out.detail += " [" + c.description + ": expected " + c.expected + ", got " + c.computed + "]";
    }
  }
  if (n == 0) {
    out.pass = false;
    out.detail = " no checks";
  }
  if (out.pass) out.detail = " " + std::to_string(n) + " checks";
  return out;
}

Outcome whole(const std::string& id) {
  return checks_of(id, [](const Check&) { return true; });
}

struct Row {
  std::string name;
  Graph g;
};

// Ordering invariant over a fixed corpus. Every value is computed once.
Outcome ordering_invariant() {
  std::vector<Row> corpus;
  for (int n = 2; n <= 5; ++n) corpus.push_back({"K_" + std::to_string(n), complete_graph(n)});
  for (int n : {4, 5, 6, 7}) corpus.push_back({"C_" + std::to_string(n), cycle_graph(n)});
  for (int m = 3; m <= 6; ++m) corpus.push_back({"H_" + std::to_string(m), shift_graph(m)});
  corpus.push_back({"S_3", symmetric_shift_graph(3)});
  corpus.push_back({"Petersen", kneser(5, 2)});
  corpus.push_back({"SG(6,2)", schrijver(6, 2)});
  corpus.push_back({"W(1,4)", wide_universal(1, 4).graph});

  Outcome out;
  int judged = 0;
  for (const Row& row : corpus) {
    SolveReport lo, hi, psi, chi;
    try {
      lo = psi_d_min(row.g);
      hi = psi_d_max(row.g);
      psi = local_chromatic(row.g);
      chi = chromatic_number(row.g);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TooLarge) throw;
      continue;  // not every quantity is computable here
    }
    if (!(lo.exact && hi.exact && psi.exact && chi.exact)) continue;
    ++judged;
    const bool ok = lo.value <= hi.value && hi.value <= psi.value && psi.value <= chi.value &&
                    lo.value <= chi.value / 2 + 1;
    if (!ok) {
      out.pass = false;
      out.detail += " [" + row.name + ": " + std::to_string(lo.value) + "," +
                    std::to_string(hi.value) + "," + std::to_string(psi.value) + "," +
                    std::to_string(chi.value) + "]";
    }
  }
  if (out.pass) out.detail = " " + std::to_string(judged) + " graphs";
  return out;
}

// Random orientations of a rainbow K_{ceil(t/2), floor(t/2)} always have a
// vertex of outdegree at least ceil(t/4).
Outcome outdegree_averaging() {
  std::mt19937_64 rng(1);
  Outcome out;
  for (int t = 4; t <= 8; ++t) {
    const int a = (t + 1) / 2;
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
      for (int v = a; v < t; ++v) edges.emplace_back(u, v);
    const Graph k(t, edges);
    Coloring rainbow;
    for (int v = 0; v < t; ++v) rainbow.colors.push_back(v);
    for (int trial = 0; trial < 100; ++trial) {
      std::bernoulli_distribution coin(0.5);
      const Digraph d = orient(k, [&](Vertex, Vertex) { return coin(rng); });
      int top = 0;
      for (Vertex v = 0; v < t; ++v) top = std::max(top, d.out_degree(v));
      // distinct colors: the outdegree is the number of colors seen
      if (top < (t + 3) / 4 || directed_local_value(d, rainbow) != top + 1) {
        out.pass = false;
        out.detail = " t=" + std::to_string(t) + " trial " + std::to_string(trial);
        return out;
      }
    }
  }
  out.detail = " 500 orientations";
  return out;
}

}  // namespace

int main() {
  auto prefix = [](std::string p) {
    return [p](const Check& c) { return starts_with(c.description, p); };
  };
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 chi of ordered shift graphs", [&] { return checks_of("log-bands", prefix("chi(")); }},
      {"2 psi of ordered shift graphs", [&] { return checks_of("log-bands", prefix("psi(")); }},
      {"3 oriented symmetric shift graphs have psi_d 2", [] { return whole("shmind"); }},
      {"4 alpha and chi of symmetric shift graphs",
       [&] {
         return checks_of("slog", [](const Check& c) {
           return starts_with(c.description, "alpha(") || starts_with(c.description, "chi(");
         });
       }},
      {"5 psi of symmetric shift graphs", [&] { return checks_of("slog", prefix("psi(")); }},
      {"6 rainbow bicliques", [] { return whole("notop"); }},
      {"7 alternating odd cycles and the local-2 decision", [] { return whole("duality"); }},
      {"8 psi_d,min of complete graphs", [] { return whole("compl"); }},
      {"9 Mycielski chain", [] { return whole("myc-chain"); }},
      {"10 orientations from 2-wide colorings", [] { return whole("hh"); }},
      {"11 s-wide orientation machinery", [] { return whole("swide-threshold"); }},
      {"12 set systems",
       [] {
         Outcome a = whole("bollobas");
         Outcome b = whole("frankl");
         return Outcome{a.pass && b.pass, a.detail + ";" + b.detail};
       }},
      {"13 ordering invariant on the corpus", ordering_invariant},
      {"outdegree averaging on rainbow bicliques", outdegree_averaging},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string(" threw: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::printf("%s  %s (%lld ms)%s\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                static_cast<long long>(ms), o.detail.c_str());
    if (!o.pass) ++failed;
  }
  for (const auto& [id, s] : cache)
    for (const auto& n : s.notes) std::printf("note %s: %s\n", id.c_str(), n.c_str());
  return failed == 0 ? 0 : 1;
}
