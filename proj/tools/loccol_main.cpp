// loccol: command-line front end for the local chromatic number toolkit.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "harness/suites.hpp"
#include "loccol/coloring.hpp"
#include "loccol/constructions.hpp"
#include "loccol/duality.hpp"
#include "loccol/error.hpp"
#include "loccol/generators.hpp"
#include "loccol/io.hpp"
#include "loccol/set_systems.hpp"
#include "loccol/solvers.hpp"
#include "loccol/swide.hpp"

using json = nlohmann::json;
using namespace loccol;

namespace {

struct Globals {
  bool json_out = false;
  std::uint64_t seed = 1;
  long long budget_ms = 0;
  std::string out;
  int workers = 1;

  Budget budget() const { return budget_ms > 0 ? Budget::millis(budget_ms) : Budget{}; }
  SolverOptions solver() const {
    SolverOptions o;
    o.budget = budget();
    o.workers = workers;
    return o;
  }
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown after the output is written when a check did not hold.
struct CheckFailed {};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text << "\n";
  } else {
    write_file(g.out, text + "\n");
  }
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

AnyGraph load_any(const std::string& path) {
  if (ends_with(path, ".col")) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    return read_dimacs(in);
  }
  return graph_from_json(read_file(path));
}

Graph load_graph(const std::string& path) {
  auto any = load_any(path);
  if (auto* g = std::get_if<Graph>(&any)) return *g;
  throw UsageError(path + " holds a digraph, expected an undirected graph");
}

Digraph load_digraph(const std::string& path) {
  auto any = load_any(path);
  if (auto* d = std::get_if<Digraph>(&any)) return *d;
  throw UsageError(path + " holds an undirected graph, expected a digraph");
}

json report_json(const SolveReport& r) {
  json j;
  j["value"] = r.value;
  j["bound"] = r.bound;
  j["exact"] = r.exact;
  j["nodes"] = r.nodes;
  j["ms"] = r.elapsed.count();
  json w = json::object();
  if (r.coloring) w["colors"] = r.coloring->colors;
  if (r.orientation) w["arcs"] = json::parse(to_json(*r.orientation))["arcs"];
  if (r.vertex_set) w["vertices"] = *r.vertex_set;
  j["witness"] = w;
  return j;
}

// --- gen -------------------------------------------------------------------

void add_gen(CLI::App& app, Globals& g) {
  auto* gen = app.add_subcommand("gen", "Generate a graph family");
  static std::string family;
  static std::vector<std::string> params;
  static std::string coloring_out;
  gen->add_option("family", family,
                  "shift | symshift | symdshift | kneser | schrijver | mycielski | wide | "
                  "altcycle | balanced | complete | cycle | path | dicycle | tournament")
      ->required();
  gen->add_option("params", params, "Family parameters (mycielski: graph-file r)");
  gen->add_option("--coloring-out", coloring_out, "Also write the canonical coloring here");
  gen->callback([&g] {
    auto num = [&](std::size_t i) {
      if (i >= params.size()) throw UsageError("missing parameter for " + family);
      try {
        return std::stoi(params[i]);
      } catch (const std::exception&) {
        throw UsageError("parameter '" + params[i] + "' is not an integer");
      }
    };
    std::string text;
    std::optional<Coloring> canonical;
    if (family == "shift") {
      Graph h = shift_graph(num(0));
      canonical = first_coordinate_coloring(h);
      text = to_json(h);
    } else if (family == "symshift") {
      Graph s = symmetric_shift_graph(num(0));
      canonical = first_coordinate_coloring(s);
      text = to_json(s);
    } else if (family == "symdshift") {
      text = to_json(sym_directed_shift(num(0)));
    } else if (family == "kneser") {
      text = to_json(kneser(num(0), num(1)));
    } else if (family == "schrijver") {
      text = to_json(schrijver(num(0), num(1)));
    } else if (family == "mycielski") {
      if (params.empty()) throw UsageError("mycielski needs a graph file");
      text = to_json(generalized_mycielski(load_graph(params[0]), num(1)));
    } else if (family == "wide") {
      auto w = wide_universal(num(0), num(1));
      canonical = w.natural;
      text = to_json(w.graph);
    } else if (family == "altcycle") {
      text = to_json(alternating_odd_cycle(num(0)));
    } else if (family == "balanced") {
      text = to_json(balanced_complete_orientation(num(0)));
    } else if (family == "complete") {
      text = to_json(complete_graph(num(0)));
    } else if (family == "cycle") {
      text = to_json(cycle_graph(num(0)));
    } else if (family == "path") {
      text = to_json(path_graph(num(0)));
    } else if (family == "dicycle") {
      text = to_json(directed_cycle(num(0)));
    } else if (family == "tournament") {
      text = to_json(transitive_tournament(num(0)));
    } else {
      throw UsageError("unknown family '" + family + "'");
    }
    if (!coloring_out.empty()) {
      if (!canonical) throw UsageError(family + " has no canonical coloring");
      write_file(coloring_out, to_json(*canonical) + "\n");
    }
    emit(g, text);
  });
}

// --- solve -----------------------------------------------------------------

void add_solve(CLI::App& app, Globals& g) {
  auto* solve = app.add_subcommand("solve", "Exact solvers");
  static std::string quantity, path, coloring_path;
  static int s = 2;
  solve->add_option("quantity", quantity,
                    "chi | alpha | omega | psi | psid | psid-min | psid-max | wide")
      ->required();
  solve->add_option("file", path, "Graph or digraph file (.json or DIMACS .col)")->required();
  solve->add_option("--coloring", coloring_path, "Coloring file (for wide)");
  solve->add_option("--s", s, "Width parameter (for wide)");
  solve->callback([&g] {
    if (quantity == "wide") {
      if (coloring_path.empty()) throw UsageError("wide needs --coloring");
      const Graph graph = load_graph(path);
      const auto check = is_s_wide(graph, coloring_from_json(read_file(coloring_path)), s);
      json j;
      j["wide"] = check.wide;
      j["s"] = s;
      if (check.violation) j["violation"] = {check.violation->first, check.violation->second};
      if (g.json_out) {
        emit(g, j.dump());
      } else {
        emit(g, std::string(check.wide ? "s-wide" : "not s-wide") +
                    (check.violation ? " (pair " + std::to_string(check.violation->first) + "," +
                                           std::to_string(check.violation->second) + ")"
                                     : ""));
      }
      if (!check.wide) throw CheckFailed{};
      return;
    }
    SolveReport r;
    if (quantity == "psid") {
      r = directed_local_chromatic(load_digraph(path), g.solver());
    } else {
      const Graph graph = load_graph(path);
      if (quantity == "chi") {
        r = chromatic_number(graph, g.solver());
      } else if (quantity == "alpha") {
        r = independence_number(graph, g.solver());
      } else if (quantity == "omega") {
        auto clique = maximum_clique(graph);
        r.value = r.bound = static_cast<int>(clique.size());
        r.exact = true;
        r.vertex_set = clique;
      } else if (quantity == "psi") {
        r = local_chromatic(graph, g.solver());
      } else if (quantity == "psid-min") {
        r = psi_d_min(graph, g.solver());
      } else if (quantity == "psid-max") {
        r = psi_d_max(graph, g.solver());
      } else {
        throw UsageError("unknown quantity '" + quantity + "'");
      }
    }
    if (g.json_out) {
      emit(g, report_json(r).dump());
    } else {
      std::ostringstream os;
      os << quantity << " = " << r.value << (r.exact ? "" : " (not exact)") << "\n"
         << "bound  = " << r.bound << "\n"
         << "nodes  = " << r.nodes << "\n"
         << "ms     = " << r.elapsed.count();
      emit(g, os.str());
    }
  });
}

// --- orient ----------------------------------------------------------------

void add_orient(CLI::App& app, Globals& g) {
  auto* orient_cmd = app.add_subcommand("orient", "Constructive orientations");
  static std::string method;
  static std::vector<std::string> args;
  orient_cmd
      ->add_option("method", method,
                   "clique GRAPH COLORING | shift M | hh GRAPH COLORING | swide S T | "
                   "myc DIGRAPH | pullback GRAPH MAP TARGET | duality DIGRAPH")
      ->required();
  orient_cmd->add_option("args", args);
  orient_cmd->callback([&g] {
    auto arg = [&](std::size_t i) {
      if (i >= args.size()) throw UsageError("missing argument for " + method);
      return args[i];
    };
    auto num = [&](std::size_t i) {
      try {
        return std::stoi(arg(i));
      } catch (const std::invalid_argument&) {
        throw UsageError("'" + arg(i) + "' is not an integer");
      }
    };
    json j;
    if (method == "clique") {
      const Coloring c = coloring_from_json(read_file(arg(1)));
      const Digraph d = orient_by_clique_coloring(load_graph(arg(0)), c);
      j = json::parse(to_json(d));
      j["value"] = directed_local_value(d, c);
    } else if (method == "shift") {
      auto [d, c] = oriented_shift_with_coloring(num(0));
      j = json::parse(to_json(d));
      j["colors"] = c.colors;
      j["value"] = directed_local_value(d, c);
    } else if (method == "hh") {
      const Coloring c = coloring_from_json(read_file(arg(1)));
      const Digraph d = hh_orientation(load_graph(arg(0)), c);
      j = json::parse(to_json(d));
      j["value"] = directed_local_value(d, c);
    } else if (method == "swide") {
      const auto res = swide_orientation(num(0), num(1), g.budget());
      json report;
      report["property1_ok"] = res.report.property1_ok;
      report["property2_ok"] = res.report.property2_ok;
      json failures = json::array();
      for (auto [u, v] : res.report.failures) {
        failures.push_back({res.w.vertices[u].f, res.w.vertices[v].f});
      }
      report["failures"] = failures;
      j["report"] = report;
      if (res.orientation) {
        j["digraph"] = json::parse(to_json(*res.orientation));
        j["value"] = directed_local_value(*res.orientation, res.w.natural);
      }
      emit(g, j.dump());
      if (!res.orientation) throw CheckFailed{};
      return;
    } else if (method == "myc") {
      j = json::parse(to_json(mycielski_orientation(load_digraph(arg(0)))));
    } else if (method == "pullback") {
      const json map = json::parse(read_file(arg(1)));
      const Digraph d =
          pullback_orientation(load_graph(arg(0)), map.at("map").get<std::vector<int>>(),
                               load_digraph(arg(2)));
      j = json::parse(to_json(d));
    } else if (method == "duality") {
      const Digraph d = load_digraph(arg(0));
      const auto out = decide_local2(d);
      j["local2"] = out.local2();
      if (out.coloring) {
        j["colors"] = out.coloring->colors;
        j["shift_m"] = out.shift_m;
        j["shift_map"] = *out.shift_map;
      } else {
        j["h"] = out.h;
        j["witness"] = *out.witness;
        j["chain"] = out.chain;
      }
    } else {
      throw UsageError("unknown method '" + method + "'");
    }
    emit(g, j.dump());
  });
}

// --- translate -------------------------------------------------------------

void add_translate(CLI::App& app, Globals& g) {
  auto* tr = app.add_subcommand("translate", "Colorings of shift graphs <-> set families");
  static std::string direction, first;
  static std::string second;
  static bool symmetric = false;
  tr->add_option("direction", direction, "to-families GRAPH COLORING | to-coloring FAMILY M")
      ->required();
  tr->add_option("first", first)->required();
  tr->add_option("second", second)->required();
  tr->add_flag("--symmetric", symmetric, "Use S_m instead of H_m");
  tr->callback([&g] {
    if (direction == "to-families") {
      emit(g, to_json(coloring_to_families(load_graph(first),
                                           coloring_from_json(read_file(second)), symmetric)));
    } else if (direction == "to-coloring") {
      int m = 0;
      try {
        m = std::stoi(second);
      } catch (const std::exception&) {
        throw UsageError("m must be an integer");
      }
      emit(g, to_json(families_to_coloring(family_from_json(read_file(first)), m, symmetric)));
    } else {
      throw UsageError("unknown direction '" + direction + "'");
    }
  });
}

// --- setsys ----------------------------------------------------------------

void add_setsys(CLI::App& app, Globals& g) {
  auto* ss = app.add_subcommand("setsys", "Cross-intersecting families");
  ss->require_subcommand(1);

  auto* check = ss->add_subcommand("check", "Check a condition on a family file");
  static std::string family_path, mode = "bollobas";
  static int k = 0;
  check->add_option("family", family_path)->required();
  check->add_option("--mode", mode, "bollobas | frankl | beq | sbeq");
  check->add_option("--k", k, "k for beq / sbeq");
  check->callback([&g] {
    const auto fam = family_from_json(read_file(family_path));
    Condition cond;
    if (mode == "bollobas") {
      cond = Condition::bollobas();
    } else if (mode == "frankl") {
      cond = Condition::frankl();
    } else if (mode == "beq") {
      cond = Condition::beq(k);
    } else if (mode == "sbeq") {
      cond = Condition::sym_beq(k);
    } else {
      throw UsageError("unknown mode '" + mode + "'");
    }
    if (cond.kind != ConditionKind::Bollobas && cond.kind != ConditionKind::Frankl && k < 1) {
      throw UsageError("--k is required for " + mode);
    }
    const auto result = check_condition(fam, cond);
    json j;
    j["ok"] = result.ok;
    j["m"] = fam.size();
    if (result.violation) j["violation"] = {result.violation->first, result.violation->second};
    if (!result.ok) j["reason"] = result.reason;
    emit(g, g.json_out ? j.dump() : (result.ok ? "ok" : "violated: " + result.reason));
    if (!result.ok) throw CheckFailed{};
  });

  auto* sum = ss->add_subcommand("sum", "Exact Bollobas sum of a family");
  static std::string sum_path;
  sum->add_option("family", sum_path)->required();
  sum->callback([&g] {
    const Rational value = bollobas_sum(family_from_json(read_file(sum_path)));
    json j;
    j["sum"] = value.str();
    j["at_most_one"] = value <= 1;
    emit(g, g.json_out ? j.dump() : value.str());
  });

  auto* bound = ss->add_subcommand("bound", "Upper bound on m for a given k");
  static int bound_k = 2;
  static std::string variant = "ordered";
  bound->add_option("k", bound_k)->required();
  bound->add_option("variant", variant, "ordered | symmetric");
  bound->callback([&g] {
    ShiftVariant v;
    if (variant == "ordered") {
      v = ShiftVariant::Ordered;
    } else if (variant == "symmetric") {
      v = ShiftVariant::Symmetric;
    } else {
      throw UsageError("unknown variant '" + variant + "'");
    }
    emit(g, std::to_string(theorem_bound(bound_k, v)));
  });

  auto* complement = ss->add_subcommand("complement", "Complement family of r-subsets of [r+s]");
  static int cr = 1, cs = 1;
  complement->add_option("r", cr)->required();
  complement->add_option("s", cs)->required();
  complement->callback([&g] { emit(g, to_json(complement_family(cr, cs))); });
}

// --- verify / experiment ---------------------------------------------------

json suite_json(const harness::VerificationSuite& s) {
  json j;
  j["id"] = s.id;
  j["passed"] = s.passed();
  j["ms"] = s.elapsed.count();
  json checks = json::array();
  for (const auto& c : s.checks) {
    checks.push_back({{"description", c.description},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"pass", c.pass}});
  }
  j["checks"] = checks;
  j["notes"] = s.notes;
  return j;
}

std::string suite_table(const harness::VerificationSuite& s) {
  std::size_t width = 11;
  for (const auto& c : s.checks) width = std::max(width, c.description.size());
  std::ostringstream os;
  os << "suite " << s.id << ": " << (s.passed() ? "PASS" : "FAIL") << " (" << s.elapsed.count()
     << " ms)\n";
  os << "  " << std::left << std::setw(static_cast<int>(width)) << "check"
     << "  " << std::setw(14) << "expected"
     << "  computed\n";
  for (const auto& c : s.checks) {
    os << (c.pass ? "  " : "! ") << std::setw(static_cast<int>(width)) << c.description << "  "
       << std::setw(14) << c.expected << "  " << c.computed << "\n";
  }
  for (const auto& n : s.notes) os << "  note: " << n << "\n";
  return os.str();
}

void add_verify(CLI::App& app, Globals& g) {
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  static std::vector<std::string> ids;
  verify->add_option("suites", ids, "Suite ids or 'all'")->required();
  verify->callback([&g] {
    if (ids.size() == 1 && ids[0] == "all") ids = harness::suite_ids();
    harness::HarnessOptions opts;
    opts.budget = g.budget();
    opts.seed = g.seed;
    opts.workers = g.workers;
    json all = json::array();
    std::string text;
    bool ok = true;
    for (const auto& id : ids) {
      const auto suite = harness::run_suite(id, opts);
      ok = ok && suite.passed();
      all.push_back(suite_json(suite));
      text += suite_table(suite);
    }
    if (g.json_out) {
      emit(g, (all.size() == 1 ? all[0] : json{{"suites", all}}).dump());
    } else {
      emit(g, text);
    }
    if (!ok) throw CheckFailed{};
  });
}

void add_experiment(CLI::App& app, Globals& g) {
  auto* exp = app.add_subcommand("experiment", "Open-ended experiments");
  exp->require_subcommand(1);

  auto* sw = exp->add_subcommand("swide-threshold", "Scan s for the s-wide orientation");
  static int t = 4, s_max = 40;
  static long long max_order = 1000;
  sw->add_option("--t", t);
  sw->add_option("--s-max", s_max);
  sw->add_option("--max-order", max_order);
  sw->callback([&g] {
    const auto scan = harness::swide_threshold(t, s_max, max_order, g.budget());
    json rows = json::array();
    std::ostringstream os;
    os << "t = " << t << "\n   s   |V|  prop1  prop2  failing  value\n";
    for (const auto& r : scan.rows) {
      json row{{"s", r.s},
               {"order", r.order},
               {"property1_ok", r.property1_ok},
               {"property2_ok", r.property2_ok},
               {"failures", r.failures}};
      if (r.value) row["value"] = *r.value;
      rows.push_back(row);
      os << std::setw(4) << r.s << std::setw(6) << r.order << std::setw(7)
         << (r.property1_ok ? "yes" : "no") << std::setw(7) << (r.property2_ok ? "yes" : "no")
         << std::setw(9) << r.failures << std::setw(7)
         << (r.value ? std::to_string(*r.value) : "-") << "\n";
    }
    json j{{"t", t}, {"rows", rows}};
    j["threshold"] = scan.threshold ? json(*scan.threshold) : json(nullptr);
    os << "threshold s* = " << (scan.threshold ? std::to_string(*scan.threshold) : "none");
    emit(g, g.json_out ? j.dump() : os.str());
  });

  auto* ms = exp->add_subcommand("max-shift-order", "Largest m with a Beq(k) family");
  static int k = 2, ground = 6;
  ms->add_option("--k", k);
  ms->add_option("--ground", ground, "Ground set size limit");
  ms->callback([&g] {
    const auto res = max_shift_order(k, ground, g.budget());
    json j{{"k", k},
           {"best_m", res.best_m},
           {"exhaustive", res.exhaustive},
           {"ground_used", res.ground_used},
           {"nodes", res.nodes},
           {"bound", theorem_bound(k, ShiftVariant::Ordered)},
           {"certificate", json::parse(to_json(res.certificate))}};
    if (g.json_out) {
      emit(g, j.dump());
    } else {
      std::ostringstream os;
      os << "k = " << k << ": best m = " << res.best_m << " over ground <= " << res.ground_used
         << (res.exhaustive ? " (exhaustive)" : " (budget exhausted)") << ", bound "
         << theorem_bound(k, ShiftVariant::Ordered) << "\n"
         << "certificate " << to_json(res.certificate);
      emit(g, os.str());
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"loccol: local chromatic number toolkit"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json_out, "Machine-readable output")->configurable();
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--budget-ms", g.budget_ms, "Per-search wall-clock budget in ms");
  app.add_option("--out", g.out, "Write output to this file");
  app.add_option("--workers", g.workers, "Worker threads for orientation enumeration");
  app.fallthrough();

  add_gen(app, g);
  add_solve(app, g);
  add_orient(app, g);
  add_translate(app, g);
  add_setsys(app, g);
  add_verify(app, g);
  add_experiment(app, g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CheckFailed&) {
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
