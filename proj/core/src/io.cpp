#include "loccol/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "loccol/error.hpp"
#include "loccol/set_systems.hpp"

namespace loccol {

using nlohmann::json;

namespace {

json labels_json(const std::vector<VertexLabel>& labels) {
  json out = json::array();
  for (const auto& l : labels) out.push_back(to_string(l));
  return out;
}

template <typename Pairs>
json pairs_json(const Pairs& pairs) {
  json out = json::array();
  for (auto [u, v] : pairs) out.push_back(json::array({u, v}));
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::vector<VertexLabel> read_labels(const json& doc, int n) {
  std::vector<VertexLabel> labels;
  if (!doc.contains("labels")) return labels;
  const auto& arr = doc.at("labels");
  if (!arr.is_array() || static_cast<int>(arr.size()) != n) {
    throw Error(ErrorCode::ParseError, "\"labels\" must be an array of length n");
  }
  for (const auto& l : arr) {
    labels.emplace_back(TextLabel{l.is_string() ? l.get<std::string>() : l.dump()});
  }
  return labels;
}

std::vector<std::pair<int, int>> read_pairs(const json& arr, const char* key) {
  if (!arr.is_array()) throw Error(ErrorCode::ParseError, std::string(key) + " must be an array");
  std::vector<std::pair<int, int>> out;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer()) {
      throw Error(ErrorCode::ParseError, std::string(key) + " entries must be [int,int]");
    }
    out.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return out;
}

std::vector<int> read_int_list(const json& arr, const char* what) {
  if (!arr.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : arr) {
    if (!x.is_number_integer()) {
      throw Error(ErrorCode::ParseError, std::string(what) + " entries must be integers");
    }
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

std::string to_json(const Graph& g) {
  json doc;
  doc["n"] = g.order();
  doc["labels"] = labels_json(g.labels());
  doc["edges"] = pairs_json(g.edges());
  return doc.dump();
}

std::string to_json(const Digraph& d) {
  json doc;
  doc["n"] = d.order();
  doc["labels"] = labels_json(d.labels());
  doc["arcs"] = pairs_json(d.arcs());
  return doc.dump();
}

std::string to_json(const Coloring& c) {
  json doc;
  doc["colors"] = c.colors;
  return doc.dump();
}

std::string to_json(const CrossFamily& fam) {
  json doc;
  json a = json::array();
  json b = json::array();
  for (const auto& s : fam.a) a.push_back(s);
  for (const auto& s : fam.b) b.push_back(s);
  doc["A"] = std::move(a);
  doc["B"] = std::move(b);
  return doc.dump();
}

AnyGraph graph_from_json(const std::string& text) {
  const json doc = parse(text);
  if (!doc.is_object() || !doc.contains("n") || !doc.at("n").is_number_integer()) {
    throw Error(ErrorCode::ParseError, "graph document needs integer \"n\"");
  }
  const int n = doc.at("n").get<int>();
  const bool has_edges = doc.contains("edges");
  const bool has_arcs = doc.contains("arcs");
  if (has_edges == has_arcs) {
    throw Error(ErrorCode::ParseError, "exactly one of \"edges\" or \"arcs\" must be present");
  }
  auto labels = read_labels(doc, n);
  if (has_edges) return Graph(n, read_pairs(doc.at("edges"), "edges"), std::move(labels));
  return Digraph(n, read_pairs(doc.at("arcs"), "arcs"), std::move(labels));
}

Coloring coloring_from_json(const std::string& text) {
  const json doc = parse(text);
  if (!doc.is_object() || !doc.contains("colors")) {
    throw Error(ErrorCode::ParseError, "coloring document needs \"colors\"");
  }
  return Coloring{read_int_list(doc.at("colors"), "colors")};
}

CrossFamily family_from_json(const std::string& text) {
  const json doc = parse(text);
  if (!doc.is_object() || !doc.contains("A") || !doc.contains("B")) {
    throw Error(ErrorCode::ParseError, "family document needs \"A\" and \"B\"");
  }
  const auto& a = doc.at("A");
  const auto& b = doc.at("B");
  if (!a.is_array() || !b.is_array() || a.size() != b.size()) {
    throw Error(ErrorCode::ParseError, "\"A\" and \"B\" must be arrays of equal length");
  }
  std::vector<std::vector<int>> as, bs;
  for (const auto& s : a) as.push_back(read_int_list(s, "A"));
  for (const auto& s : b) bs.push_back(read_int_list(s, "B"));
  return CrossFamily(std::move(as), std::move(bs));
}

Graph read_dimacs(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string format;
      int m = 0;
      if (!(ls >> format >> n >> m) || (format != "edge" && format != "col") || n < 0) {
        throw Error(ErrorCode::ParseError, "bad problem line at " + std::to_string(lineno));
      }
    } else if (tag == "e") {
      int u = 0, v = 0;
      if (n < 0 || !(ls >> u >> v)) {
        throw Error(ErrorCode::ParseError, "bad edge line at " + std::to_string(lineno));
      }
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw Error(ErrorCode::ParseError, "unknown line tag '" + tag + "' at " +
                                             std::to_string(lineno));
    }
  }
  if (n < 0) throw Error(ErrorCode::ParseError, "missing problem line");
  // DIMACS files in the wild list each edge once or twice; accept both.
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, std::move(edges));
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << contents;
}

}  // namespace loccol
