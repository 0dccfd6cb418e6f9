#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "loccol/graph.hpp"

namespace loccol {

struct CrossFamily;

// JSON documents:
//   graph     {"n": int, "labels": [string...], "edges": [[int,int]...]}
//   digraph   {"n": int, "labels": [string...], "arcs":  [[int,int]...]}
//   coloring  {"colors": [int...]}
//   family    {"A": [[int...]...], "B": [[int...]...]}
// Output is compact, key-sorted and byte-deterministic.

std::string to_json(const Graph& g);
std::string to_json(const Digraph& d);
std::string to_json(const Coloring& c);
std::string to_json(const CrossFamily& fam);

using AnyGraph = std::variant<Graph, Digraph>;

/// Parses a graph or digraph document; exactly one of "edges"/"arcs" must be
/// present. Throws ParseError.
AnyGraph graph_from_json(const std::string& text);
Coloring coloring_from_json(const std::string& text);
CrossFamily family_from_json(const std::string& text);

/// DIMACS edge format: "p edge n m" then "e u v" lines, 1-based; "c" lines
/// are comments.
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace loccol
