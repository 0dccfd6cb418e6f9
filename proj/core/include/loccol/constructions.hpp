#pragma once

#include <vector>

#include "loccol/graph.hpp"
#include "loccol/set_systems.hpp"

namespace loccol {

/// Pulls back the balanced orientation of K_r along a proper coloring with
/// r colors: u -> v iff rank(c(u)) -> rank(c(v)) in K_r. Every
/// outneighborhood then sees at most floor(r/2) colors. Throws NotProper.
Digraph orient_by_clique_coloring(const Graph& g, const Coloring& c);

struct OrientedShift {
  Digraph digraph;
  Coloring coloring;
};

/// Orientation of S_m: (a,b) -> (b,c) for distinct a,b,c, and the pair
/// (a,b),(b,a) oriented from (a,b) when a < b. Comes with c(i,j) = i.
OrientedShift oriented_shift_with_coloring(int m);

/// A proper coloring of H_m (ordered) or S_m (symmetric) as set pairs:
///   ordered    A_i = {c(i,l) : l > i},  B_i = {c(l,i) : l < i}
///   symmetric  A_i = {c(i,l) : l != i}, B_i = {c(l,i) : l != i}
/// Throws NotProper, WrongGraphShape.
CrossFamily coloring_to_families(const Graph& shift, const Coloring& c, bool symmetric);

/// Inverse direction: c(i,j) = min(A_i n B_j). Throws ConditionViolated at
/// the first (i,j) with an empty intersection, BadParameter if the family
/// size differs from m.
Coloring families_to_coloring(const CrossFamily& fam, int m, bool symmetric);

/// Orientation with psi_d <= h from a 2-wide coloring using 2h colors
/// (h >= 2). Throws NotWide, WrongColorCount.
Digraph hh_orientation(const Graph& g, const Coloring& c);

/// Orients {u,v} as u -> v iff hom(u) -> hom(v) in `target`.
/// Throws NotHomomorphism (hom is not a homomorphism into the underlying
/// graph of target) and NotOrientation.
Digraph pullback_orientation(const Graph& g, const std::vector<Vertex>& hom,
                             const Digraph& target);
Coloring pullback_coloring(const std::vector<Vertex>& hom, const Coloring& c);

/// Orientation of M(G) = generalized_mycielski(G, 2) built from an
/// orientation of G: level 0 copies it, {(1,u),(0,v)} follows u -> v, and
/// every (1,u) points to the apex. Throws NotOrientation.
Digraph mycielski_orientation(const Digraph& g_hat);

}  // namespace loccol
