#pragma once

#include <optional>
#include <vector>

#include "loccol/graph.hpp"

namespace loccol {

/// Outcome of deciding psi_d(D) <= 2.
///
/// Either `coloring` is set (classes of the "share an in-neighbor" relation,
/// numbered 0.. by smallest member; proper, every outneighborhood
/// monochromatic) together with a homomorphism into the symmetric directed
/// shift graph on `shift_m` symbols, or `witness` is set: the images of
/// v_0..v_2h of alternating_odd_cycle(h), a homomorphism into D.
struct DualityOutcome {
  std::optional<Coloring> coloring;
  std::optional<std::vector<Vertex>> shift_map;
  int shift_m = 0;

  std::optional<std::vector<Vertex>> witness;
  /// u_0, w_0, u_1, w_1, ..., u_h: consecutive u's share the out-neighbor
  /// source w between them, and u_0, u_h are adjacent.
  std::vector<Vertex> chain;
  int h = 0;

  bool local2() const { return coloring.has_value(); }
};

DualityOutcome decide_local2(const Digraph& d);

}  // namespace loccol
