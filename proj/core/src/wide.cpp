#include "loccol/coloring.hpp"
#include "loccol/error.hpp"
#include "loccol/solvers.hpp"

namespace loccol {

WideCheck is_s_wide(const Graph& g, const Coloring& c, int s) {
  if (s < 1) throw Error(ErrorCode::BadParameter, "s must be >= 1");
  if (static_cast<int>(c.size()) != g.order()) {
    throw Error(ErrorCode::PartialColoring, "coloring does not cover the graph");
  }
  const WalkRelation reach = walk_reach(g, 2 * s - 1);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u; v < g.order(); ++v) {
      if (c[u] == c[v] && reach(u, v)) return WideCheck{false, std::pair{u, v}};
    }
  }
  return {};
}

}  // namespace loccol
