#include <boost/dynamic_bitset.hpp>

#include "loccol/error.hpp"
#include "loccol/solvers.hpp"

namespace loccol {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Target {
  std::vector<Bits> out;
  std::vector<Bits> in;
};

class HomSearch {
 public:
  HomSearch(int pattern_order, std::vector<Arc> pattern_arcs, Target target,
            const Budget& budget)
      : n_(pattern_order),
        arcs_(std::move(pattern_arcs)),
        target_(std::move(target)),
        meter_(budget) {}

  std::optional<std::vector<Vertex>> run() {
    const std::size_t m = target_.out.size();
    std::vector<Bits> domains(n_, Bits(m));
    for (auto& d : domains) d.set();
    std::vector<Vertex> image(n_, -1);
    const bool found = propagate(domains) && search(domains, image);
    if (meter_.exhausted()) throw Error(ErrorCode::BudgetExceeded, "homomorphism search");
    if (!found) return std::nullopt;
    return image;
  }

 private:
  // Arc consistency to a fixpoint; false if some domain empties.
  bool propagate(std::vector<Bits>& domains) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto [u, v] : arcs_) {
        for (auto x = domains[u].find_first(); x != Bits::npos; x = domains[u].find_next(x)) {
          if (!target_.out[x].intersects(domains[v])) {
            domains[u].reset(x);
            changed = true;
          }
        }
        for (auto y = domains[v].find_first(); y != Bits::npos; y = domains[v].find_next(y)) {
          if (!target_.in[y].intersects(domains[u])) {
            domains[v].reset(y);
            changed = true;
          }
        }
        if (domains[u].none() || domains[v].none()) return false;
      }
    }
    return true;
  }

  bool search(const std::vector<Bits>& domains, std::vector<Vertex>& image) {
    if (!meter_.tick()) return false;
    Vertex pick = -1;
    std::size_t smallest = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (image[v] >= 0) continue;
      const std::size_t size = domains[v].count();
      if (pick < 0 || size < smallest) {
        pick = v;
        smallest = size;
      }
    }
    if (pick < 0) return true;
    for (auto x = domains[pick].find_first(); x != Bits::npos; x = domains[pick].find_next(x)) {
      std::vector<Bits> next = domains;
      next[pick].reset();
      next[pick].set(x);
      if (!propagate(next)) continue;
      image[pick] = static_cast<Vertex>(x);
      if (search(next, image)) return true;
      image[pick] = -1;
      if (meter_.exhausted()) return false;
    }
    return false;
  }

  int n_;
  std::vector<Arc> arcs_;
  Target target_;
  BudgetMeter meter_;
};

Target target_of(const Digraph& d) {
  const int n = d.order();
  Target t{std::vector<Bits>(n, Bits(n)), std::vector<Bits>(n, Bits(n))};
  for (auto [u, v] : d.arcs()) {
    t.out[u].set(v);
    t.in[v].set(u);
  }
  return t;
}

Digraph symmetric(const Graph& g) {
  std::vector<Arc> arcs;
  for (auto [u, v] : g.edges()) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return Digraph(g.order(), std::move(arcs), g.labels());
}

}  // namespace

std::optional<std::vector<Vertex>> find_homomorphism(const Digraph& from, const Digraph& to,
                                                     const Budget& budget) {
  if (from.order() > 0 && to.order() == 0) return std::nullopt;
  return HomSearch(from.order(), from.arcs(), target_of(to), budget).run();
}

std::optional<std::vector<Vertex>> find_homomorphism(const Graph& from, const Graph& to,
                                                     const Budget& budget) {
  return find_homomorphism(symmetric(from), symmetric(to), budget);
}

bool is_homomorphism(const Digraph& from, const Digraph& to, const std::vector<Vertex>& map) {
  if (static_cast<int>(map.size()) != from.order()) return false;
  for (Vertex x : map) {
    if (x < 0 || x >= to.order()) return false;
  }
  for (auto [u, v] : from.arcs()) {
    if (!to.has_arc(map[u], map[v])) return false;
  }
  return true;
}

bool is_homomorphism(const Graph& from, const Graph& to, const std::vector<Vertex>& map) {
  if (static_cast<int>(map.size()) != from.order()) return false;
  for (Vertex x : map) {
    if (x < 0 || x >= to.order()) return false;
  }
  for (auto [u, v] : from.edges()) {
    if (!to.adjacent(map[u], map[v])) return false;
  }
  return true;
}

}  // namespace loccol
