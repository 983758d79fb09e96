// Blowing up a 5-cycle into 2-cliques separates local from global coloring:
// every 1-ball of the result is 4-colorable while the whole graph needs 5.

#include <iostream>

#include "localcolor/localcolor.hpp"

namespace lc = localcolor;

int main() {
  lc::Graph c5(5);
  for (int v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);

  const lc::Graph g = lc::clique_expand(c5, 2);
  std::cout << "expanded 5-cycle: " << g.vertex_count() << " vertices, " << g.edge_count()
            << " edges\n";

  const lc::ChromaticResult chi = lc::chromatic_number(g);
  const lc::LocalChromaticResult loc = lc::local_chromatic_number(g, 1);
  if (chi.feasibility != lc::Feasibility::yes || loc.feasibility != lc::Feasibility::yes) {
    std::cout << "solver hit its node budget, rerun with a larger one\n";
    return 1;
  }
  std::cout << "chi = " << chi.value << "\n";
  std::cout << "local chi at radius 1 = " << loc.value << " (worst center " << loc.worst_center
            << ")\n";
  std::cout << "gap = " << chi.value - loc.value << "\n";

  // The same base cycle raised to 3-cliques widens the palette but keeps
  // the one-vertex independence structure.
  const lc::Graph g3 = lc::clique_expand(c5, 3);
  const lc::IndependenceResult a = lc::independence_number(c5, lc::AlphaMode::exact);
  const lc::IndependenceResult a3 = lc::independence_number(g3, lc::AlphaMode::exact);
  std::cout << "alpha before and after a 3-clique expansion: " << a.value << ", " << a3.value
            << "\n";
  return 0;
}
