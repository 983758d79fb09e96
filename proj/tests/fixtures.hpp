#ifndef LOCALCOLOR_TESTS_FIXTURES_HPP
#define LOCALCOLOR_TESTS_FIXTURES_HPP

#include <utility>
#include <vector>

#include "localcolor/gnp.hpp"
#include "localcolor/graph.hpp"
#include "localcolor/rng.hpp"

namespace fixtures {

inline localcolor::Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  localcolor::Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline localcolor::Graph path_graph(int n) {
  localcolor::Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline localcolor::Graph cycle_graph(int n) {
  localcolor::Graph g = path_graph(n);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

inline localcolor::Graph complete_graph(int n) {
  localcolor::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline localcolor::Graph star_graph(int leaves) {
  localcolor::Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

// outer 5-cycle, inner pentagram, spokes
inline localcolor::Graph petersen_graph() {
  return make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                         {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8},
                         {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

inline localcolor::Graph random_graph(int n, double p, std::uint64_t seed, std::uint64_t id = 0) {
  localcolor::RngStream rng(seed, id);
  return localcolor::sample_gnp(n, p, rng);
}

}  // namespace fixtures

#endif
