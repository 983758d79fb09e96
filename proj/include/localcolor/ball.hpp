#ifndef LOCALCOLOR_BALL_HPP
#define LOCALCOLOR_BALL_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "localcolor/graph.hpp"

namespace localcolor {

// Vertex lists grouped by distance from a center; levels[0] is the center.
using LevelSets = std::vector<std::vector<int>>;

// The r-ball around a center, relabeled to local ids 0..k-1 (center = 0,
// then level by level, ascending original id inside a level). tree_edges is
// the breadth-first spanning tree where each vertex hangs off its
// lowest-indexed neighbor one level closer to the center; remainder_edges is
// everything else. Both are stored as (u,v) with u < v in local ids.
struct Ball {
  int center = 0;  // original id
  int radius = 0;  // requested radius; levels may stop earlier
  std::vector<int> vertices;  // local id -> original id
  std::vector<int> level_of;  // by local id
  std::vector<int> parent;    // by local id, -1 for the center
  LevelSets levels;           // local ids, no empty levels
  Graph subgraph;             // on local ids
  std::vector<std::pair<int, int>> tree_edges;
  std::vector<std::pair<int, int>> remainder_edges;

  int size() const { return static_cast<int>(vertices.size()); }

  Graph tree_graph() const {
    Graph t(size());
    for (const auto& [u, v] : tree_edges) t.add_edge(u, v);
    return t;
  }

  Graph remainder_graph() const {
    Graph r(size());
    for (const auto& [u, v] : remainder_edges) r.add_edge(u, v);
    return r;
  }
};

inline Ball ball(const Graph& g, int center, int radius) {
  if (center < 0 || center >= g.vertex_count()) throw std::invalid_argument("ball: center out of range");
  if (radius < 0) throw std::invalid_argument("ball: negative radius");

  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> dist(n, -1);
  dist[static_cast<std::size_t>(center)] = 0;
  std::vector<std::vector<int>> orig_levels;
  orig_levels.push_back({center});
  for (int level = 0; level < radius && !orig_levels.back().empty(); ++level) {
    std::vector<int> next;
    for (int u : orig_levels[static_cast<std::size_t>(level)])
      for (int w : g.neighbors(u))
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = level + 1;
          next.push_back(w);
        }
    std::sort(next.begin(), next.end());
    if (next.empty()) break;
    orig_levels.push_back(std::move(next));
  }

  Ball b;
  b.center = center;
  b.radius = radius;
  std::vector<int> local(n, -1);
  for (const auto& level : orig_levels)
    for (int v : level) {
      local[static_cast<std::size_t>(v)] = static_cast<int>(b.vertices.size());
      b.vertices.push_back(v);
      b.level_of.push_back(dist[static_cast<std::size_t>(v)]);
    }
  b.levels.resize(orig_levels.size());
  for (int lu = 0; lu < b.size(); ++lu) b.levels[static_cast<std::size_t>(b.level_of[static_cast<std::size_t>(lu)])].push_back(lu);

  b.parent.assign(static_cast<std::size_t>(b.size()), -1);
  b.subgraph = Graph(b.size());
  for (int lu = 0; lu < b.size(); ++lu) {
    const int ou = b.vertices[static_cast<std::size_t>(lu)];
    const int du = b.level_of[static_cast<std::size_t>(lu)];
    for (int ow : g.neighbors(ou)) {
      const int lw = local[static_cast<std::size_t>(ow)];
      if (lw < 0) continue;
      if (lw > lu) b.subgraph.add_edge(lu, lw);
      // parent: lowest original id one level closer; adjacency is sorted so
      // the first hit wins
      if (b.level_of[static_cast<std::size_t>(lw)] == du - 1 && b.parent[static_cast<std::size_t>(lu)] < 0)
        b.parent[static_cast<std::size_t>(lu)] = lw;
    }
  }

  for (const auto& [u, v] : b.subgraph.edges()) {
    if (b.parent[static_cast<std::size_t>(u)] == v || b.parent[static_cast<std::size_t>(v)] == u)
      b.tree_edges.emplace_back(u, v);
    else
      b.remainder_edges.emplace_back(u, v);
  }
  return b;
}

}  // namespace localcolor

#endif
