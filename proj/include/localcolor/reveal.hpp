#ifndef LOCALCOLOR_REVEAL_HPP
#define LOCALCOLOR_REVEAL_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "localcolor/ball.hpp"
#include "localcolor/gnp.hpp"
#include "localcolor/graph.hpp"
#include "localcolor/rng.hpp"

namespace localcolor {

// Incremental reveal of the r-ball around vertex 0 of a G(n,p) sample.
//
// Creation phase (runs inside begin_reveal): level by level, every unplaced
// vertex flips at most |L_i| coins against the current level and joins
// L_{i+1} on the first success; the number of flips spent is k_u.
//
// Connection phase (driven by the caller, level r down to 1):
//   inner_step     edges inside L_i, each pair with probability p
//   counting_step  t_u = successes among the |L_{i-1}| - k_u unflipped coins
//   linkage_step   a uniform (1+t_u)-subset of L_{i-1} becomes u's down
//                  neighbors; one uniform member is the tree parent, the
//                  rest are remainder edges
//
// Each (phase, level) draws from its own child stream, so a full run is a
// pure function of (n, p, radius, master_seed, stream_id).

enum class RevealStep { inner, counting, linkage, done };

struct RevealSession {
  int n = 0;
  double p = 0.0;
  int radius = 0;
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;
  LevelSets levels;           // session vertex ids; levels[0] = {0}
  std::vector<int> level_of;  // -1 = outside the ball
  std::vector<int> k_of;      // creation flips spent; 0 for the center
  std::vector<int> t_of;      // extra down edges; -1 until counted
  std::vector<std::pair<int, int>> edges;       // every revealed ball edge
  std::vector<std::pair<int, int>> tree_edges;  // (child, parent)
  std::vector<std::pair<int, int>> rem_edges;
  std::vector<std::vector<std::pair<int, int>>> inner_log;  // by level
  std::vector<std::vector<std::pair<int, int>>> down_log;   // by level, (child, neighbor)
  int cursor_level = 0;
  RevealStep cursor_step = RevealStep::done;
  RngStream base{0, 0};

  int level_size(int i) const {
    return (i >= 0 && i < static_cast<int>(levels.size())) ? static_cast<int>(levels[static_cast<std::size_t>(i)].size()) : 0;
  }
};

namespace detail {

inline constexpr std::uint64_t kCreationStream = 1;
inline constexpr std::uint64_t kInnerStream = 2;
inline constexpr std::uint64_t kCountingStream = 3;
inline constexpr std::uint64_t kLinkageStream = 4;

inline std::uint64_t stream_code(std::uint64_t kind, int level) {
  return (kind << 32) | static_cast<std::uint32_t>(level);
}

inline void require_cursor(const RevealSession& s, int level, RevealStep step, const char* what) {
  if (s.cursor_step != step || s.cursor_level != level)
    throw std::logic_error(std::string(what) + ": step out of order");
}

}  // namespace detail

inline RevealSession begin_reveal(int n, double p, int radius, const RngStream& rng) {
  if (n < 1) throw std::invalid_argument("begin_reveal: need at least the center");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("begin_reveal: p outside [0,1]");
  if (radius < 0) throw std::invalid_argument("begin_reveal: radius must be >= 0");
  RevealSession s;
  s.n = n;
  s.p = p;
  s.radius = radius;
  s.base = rng;
  s.master_seed = rng.master_seed();
  s.stream_id = rng.stream_id();
  s.levels.assign(static_cast<std::size_t>(radius) + 1, {});
  s.levels[0] = {0};
  s.level_of.assign(static_cast<std::size_t>(n), -1);
  s.level_of[0] = 0;
  s.k_of.assign(static_cast<std::size_t>(n), 0);
  s.t_of.assign(static_cast<std::size_t>(n), -1);
  s.inner_log.assign(static_cast<std::size_t>(radius) + 1, {});
  s.down_log.assign(static_cast<std::size_t>(radius) + 1, {});

  std::vector<int> unplaced;
  unplaced.reserve(static_cast<std::size_t>(n) - 1);
  for (int v = 1; v < n; ++v) unplaced.push_back(v);
  for (int i = 0; i < radius && !s.levels[static_cast<std::size_t>(i)].empty(); ++i) {
    RngStream stream = rng.child(detail::stream_code(detail::kCreationStream, i + 1));
    const int m = static_cast<int>(s.levels[static_cast<std::size_t>(i)].size());
    std::vector<int> rest;
    rest.reserve(unplaced.size());
    for (int u : unplaced) {
      const int k = first_success_at_most(stream, m, p);
      if (k > 0) {
        s.levels[static_cast<std::size_t>(i) + 1].push_back(u);
        s.level_of[static_cast<std::size_t>(u)] = i + 1;
        s.k_of[static_cast<std::size_t>(u)] = k;
      } else {
        rest.push_back(u);
      }
    }
    unplaced = std::move(rest);
  }
  s.cursor_level = radius;
  s.cursor_step = radius == 0 ? RevealStep::done : RevealStep::inner;
  return s;
}

inline std::vector<std::pair<int, int>> inner_step(RevealSession& s, int i) {
  detail::require_cursor(s, i, RevealStep::inner, "inner_step");
  RngStream stream = s.base.child(detail::stream_code(detail::kInnerStream, i));
  std::vector<std::pair<int, int>> added;
  for_each_success_pair(s.levels[static_cast<std::size_t>(i)], s.p, stream,
                        [&](int u, int v) { added.emplace_back(u, v); });
  for (const auto& e : added) {
    s.edges.push_back(e);
    s.rem_edges.push_back(e);
  }
  s.inner_log[static_cast<std::size_t>(i)] = added;
  s.cursor_step = RevealStep::counting;
  return added;
}

// Returns (u, t_u) per vertex of L_i. Flip-count bounds hold on every run.
inline std::vector<std::pair<int, int>> counting_step(RevealSession& s, int i) {
  detail::require_cursor(s, i, RevealStep::counting, "counting_step");
  RngStream stream = s.base.child(detail::stream_code(detail::kCountingStream, i));
  const int below = s.level_size(i - 1);
  std::vector<std::pair<int, int>> out;
  for (int u : s.levels[static_cast<std::size_t>(i)]) {
    const int k = s.k_of[static_cast<std::size_t>(u)];
    if (k < 1 || k > below) throw std::logic_error("counting_step: k_u outside 1..|L_{i-1}|");
    const int m = below - k;
    const int t = count_successes(stream, m, s.p);
    if (t < 0 || t > m) throw std::logic_error("counting_step: t_u outside 0..|L_{i-1}|-k_u");
    s.t_of[static_cast<std::size_t>(u)] = t;
    out.emplace_back(u, t);
  }
  s.cursor_step = RevealStep::linkage;
  return out;
}

struct DownAssignment {
  int child = 0;
  int parent = 0;            // tree edge endpoint in L_{i-1}
  std::vector<int> extras;   // remainder edge endpoints in L_{i-1}
};

inline std::vector<DownAssignment> linkage_step(RevealSession& s, int i) {
  detail::require_cursor(s, i, RevealStep::linkage, "linkage_step");
  RngStream stream = s.base.child(detail::stream_code(detail::kLinkageStream, i));
  std::vector<DownAssignment> out;
  for (int u : s.levels[static_cast<std::size_t>(i)]) {
    const int want = 1 + s.t_of[static_cast<std::size_t>(u)];
    std::vector<int> pool = s.levels[static_cast<std::size_t>(i) - 1];
    for (int j = 0; j < want; ++j) {
      const std::size_t pick = static_cast<std::size_t>(j) + stream.below(pool.size() - static_cast<std::size_t>(j));
      std::swap(pool[static_cast<std::size_t>(j)], pool[pick]);
    }
    const int parent_slot = static_cast<int>(stream.below(static_cast<std::uint64_t>(want)));
    DownAssignment a;
    a.child = u;
    a.parent = pool[static_cast<std::size_t>(parent_slot)];
    for (int j = 0; j < want; ++j) {
      const int w = pool[static_cast<std::size_t>(j)];
      s.edges.emplace_back(u, w);
      s.down_log[static_cast<std::size_t>(i)].emplace_back(u, w);
      if (j == parent_slot) {
        s.tree_edges.emplace_back(u, w);
      } else {
        s.rem_edges.emplace_back(u, w);
        a.extras.push_back(w);
      }
    }
    out.push_back(std::move(a));
  }
  if (i > 1) {
    s.cursor_level = i - 1;
    s.cursor_step = RevealStep::inner;
  } else {
    s.cursor_step = RevealStep::done;
  }
  return out;
}

// Drives any remaining steps to completion.
inline void finish_reveal(RevealSession& s) {
  while (s.cursor_step != RevealStep::done) {
    const int i = s.cursor_level;
    switch (s.cursor_step) {
      case RevealStep::inner: inner_step(s, i); break;
      case RevealStep::counting: counting_step(s, i); break;
      case RevealStep::linkage: linkage_step(s, i); break;
      case RevealStep::done: break;
    }
  }
}

// Packages a completed session as a Ball with local ids (center = 0).
inline Ball reveal_to_ball(const RevealSession& s) {
  if (s.cursor_step != RevealStep::done) throw std::logic_error("reveal_to_ball: session not finished");
  Ball b;
  b.center = 0;
  b.radius = s.radius;
  std::vector<int> local(static_cast<std::size_t>(s.n), -1);
  for (const auto& level : s.levels) {
    if (level.empty()) break;
    std::vector<int> lvl;
    for (int v : level) {
      local[static_cast<std::size_t>(v)] = static_cast<int>(b.vertices.size());
      lvl.push_back(static_cast<int>(b.vertices.size()));
      b.vertices.push_back(v);
      b.level_of.push_back(s.level_of[static_cast<std::size_t>(v)]);
    }
    b.levels.push_back(std::move(lvl));
  }
  b.subgraph = Graph(b.size());
  for (const auto& [u, v] : s.edges)
    b.subgraph.add_edge(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]);
  b.parent.assign(static_cast<std::size_t>(b.size()), -1);
  auto norm = [](int a, int c) { return a < c ? std::pair<int, int>(a, c) : std::pair<int, int>(c, a); };
  for (const auto& [child, par] : s.tree_edges) {
    const int lc = local[static_cast<std::size_t>(child)];
    const int lp = local[static_cast<std::size_t>(par)];
    b.parent[static_cast<std::size_t>(lc)] = lp;
    b.tree_edges.push_back(norm(lc, lp));
  }
  for (const auto& [u, v] : s.rem_edges)
    b.remainder_edges.push_back(norm(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]));
  std::sort(b.tree_edges.begin(), b.tree_edges.end());
  std::sort(b.remainder_edges.begin(), b.remainder_edges.end());
  return b;
}

}  // namespace localcolor

#endif
