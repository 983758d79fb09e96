#ifndef LOCALCOLOR_CHECKER_HPP
#define LOCALCOLOR_CHECKER_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "localcolor/reveal.hpp"

namespace localcolor {

// Pessimistic 2-degeneracy check driven against a reveal session. The check
// watches the ball grow level by level and rejects as soon as it sees a
// pattern that could break 2-degeneracy, charging every unrevealed down edge
// at its full pessimistic weight. Accept is sound: an accepted ball is
// 2-degenerate. Reject may be spurious.

enum class Schedule { fixed_r, large_r };
enum class DegreeModel { session_mean, formula };

struct CheckerParams {
  int ell = 3;
  int radius = 0;  // 0 = take the session's radius; otherwise must match it
  Schedule schedule = Schedule::fixed_r;
  DegreeModel degree_model = DegreeModel::session_mean;
  double epsilon = 1.0 / 9.0;
};

enum class CheckReason { none, level_growth, i_cycle, horseshoe_overflow };

inline const char* check_reason_name(CheckReason r) {
  switch (r) {
    case CheckReason::none: return "none";
    case CheckReason::level_growth: return "level_growth";
    case CheckReason::i_cycle: return "i_cycle";
    case CheckReason::horseshoe_overflow: return "horseshoe_overflow";
  }
  return "none";
}

struct LevelRecord {
  int level = 0;
  int size = 0;              // |L_i| at creation
  int cycles = 0;            // 0 or 1, the check stops at the first cycle
  long long horseshoes = 0;  // h_i over the peeled forest
  double threshold = 0.0;    // b_i
  int deleted = 0;           // vertices peeled this iteration
  bool completed = false;
};

struct CheckVerdict {
  bool two_degenerate = false;
  CheckReason reason = CheckReason::none;
  int reason_level = -1;
  std::vector<int> cycle_witness;  // session ids, cyclic order
  std::vector<LevelRecord> levels; // processing order, level r first
  double d_used = 0.0;
};

// Alive part of the partially revealed ball. pending counts down edges that
// exist in the session but are not materialized yet; they enter every degree
// bound at full weight.
class WorkingGraph {
 public:
  struct Vertex {
    std::vector<int> nbr;  // alive neighbors, ascending
    int pending = 0;
    int level = -1;
    int t = -1;
  };

  bool alive(int v) const { return verts_.count(v) > 0; }

  void ensure_vertex(int v, int level) {
    auto [it, fresh] = verts_.try_emplace(v);
    if (fresh) it->second.level = level;
  }

  void set_counts(int v, int t) {
    Vertex& w = verts_.at(v);
    w.t = t;
    w.pending = 1 + t;
  }

  void clear_pending(int v) { verts_.at(v).pending = 0; }

  void add_edge(int u, int v) {
    auto& nu = verts_.at(u).nbr;
    auto& nv = verts_.at(v).nbr;
    nu.insert(std::lower_bound(nu.begin(), nu.end(), v), v);
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  }

  void remove_vertex(int v) {
    const Vertex& w = verts_.at(v);
    for (int u : w.nbr) {
      auto& nu = verts_.at(u).nbr;
      nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
    }
    verts_.erase(v);
  }

  int total_degree(int v) const {
    const Vertex& w = verts_.at(v);
    return static_cast<int>(w.nbr.size()) + w.pending;
  }

  const Vertex& vertex(int v) const { return verts_.at(v); }
  const std::map<int, Vertex>& verts() const { return verts_; }

 private:
  std::map<int, Vertex> verts_;
};

// A simple cycle through some vertex of the given level, in cyclic order.
// Cycles avoiding that level entirely are not this function's business.
inline std::optional<std::vector<int>> find_i_cycle(const WorkingGraph& g, int level) {
  for (const auto& [x, vx] : g.verts()) {
    if (vx.level != level || vx.nbr.size() < 2) continue;
    // two neighbors of x connected inside g - x close a cycle through x
    std::map<int, int> parent;
    for (int a : vx.nbr) {
      if (parent.count(a)) {
        std::vector<int> cycle{x};
        std::vector<int> path;
        for (int v = a; v != -1; v = parent.at(v)) path.push_back(v);
        cycle.insert(cycle.end(), path.rbegin(), path.rend());
        return cycle;  // x, root, ..., a
      }
      parent[a] = -1;
      std::vector<int> queue{a};
      std::size_t head = 0;
      while (head < queue.size()) {
        const int v = queue[head++];
        for (int w : g.vertex(v).nbr) {
          if (w == x || parent.count(w)) continue;
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }
  }
  return std::nullopt;
}

// Repeatedly removes vertices whose pessimistic degree is at most 2,
// smallest id first. Returns the removals in order.
inline std::vector<int> peel_low_degree(WorkingGraph& g) {
  std::set<int> cand;
  for (const auto& [v, unused] : g.verts())
    if (g.total_degree(v) <= 2) cand.insert(v);
  std::vector<int> deleted;
  while (!cand.empty()) {
    const int v = *cand.begin();
    cand.erase(cand.begin());
    const std::vector<int> nbr = g.vertex(v).nbr;
    g.remove_vertex(v);
    deleted.push_back(v);
    for (int u : nbr)
      if (g.total_degree(u) <= 2) cand.insert(u);
  }
  return deleted;
}

namespace detail {

struct RootedTree {
  std::map<int, int> parent;
  std::map<int, int> depth;
  std::map<int, int> tree_id;
  std::map<int, long long> cnt;        // anchors in subtree
  std::map<int, long long> tree_total; // keyed by root id
};

inline RootedTree root_forest(const WorkingGraph& g, int level) {
  RootedTree t;
  for (const auto& [root, unused] : g.verts()) {
    if (t.depth.count(root)) continue;
    t.parent[root] = -1;
    t.depth[root] = 0;
    t.tree_id[root] = root;
    std::vector<int> order;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    order.push_back(root);
    long long edges = 0;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      const auto& nbr = g.vertex(v).nbr;
      if (idx >= nbr.size()) {
        stack.pop_back();
        continue;
      }
      const int w = nbr[idx++];
      ++edges;
      if (w == t.parent[v]) continue;
      if (t.depth.count(w))
        throw std::logic_error("count_sub_horseshoes: cycle in working graph");
      t.parent[w] = v;
      t.depth[w] = t.depth[v] + 1;
      t.tree_id[w] = root;
      order.push_back(w);
      stack.emplace_back(w, 0);
    }
    // each tree edge was seen from both ends
    if (edges != 2 * (static_cast<long long>(order.size()) - 1))
      throw std::logic_error("count_sub_horseshoes: cycle in working graph");
    long long total = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto& w = g.vertex(*it);
      long long own = (w.level == level && w.t >= 1) ? 1 : 0;
      own += t.cnt[*it];  // children already folded in
      t.cnt[*it] = own;
      if (t.parent[*it] >= 0) t.cnt[t.parent[*it]] += own;
      total += (w.level == level && w.t >= 1) ? 1 : 0;
    }
    t.tree_total[root] = total;
  }
  return t;
}

}  // namespace detail

// h_i: total pessimistic weight of down-slot pairs that a 2-degeneracy
// violation could still use. Every simple forest path whose two ends lie in
// L_i (both sides reaching at least one surviving L_i vertex with t >= 1)
// contributes (1+t_a)(1+t_b); a single vertex contributes (1+t)t.
inline long long count_sub_horseshoes(const WorkingGraph& g, int level) {
  detail::RootedTree t = detail::root_forest(g, level);
  std::vector<int> ends;
  for (const auto& [v, w] : g.verts())
    if (w.level == level) ends.push_back(v);

  long long h = 0;
  for (int v : ends) {
    const int tw = g.vertex(v).t;
    if (tw >= 1) h += static_cast<long long>(1 + tw) * tw;
  }

  // anchors behind an end after cutting the path's first edge
  auto side_anchors = [&](int a, int next) -> long long {
    if (t.parent.at(a) == next) return t.cnt.at(a);
    // next is a child of a
    return t.tree_total.at(t.tree_id.at(a)) - t.cnt.at(next);
  };

  for (std::size_t x = 0; x < ends.size(); ++x) {
    for (std::size_t y = x + 1; y < ends.size(); ++y) {
      const int a = ends[x];
      const int b = ends[y];
      if (t.tree_id.at(a) != t.tree_id.at(b)) continue;
      // first step from each end toward the other
      int ua = a, ub = b;
      int step_a = -1, step_b = -1;
      while (t.depth.at(ua) > t.depth.at(ub)) {
        if (ua == a) step_a = t.parent.at(a);
        ua = t.parent.at(ua);
      }
      while (t.depth.at(ub) > t.depth.at(ua)) {
        if (ub == b) step_b = t.parent.at(b);
        ub = t.parent.at(ub);
      }
      while (ua != ub) {
        if (ua == a) step_a = t.parent.at(a);
        if (ub == b) step_b = t.parent.at(b);
        ua = t.parent.at(ua);
        ub = t.parent.at(ub);
      }
      // if an end is the meeting point, its first step goes down toward the
      // other end: the child of `end` on that branch is the last vertex the
      // other side lifted through
      if (step_a == -1 && a == ua) {
        int w = b;
        while (t.parent.at(w) != a) w = t.parent.at(w);
        step_a = w;
      }
      if (step_b == -1 && b == ub) {
        int w = a;
        while (t.parent.at(w) != b) w = t.parent.at(w);
        step_b = w;
      }
      if (side_anchors(a, step_a) < 1 || side_anchors(b, step_b) < 1) continue;
      h += static_cast<long long>(1 + g.vertex(a).t) * (1 + g.vertex(b).t);
    }
  }
  return h;
}

// b_i. level_sizes[j] = |L_j| at creation, j = 0..r.
inline double threshold_b(int i, const std::vector<int>& level_sizes, const CheckerParams& params, double d) {
  const int r = static_cast<int>(level_sizes.size()) - 1;
  if (i < 1 || i > r) throw std::invalid_argument("threshold_b: level out of range");
  if (i == 1) return 0.0;
  const double nprev = static_cast<double>(level_sizes[static_cast<std::size_t>(i) - 1]);
  if (params.schedule == Schedule::fixed_r || i == r) return nprev / params.ell;
  return nprev / d;
}

inline double threshold_b(int i, const LevelSets& levels, const CheckerParams& params, double d) {
  std::vector<int> sizes;
  sizes.reserve(levels.size());
  for (const auto& level : levels) sizes.push_back(static_cast<int>(level.size()));
  return threshold_b(i, sizes, params, d);
}

// Drives the session's connection phase, one level at a time, aborting at the
// first violation. The session is left mid-reveal on reject; finish_reveal
// completes it when the caller wants the full ball anyway.
inline CheckVerdict check_two_degenerate(RevealSession& s, const CheckerParams& params) {
  if (params.ell < 2) throw std::invalid_argument("check_two_degenerate: ell must be >= 2");
  if (params.radius != 0 && params.radius != s.radius)
    throw std::invalid_argument("check_two_degenerate: radius mismatch");
  if (s.radius > 0 && (s.cursor_step != RevealStep::inner || s.cursor_level != s.radius))
    throw std::logic_error("check_two_degenerate: session already advanced");

  CheckVerdict verdict;
  verdict.d_used = (params.degree_model == DegreeModel::formula)
                       ? 3.0 * params.ell * std::log(static_cast<double>(params.ell))
                       : static_cast<double>(s.n) * s.p;
  const double d = verdict.d_used;
  const int r = s.radius;
  std::vector<int> sizes(static_cast<std::size_t>(r) + 1);
  for (int j = 0; j <= r; ++j) sizes[static_cast<std::size_t>(j)] = s.level_size(j);

  for (int j = 1; j <= r; ++j) {
    if (static_cast<double>(sizes[static_cast<std::size_t>(j)]) >
        (1.0 + params.epsilon) * d * static_cast<double>(sizes[static_cast<std::size_t>(j) - 1])) {
      verdict.two_degenerate = false;
      verdict.reason = CheckReason::level_growth;
      verdict.reason_level = j;
      return verdict;
    }
  }

  WorkingGraph g;
  for (int i = r; i >= 1; --i) {
    LevelRecord rec;
    rec.level = i;
    rec.size = sizes[static_cast<std::size_t>(i)];

    const auto inner = inner_step(s, i);
    for (int u : s.levels[static_cast<std::size_t>(i)]) g.ensure_vertex(u, i);
    for (const auto& [a, b] : inner) g.add_edge(a, b);

    // any cycle here passes through L_i: the graph was a forest after the
    // previous iteration and every edge added since touches L_i
    if (auto cyc = find_i_cycle(g, i)) {
      rec.cycles = 1;
      verdict.cycle_witness = *cyc;
      verdict.two_degenerate = false;
      verdict.reason = CheckReason::i_cycle;
      verdict.reason_level = i;
      verdict.levels.push_back(rec);
      return verdict;
    }

    for (const auto& [u, t] : counting_step(s, i)) g.set_counts(u, t);

    rec.deleted = static_cast<int>(peel_low_degree(g).size());
    rec.horseshoes = count_sub_horseshoes(g, i);
    rec.threshold = threshold_b(i, sizes, params, d);
    if (static_cast<double>(rec.horseshoes) > rec.threshold) {
      verdict.two_degenerate = false;
      verdict.reason = CheckReason::horseshoe_overflow;
      verdict.reason_level = i;
      verdict.levels.push_back(rec);
      return verdict;
    }

    for (const auto& a : linkage_step(s, i)) {
      if (!g.alive(a.child)) continue;  // peeled: its down edges stay outside
      g.clear_pending(a.child);
      g.ensure_vertex(a.parent, i - 1);
      g.add_edge(a.child, a.parent);
      for (int w : a.extras) {
        g.ensure_vertex(w, i - 1);
        g.add_edge(a.child, w);
      }
    }
    rec.completed = true;
    verdict.levels.push_back(rec);
  }
  verdict.two_degenerate = true;
  return verdict;
}

}  // namespace localcolor

#endif
