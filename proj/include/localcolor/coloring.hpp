#ifndef LOCALCOLOR_COLORING_HPP
#define LOCALCOLOR_COLORING_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "localcolor/ball.hpp"
#include "localcolor/graph.hpp"

namespace localcolor {

struct Coloring {
  std::vector<int> colors;
  int palette_size = 0;
};

inline bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.vertex_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int cv = c.colors[static_cast<std::size_t>(v)];
    if (cv < 0 || cv >= c.palette_size) return false;
    for (int w : g.neighbors(v))
      if (w > v && c.colors[static_cast<std::size_t>(w)] == cv) return false;
  }
  return true;
}

// Relabel colors by first occurrence; palette shrinks to the count in use.
inline Coloring canonical_coloring(const Coloring& c) {
  Coloring out;
  out.colors.assign(c.colors.size(), -1);
  std::vector<int> remap(static_cast<std::size_t>(c.palette_size), -1);
  int next = 0;
  for (std::size_t v = 0; v < c.colors.size(); ++v) {
    const int cv = c.colors[v];
    if (cv < 0 || cv >= c.palette_size) throw std::invalid_argument("canonical_coloring: color out of range");
    if (remap[static_cast<std::size_t>(cv)] < 0) remap[static_cast<std::size_t>(cv)] = next++;
    out.colors[v] = remap[static_cast<std::size_t>(cv)];
  }
  out.palette_size = next;
  return out;
}

struct SolverBudget {
  std::int64_t node_limit = 10'000'000;
};

enum class Feasibility { yes, no, undecided };

// ---------------------------------------------------------------- degeneracy

// Peeling certificate: elimination_order lists vertices in removal order;
// every vertex has at most `degeneracy` neighbors appearing later, and some
// vertex met the bound exactly when removed.
struct DegeneracyCertificate {
  int degeneracy = 0;
  std::vector<int> elimination_order;
};

// Min-degree peeling with buckets; smallest id in the lowest bucket wins so
// the order is reproducible.
inline DegeneracyCertificate degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  DegeneracyCertificate cert;
  if (n == 0) return cert;
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<std::set<int>> buckets(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    buckets[static_cast<std::size_t>(deg[static_cast<std::size_t>(v)])].insert(v);
  }
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  int dmin = 0;
  for (int step = 0; step < n; ++step) {
    while (buckets[static_cast<std::size_t>(dmin)].empty()) ++dmin;
    const int v = *buckets[static_cast<std::size_t>(dmin)].begin();
    buckets[static_cast<std::size_t>(dmin)].erase(buckets[static_cast<std::size_t>(dmin)].begin());
    removed[static_cast<std::size_t>(v)] = 1;
    cert.degeneracy = std::max(cert.degeneracy, dmin);
    cert.elimination_order.push_back(v);
    for (int w : g.neighbors(v)) {
      if (removed[static_cast<std::size_t>(w)]) continue;
      auto& d = deg[static_cast<std::size_t>(w)];
      buckets[static_cast<std::size_t>(d)].erase(w);
      --d;
      buckets[static_cast<std::size_t>(d)].insert(w);
    }
    if (dmin > 0) --dmin;
  }
  return cert;
}

inline bool is_k_degenerate(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("is_k_degenerate: negative k");
  return degeneracy(g).degeneracy <= k;
}

// Greedy coloring along the given order: first color not used by a neighbor.
inline Coloring greedy_coloring(const Graph& g, const std::vector<int>& order) {
  Coloring c;
  c.colors.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<char> used;
  for (int v : order) {
    used.assign(static_cast<std::size_t>(g.degree(v)) + 2, 0);
    for (int w : g.neighbors(v)) {
      const int cw = c.colors[static_cast<std::size_t>(w)];
      if (cw >= 0 && cw < static_cast<int>(used.size())) used[static_cast<std::size_t>(cw)] = 1;
    }
    int col = 0;
    while (used[static_cast<std::size_t>(col)]) ++col;
    c.colors[static_cast<std::size_t>(v)] = col;
    c.palette_size = std::max(c.palette_size, col + 1);
  }
  return c;
}

// Reverse peeling order; uses at most degeneracy+1 colors.
inline Coloring greedy_coloring_degenerate(const Graph& g) {
  auto cert = degeneracy(g);
  std::reverse(cert.elimination_order.begin(), cert.elimination_order.end());
  return greedy_coloring(g, cert.elimination_order);
}

// Deterministic greedy clique: grow from a max-degree seed, always adding the
// highest-degree common neighbor. Any clique lower-bounds the palette.
inline std::vector<int> greedy_clique(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  auto better = [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  };
  int seed = 0;
  for (int v = 1; v < n; ++v)
    if (better(v, seed)) seed = v;
  std::vector<int> clique{seed};
  std::vector<int> cand = g.neighbors(seed);
  while (!cand.empty()) {
    int pick = cand[0];
    for (int v : cand)
      if (better(v, pick)) pick = v;
    clique.push_back(pick);
    std::vector<int> next;
    for (int v : cand)
      if (v != pick && g.has_edge(v, pick)) next.push_back(v);
    cand = std::move(next);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

// ------------------------------------------------------------ k-colorability

struct ColorabilityResult {
  Feasibility feasibility = Feasibility::undecided;
  Coloring coloring;  // meaningful only when feasibility == yes
  std::int64_t nodes = 0;
};

namespace detail {

// Backtracking on one connected graph. Saturation-first vertex choice, a
// greedy clique preseeded with distinct colors, and new colors capped at
// max_used+1 to cut color symmetry. The node budget makes results tri-state.
class KColorSearch {
 public:
  KColorSearch(const Graph& g, int k, std::int64_t node_limit)
      : g_(g), k_(k), node_limit_(node_limit), n_(g.vertex_count()) {
    colors_.assign(static_cast<std::size_t>(n_), -1);
    sat_mask_.assign(static_cast<std::size_t>(n_), 0);
    counts_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(k_), 0);
  }

  Feasibility run() {
    int preset = 0;
    int max_used = -1;
    for (int v : greedy_clique(g_)) {
      if (max_used + 1 >= k_) return Feasibility::no;  // clique larger than the palette
      assign(v, ++max_used);
      ++preset;
    }
    return dfs(n_ - preset, max_used);
  }

  const std::vector<int>& colors() const { return colors_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  using Mask = std::uint64_t;

  void assign(int v, int c) {
    colors_[static_cast<std::size_t>(v)] = c;
    for (int w : g_.neighbors(v)) {
      if (colors_[static_cast<std::size_t>(w)] >= 0) continue;
      if (counts_[static_cast<std::size_t>(w) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)]++ == 0)
        sat_mask_[static_cast<std::size_t>(w)] |= Mask{1} << c;
    }
  }

  void unassign(int v, int c) {
    colors_[static_cast<std::size_t>(v)] = -1;
    for (int w : g_.neighbors(v)) {
      if (colors_[static_cast<std::size_t>(w)] >= 0) continue;
      if (--counts_[static_cast<std::size_t>(w) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)] == 0)
        sat_mask_[static_cast<std::size_t>(w)] &= ~(Mask{1} << c);
    }
  }

  Feasibility dfs(int uncolored, int max_used) {
    if (uncolored == 0) return Feasibility::yes;
    if (++nodes_ > node_limit_) return Feasibility::undecided;
    int v = -1;
    int best_sat = -1;
    for (int u = 0; u < n_; ++u) {
      if (colors_[static_cast<std::size_t>(u)] >= 0) continue;
      const int sat = std::popcount(sat_mask_[static_cast<std::size_t>(u)]);
      if (v < 0 || sat > best_sat || (sat == best_sat && g_.degree(u) > g_.degree(v))) {
        best_sat = sat;
        v = u;
      }
    }
    const int cap = std::min(k_ - 1, max_used + 1);
    const Mask forbidden = sat_mask_[static_cast<std::size_t>(v)];
    for (int c = 0; c <= cap; ++c) {
      if (forbidden & (Mask{1} << c)) continue;
      assign(v, c);
      const Feasibility sub = dfs(uncolored - 1, std::max(max_used, c));
      if (sub == Feasibility::yes) return sub;
      unassign(v, c);
      if (sub == Feasibility::undecided) return sub;
    }
    return Feasibility::no;
  }

  const Graph& g_;
  int k_;
  std::int64_t node_limit_;
  int n_;
  std::vector<int> colors_;
  std::vector<Mask> sat_mask_;
  std::vector<int> counts_;
  std::int64_t nodes_ = 0;
};

}  // namespace detail

// Exact k-colorability with a node budget. Components are solved separately;
// an exhausted budget yields `undecided`, never a wrong yes/no. Palettes over
// 64 colors are decided only when greedy already fits.
inline ColorabilityResult is_k_colorable(const Graph& g, int k, SolverBudget budget = {}) {
  if (k < 0) throw std::invalid_argument("is_k_colorable: negative k");
  ColorabilityResult out;
  const int n = g.vertex_count();
  out.coloring.colors.assign(static_cast<std::size_t>(n), -1);
  if (n == 0) {
    out.feasibility = Feasibility::yes;
    return out;
  }
  if (k == 0) {
    out.feasibility = Feasibility::no;
    return out;
  }

  // cheap positive certificate first
  Coloring greedy = greedy_coloring_degenerate(g);
  if (greedy.palette_size <= k) {
    out.feasibility = Feasibility::yes;
    out.coloring = canonical_coloring(greedy);
    return out;
  }
  if (k > 64) {
    out.feasibility = Feasibility::undecided;  // beyond the mask width and greedy failed
    return out;
  }

  for (const auto& comp : connected_components(g)) {
    Subgraph sub = induced_subgraph(g, comp);
    detail::KColorSearch search(sub.graph, k, budget.node_limit - out.nodes);
    const Feasibility sub_res = search.run();
    out.nodes += search.nodes();
    if (sub_res != Feasibility::yes) {
      out.feasibility = sub_res;
      return out;
    }
    for (std::size_t i = 0; i < sub.to_original.size(); ++i)
      out.coloring.colors[static_cast<std::size_t>(sub.to_original[i])] = search.colors()[i];
  }
  out.coloring.palette_size = k;
  out.coloring = canonical_coloring(out.coloring);
  out.feasibility = Feasibility::yes;
  return out;
}

// ---------------------------------------------------------- chromatic number

struct ChromaticResult {
  Feasibility feasibility = Feasibility::undecided;  // yes or undecided
  int value = -1;
  int lower_bound = 0;   // clique bound, valid even when undecided
  int upper_bound = -1;  // greedy bound, valid even when undecided
  Coloring witness;
  std::int64_t nodes = 0;
};

inline ChromaticResult chromatic_number(const Graph& g, SolverBudget budget = {}) {
  ChromaticResult out;
  const int n = g.vertex_count();
  if (n == 0) {
    out.feasibility = Feasibility::yes;
    out.value = 0;
    out.upper_bound = 0;
    return out;
  }
  Coloring greedy = canonical_coloring(greedy_coloring_degenerate(g));
  out.upper_bound = greedy.palette_size;
  out.witness = greedy;
  int clique = 0;
  for (const auto& comp : connected_components(g)) {
    Subgraph sub = induced_subgraph(g, comp);
    clique = std::max(clique, static_cast<int>(greedy_clique(sub.graph).size()));
  }
  out.lower_bound = clique;

  for (int k = out.lower_bound; k < out.upper_bound; ++k) {
    ColorabilityResult res = is_k_colorable(g, k, SolverBudget{budget.node_limit - out.nodes});
    out.nodes += res.nodes;
    if (res.feasibility == Feasibility::yes) {
      out.feasibility = Feasibility::yes;
      out.value = k;
      out.witness = res.coloring;
      return out;
    }
    if (res.feasibility == Feasibility::undecided) {
      out.feasibility = Feasibility::undecided;
      return out;
    }
    out.lower_bound = k + 1;
  }
  out.feasibility = Feasibility::yes;
  out.value = out.upper_bound;
  return out;
}

// ---------------------------------------------------- local chromatic number

struct LocalChromaticResult {
  Feasibility feasibility = Feasibility::undecided;
  int value = 0;
  int worst_center = -1;      // a center attaining the max (when yes)
  int undecided_center = -1;  // offending center (when undecided)
  std::int64_t nodes = 0;
};

// max over centers of the chromatic number of the r-ball subgraph
inline LocalChromaticResult local_chromatic_number(const Graph& g, int radius, SolverBudget budget = {}) {
  if (radius < 0) throw std::invalid_argument("local_chromatic_number: negative radius");
  LocalChromaticResult out;
  out.feasibility = Feasibility::yes;
  for (int v = 0; v < g.vertex_count(); ++v) {
    Ball b = ball(g, v, radius);
    if (b.size() <= out.value) continue;  // chi can't beat the vertex count
    ChromaticResult res = chromatic_number(b.subgraph, SolverBudget{budget.node_limit - out.nodes});
    out.nodes += res.nodes;
    if (res.feasibility != Feasibility::yes) {
      out.feasibility = Feasibility::undecided;
      out.undecided_center = v;
      return out;
    }
    if (res.value > out.value) {
      out.value = res.value;
      out.worst_center = v;
    }
  }
  return out;
}

// ------------------------------------------------------------- bipartiteness

// BFS layers each component; an edge joining equal layer parities closes an
// odd cycle through the two tree paths. Returns the cycle vertex sequence.
inline std::optional<std::vector<int>> find_odd_cycle(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (depth[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<int> order{root};
    depth[static_cast<std::size_t>(root)] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const int u = order[head];
      for (int w : g.neighbors(u))
        if (depth[static_cast<std::size_t>(w)] < 0) {
          depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          order.push_back(w);
        }
    }
    for (int u : order) {
      for (int w : g.neighbors(u)) {
        if (w < u) continue;
        if ((depth[static_cast<std::size_t>(u)] ^ depth[static_cast<std::size_t>(w)]) & 1) continue;
        // lift both endpoints to their meeting point
        std::vector<int> pu{u};
        std::vector<int> pw{w};
        int a = u;
        int b = w;
        while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) pu.push_back(a = parent[static_cast<std::size_t>(a)]);
        while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) pw.push_back(b = parent[static_cast<std::size_t>(b)]);
        while (a != b) {
          pu.push_back(a = parent[static_cast<std::size_t>(a)]);
          pw.push_back(b = parent[static_cast<std::size_t>(b)]);
        }
        // lca ... u, then across the offending edge, then w ... child of lca
        std::vector<int> cycle(pu.rbegin(), pu.rend());
        cycle.insert(cycle.end(), pw.begin(), pw.end() - 1);
        return cycle;
      }
    }
  }
  return std::nullopt;
}

inline bool is_bipartite(const Graph& g) { return !find_odd_cycle(g).has_value(); }

// -------------------------------------------------------------- independence

enum class AlphaMode { exact, greedy };

struct IndependenceResult {
  Feasibility feasibility = Feasibility::undecided;
  bool exact = false;  // greedy results are lower bounds only
  int value = 0;
  std::vector<int> witness;
  std::int64_t nodes = 0;
};

// Min-degree greedy independent set; a certified lower bound on alpha.
inline IndependenceResult greedy_independent_set(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  IndependenceResult out;
  out.feasibility = Feasibility::yes;
  int remaining = n;
  while (remaining > 0) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      if (pick < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(pick)]) pick = v;
    }
    out.witness.push_back(pick);
    alive[static_cast<std::size_t>(pick)] = 0;
    --remaining;
    for (int w : g.neighbors(pick)) {
      if (!alive[static_cast<std::size_t>(w)]) continue;
      alive[static_cast<std::size_t>(w)] = 0;
      --remaining;
      for (int x : g.neighbors(w))
        if (alive[static_cast<std::size_t>(x)]) --deg[static_cast<std::size_t>(x)];
    }
  }
  out.value = static_cast<int>(out.witness.size());
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

namespace detail {

// Maximum independent set by branch and bound. Degree <= 1 candidates are
// taken outright (safe by an exchange argument); branching picks the max
// degree candidate. The budget makes the result tri-state.
class MisSearch {
 public:
  MisSearch(const Graph& g, std::int64_t node_limit) : g_(g), node_limit_(node_limit) {}

  bool run(std::vector<int>& best) {
    best_ = best;
    std::vector<int> cand(static_cast<std::size_t>(g_.vertex_count()));
    for (int v = 0; v < g_.vertex_count(); ++v) cand[static_cast<std::size_t>(v)] = v;
    const bool complete = dfs(std::move(cand), {});
    best = best_;
    return complete;
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  int cand_degree(const std::vector<int>& cand, int v) const {
    int d = 0;
    for (int w : cand)
      if (w != v && g_.has_edge(v, w)) ++d;
    return d;
  }

  bool dfs(std::vector<int> cand, std::vector<int> chosen) {
    if (++nodes_ > node_limit_) return false;
    for (;;) {
      int pick = -1;
      for (int v : cand)
        if (cand_degree(cand, v) <= 1) {
          pick = v;
          break;
        }
      if (pick < 0) break;
      chosen.push_back(pick);
      std::vector<int> next;
      for (int w : cand)
        if (w != pick && !g_.has_edge(pick, w)) next.push_back(w);
      cand = std::move(next);
    }
    if (chosen.size() > best_.size()) best_ = chosen;
    if (cand.empty()) return true;
    if (chosen.size() + cand.size() <= best_.size()) return true;  // can't improve
    int v = -1;
    int vd = -1;
    for (int u : cand) {
      const int d = cand_degree(cand, u);
      if (d > vd) {
        vd = d;
        v = u;
      }
    }
    std::vector<int> inc;
    for (int w : cand)
      if (w != v && !g_.has_edge(v, w)) inc.push_back(w);
    std::vector<int> inc_chosen = chosen;
    inc_chosen.push_back(v);
    if (!dfs(std::move(inc), std::move(inc_chosen))) return false;
    std::vector<int> exc;
    for (int w : cand)
      if (w != v) exc.push_back(w);
    return dfs(std::move(exc), std::move(chosen));
  }

  const Graph& g_;
  std::int64_t node_limit_;
  std::int64_t nodes_ = 0;
  std::vector<int> best_;
};

}  // namespace detail

// Exact alpha by branch and bound (budgeted) or the greedy lower bound.
inline IndependenceResult independence_number(const Graph& g, AlphaMode mode, SolverBudget budget = {}) {
  if (mode == AlphaMode::greedy) return greedy_independent_set(g);
  IndependenceResult out = greedy_independent_set(g);  // warm start
  out.exact = false;
  detail::MisSearch search(g, budget.node_limit);
  std::vector<int> best = out.witness;
  const bool complete = search.run(best);
  out.nodes = search.nodes();
  if (static_cast<int>(best.size()) > out.value) {
    out.witness = best;
    out.value = static_cast<int>(best.size());
  }
  out.exact = complete;
  out.feasibility = complete ? Feasibility::yes : Feasibility::undecided;
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

// ceil(n / alpha_upper); a valid chromatic lower bound whenever alpha_upper
// really bounds the independence number from above.
inline int chi_lower_bound_via_alpha(const Graph& g, int alpha_upper) {
  if (alpha_upper < 1) throw std::invalid_argument("chi_lower_bound_via_alpha: bound must be >= 1");
  const int n = g.vertex_count();
  return (n + alpha_upper - 1) / alpha_upper;
}

// Greedy partition of the vertices into cliques; the part count is a
// certified upper bound on alpha (an independent set meets each clique once).
struct CliqueCover {
  int size = 0;
  std::vector<int> part;  // clique index per vertex
};

inline CliqueCover clique_cover_upper_bound(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  CliqueCover cover;
  cover.part.assign(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> cliques;
  for (int v : order) {
    int placed = -1;
    for (std::size_t c = 0; c < cliques.size(); ++c) {
      bool all = true;
      for (int w : cliques[c])
        if (!g.has_edge(v, w)) {
          all = false;
          break;
        }
      if (all) {
        placed = static_cast<int>(c);
        break;
      }
    }
    if (placed < 0) {
      placed = static_cast<int>(cliques.size());
      cliques.emplace_back();
    }
    cliques[static_cast<std::size_t>(placed)].push_back(v);
    cover.part[static_cast<std::size_t>(v)] = placed;
  }
  cover.size = static_cast<int>(cliques.size());
  return cover;
}

// ------------------------------------------------------------ product colors

// Pairs two colorings of the same vertex set: distinct in either coordinate
// means distinct in the product.
inline Coloring product_coloring(const Coloring& a, const Coloring& b) {
  if (a.colors.size() != b.colors.size()) throw std::invalid_argument("product_coloring: size mismatch");
  Coloring out;
  out.palette_size = a.palette_size * b.palette_size;
  out.colors.resize(a.colors.size());
  for (std::size_t v = 0; v < a.colors.size(); ++v) {
    const int ca = a.colors[v];
    const int cb = b.colors[v];
    if (ca < 0 || ca >= a.palette_size || cb < 0 || cb >= b.palette_size)
      throw std::invalid_argument("product_coloring: color out of range");
    out.colors[v] = ca * b.palette_size + cb;
  }
  return out;
}

}  // namespace localcolor

#endif
