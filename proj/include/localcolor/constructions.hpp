#ifndef LOCALCOLOR_CONSTRUCTIONS_HPP
#define LOCALCOLOR_CONSTRUCTIONS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "localcolor/ball.hpp"
#include "localcolor/coloring.hpp"
#include "localcolor/gnp.hpp"
#include "localcolor/graph.hpp"
#include "localcolor/rng.hpp"

namespace localcolor {

// Parameter family for the locally-small, globally-large samples. n grows
// like (10 l ln l)^(r+1); d = 3 l ln l is the target mean degree. Under a
// scale cap the density is rescaled so n*p = d still holds.
struct PaperParams {
  int ell = 0;
  int r = 0;
  long long n = 0;
  double p = 0.0;
  double d = 0.0;
  bool capped = false;
};

inline PaperParams paper_parameters(int ell, int r, long long scale_cap = 0) {
  if (ell < 2) throw std::invalid_argument("paper_parameters: ell must be >= 2");
  if (r < 1) throw std::invalid_argument("paper_parameters: r must be >= 1");
  PaperParams pp;
  pp.ell = ell;
  pp.r = r;
  const double base = 10.0 * ell * std::log(static_cast<double>(ell));
  pp.d = 3.0 * ell * std::log(static_cast<double>(ell));
  const double n_real = std::pow(base, r + 1);
  if (n_real > 9.0e18) throw std::invalid_argument("paper_parameters: n overflows, use scale_cap");
  pp.n = static_cast<long long>(std::floor(n_real));
  pp.p = 0.3 * std::pow(base, -r);
  if (scale_cap > 0 && pp.n > scale_cap) {
    pp.n = scale_cap;
    pp.p = pp.d / static_cast<double>(pp.n);
    pp.capped = true;
  }
  return pp;
}

// Closed-form bounds for f(l, c, r), natural logs throughout.
struct BoundsReport {
  int ell = 0;
  int c = 0;
  int r = 0;
  double bogdanov_lower = 0.0;
  double f3_upper = 0.0;
  double fc_upper = 0.0;
  double fc1_lower_shape = 0.0;
};

inline BoundsReport bounds(int ell, int c, int r) {
  if (c < 2) throw std::invalid_argument("bounds: c must be >= 2");
  if (ell < c) throw std::invalid_argument("bounds: need ell >= c");
  if (r < 1) throw std::invalid_argument("bounds: r must be >= 1");
  BoundsReport b;
  b.ell = ell;
  b.c = c;
  b.r = r;
  double prod = 1.0;
  for (int j = 0; j <= r; ++j)
    prod *= static_cast<double>(ell) / c + static_cast<double>(r) / 2.0 + j;
  b.bogdanov_lower = prod / std::pow(static_cast<double>(r) + 1.0, r + 1);
  const double lnell = std::log(static_cast<double>(ell));
  b.f3_upper = std::pow(10.0 * ell * lnell, r + 1);
  b.fc_upper = std::pow(30.0 * ell * lnell, r + 1) / std::pow(static_cast<double>(c), r);
  b.fc1_lower_shape = static_cast<double>(ell) * ell * lnell /
                      (static_cast<double>(c) * std::log(static_cast<double>(c)));
  return b;
}

// Blow each vertex up into a k-clique; (v,a) maps to v*k+a. Preserves alpha,
// multiplies every coloring bound by k.
inline Graph clique_expand(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("clique_expand: k must be >= 1");
  const long long n = static_cast<long long>(g.vertex_count()) * k;
  if (n > 2'000'000'000LL) throw std::invalid_argument("clique_expand: result too large");
  Graph out(static_cast<int>(n));
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) out.add_edge(v * k + a, v * k + b);
  for (const auto& [u, v] : g.edges())
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) out.add_edge(u * k + a, v * k + b);
  return out;
}

namespace detail {

// BFS parity 2-coloring; nullopt when some component is not bipartite.
inline std::optional<Coloring> two_coloring(const Graph& g) {
  Coloring c;
  c.palette_size = 2;
  c.colors.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (c.colors[static_cast<std::size_t>(s)] >= 0) continue;
    c.colors[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (c.colors[static_cast<std::size_t>(w)] < 0) {
          c.colors[static_cast<std::size_t>(w)] = 1 - c.colors[static_cast<std::size_t>(v)];
          q.push(w);
        } else if (c.colors[static_cast<std::size_t>(w)] == c.colors[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return c;
}

// Level parity x remainder parity; a proper 4-coloring of the ball when the
// remainder is bipartite.
inline std::optional<Coloring> ball_four_coloring(const Ball& b) {
  auto rcol = two_coloring(b.remainder_graph());
  if (!rcol) return std::nullopt;
  Coloring lcol;
  lcol.palette_size = 2;
  lcol.colors.resize(static_cast<std::size_t>(b.size()));
  for (int v = 0; v < b.size(); ++v)
    lcol.colors[static_cast<std::size_t>(v)] = b.level_of[static_cast<std::size_t>(v)] % 2;
  Coloring prod = product_coloring(lcol, *rcol);
  if (!is_proper(b.subgraph, prod)) return std::nullopt;
  return prod;
}

}  // namespace detail

// Audit of one sampled graph: ball degeneracy, degree and independence
// summaries. alpha_upper is exact only when the solver finished.
struct Local5Report {
  Graph graph;
  PaperParams params;
  int radius = 0;
  int centers_audited = 0;
  int max_degree = 0;
  int max_ball_size = 0;
  int non_4_degenerate_balls = 0;
  int alpha_upper = 0;
  bool alpha_exact = false;
  int chi_lower = 0;
};

// Samples G(n,p) at the given parameters and audits r-balls around the first
// `centers` vertices (all of them when centers < 0). Vertices of G(n,p) are
// exchangeable, so a prefix audit is an unbiased sample of ball statistics.
inline Local5Report construct_local5(const PaperParams& pp, const RngStream& rng, int centers = -1) {
  if (pp.n > 50'000'000LL) throw std::invalid_argument("construct_local5: n too large to materialize");
  Local5Report rep;
  rep.params = pp;
  rep.radius = pp.r;
  RngStream stream = rng;
  rep.graph = sample_gnp(static_cast<int>(pp.n), pp.p, stream);
  rep.max_degree = rep.graph.max_degree();
  const int n = rep.graph.vertex_count();
  const int audit = centers < 0 ? n : std::min(centers, n);
  rep.centers_audited = audit;
  for (int v = 0; v < audit; ++v) {
    Ball b = ball(rep.graph, v, pp.r);
    rep.max_ball_size = std::max(rep.max_ball_size, b.size());
    if (degeneracy(b.subgraph).degeneracy > 4) ++rep.non_4_degenerate_balls;
  }
  if (n <= 60) {
    IndependenceResult alpha = independence_number(rep.graph, AlphaMode::exact);
    if (alpha.feasibility == Feasibility::yes) {
      rep.alpha_upper = alpha.value;
      rep.alpha_exact = true;
    }
  }
  if (!rep.alpha_exact) rep.alpha_upper = clique_cover_upper_bound(rep.graph).size;
  rep.chi_lower = chi_lower_bound_via_alpha(rep.graph, rep.alpha_upper);
  return rep;
}

struct SurgeryOptions {
  bool verify = true;              // recompute survivor balls, certify each one
  bool measure_local_chi = false;  // exact chi of every survivor ball
  SolverBudget budget;             // per exact solve
};

struct SurgeryReport {
  Graph result;
  std::vector<int> kept;     // original ids, ascending
  std::vector<int> deleted;  // original ids, ascending
  int input_n = 0;
  double deleted_fraction = 0.0;
  int guarantee = 0;  // colors that suffice for every r-ball of the result
  int radius = 0;
  bool verified = false;        // all survivor certificates checked and passed
  int measured_local_chi = -1;  // -1 until measured
  int undecided_centers = 0;    // ball solves that hit the node budget
  int alpha_upper = 0;          // independence bound on the result
  bool alpha_exact = false;
  int chi_lower_bound = 0;  // ceil(n / alpha_upper)
};

namespace detail {

// Exact chromatic number of every r-ball of the result. A ball no larger than
// the running maximum cannot raise it and is skipped; budget-starved solves
// are counted, never folded into the maximum.
inline void measure_result_local_chi(SurgeryReport& rep, const SurgeryOptions& opt) {
  rep.measured_local_chi = 0;
  for (int v = 0; v < rep.result.vertex_count(); ++v) {
    Ball b = ball(rep.result, v, rep.radius);
    if (b.size() <= rep.measured_local_chi) continue;
    ChromaticResult cr = chromatic_number(b.subgraph, opt.budget);
    if (cr.feasibility == Feasibility::yes)
      rep.measured_local_chi = std::max(rep.measured_local_chi, cr.value);
    else
      ++rep.undecided_centers;
  }
}

inline void bound_result_chi_from_below(SurgeryReport& rep, const SolverBudget& budget) {
  if (rep.result.vertex_count() == 0) {
    rep.alpha_exact = true;
    return;
  }
  if (rep.result.vertex_count() <= 60) {
    IndependenceResult alpha = independence_number(rep.result, AlphaMode::exact, budget);
    if (alpha.feasibility == Feasibility::yes) {
      rep.alpha_upper = alpha.value;
      rep.alpha_exact = true;
    }
  }
  if (!rep.alpha_exact) rep.alpha_upper = clique_cover_upper_bound(rep.result).size;
  rep.chi_lower_bound = chi_lower_bound_via_alpha(rep.result, rep.alpha_upper);
}

}  // namespace detail

// Deletes every center whose r-ball remainder has an odd cycle. Survivor
// balls are recomputed on the result and certified with an explicit
// 4-coloring; `verified` records whether every certificate went through.
inline SurgeryReport surgery_local4(const Graph& g, int radius, const SurgeryOptions& opt = {}) {
  if (radius < 1) throw std::invalid_argument("surgery_local4: radius must be >= 1");
  SurgeryReport rep;
  rep.radius = radius;
  rep.guarantee = 4;
  rep.input_n = g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v) {
    Ball b = ball(g, v, radius);
    if (!is_bipartite(b.remainder_graph())) rep.deleted.push_back(v);
  }
  Subgraph s = delete_vertices(g, rep.deleted);
  rep.result = std::move(s.graph);
  rep.kept = std::move(s.to_original);
  rep.deleted_fraction = g.vertex_count() == 0
                             ? 0.0
                             : static_cast<double>(rep.deleted.size()) / g.vertex_count();
  if (opt.verify) {
    rep.verified = true;
    for (int v = 0; v < rep.result.vertex_count(); ++v) {
      Ball b = ball(rep.result, v, radius);
      if (!detail::ball_four_coloring(b)) {
        rep.verified = false;
        break;
      }
    }
  }
  if (opt.measure_local_chi) detail::measure_result_local_chi(rep, opt);
  detail::bound_result_chi_from_below(rep, opt.budget);
  return rep;
}

// Deletes every center whose r-ball is not 2-degenerate. Ball degeneracy is
// monotone under vertex deletion, so survivor balls stay 2-degenerate; the
// certificate is a greedy 3-coloring along the elimination order.
inline SurgeryReport surgery_local3(const Graph& g, int radius, const SurgeryOptions& opt = {}) {
  if (radius < 1) throw std::invalid_argument("surgery_local3: radius must be >= 1");
  SurgeryReport rep;
  rep.radius = radius;
  rep.guarantee = 3;
  rep.input_n = g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v) {
    Ball b = ball(g, v, radius);
    if (!is_k_degenerate(b.subgraph, 2)) rep.deleted.push_back(v);
  }
  Subgraph s = delete_vertices(g, rep.deleted);
  rep.result = std::move(s.graph);
  rep.kept = std::move(s.to_original);
  rep.deleted_fraction = g.vertex_count() == 0
                             ? 0.0
                             : static_cast<double>(rep.deleted.size()) / g.vertex_count();
  if (opt.verify) {
    rep.verified = true;
    for (int v = 0; v < rep.result.vertex_count(); ++v) {
      Ball b = ball(rep.result, v, radius);
      if (!is_k_degenerate(b.subgraph, 2)) {
        rep.verified = false;
        break;
      }
      Coloring c = greedy_coloring_degenerate(b.subgraph);
      if (c.palette_size > 3 || !is_proper(b.subgraph, c)) {
        rep.verified = false;
        break;
      }
    }
  }
  if (opt.measure_local_chi) detail::measure_result_local_chi(rep, opt);
  detail::bound_result_chi_from_below(rep, opt.budget);
  return rep;
}

}  // namespace localcolor

#endif
