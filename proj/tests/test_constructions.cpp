#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "localcolor/constructions.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

namespace lc = localcolor;

TEST(PaperParams, PinnedValues) {
  const lc::PaperParams a = lc::paper_parameters(3, 1);
  EXPECT_EQ(a.n, 1086);
  EXPECT_NEAR(a.p, 0.009102392266, 1e-9);
  EXPECT_NEAR(a.d, 9.887510598012988, 1e-12);
  EXPECT_FALSE(a.capped);

  const lc::PaperParams b = lc::paper_parameters(2, 1);
  EXPECT_EQ(b.n, 192);
  EXPECT_NEAR(b.p, 0.3 / (20.0 * std::log(2.0)), 1e-12);

  const lc::PaperParams c = lc::paper_parameters(3, 2, 5000);
  EXPECT_EQ(c.n, 5000);
  EXPECT_TRUE(c.capped);
  EXPECT_NEAR(c.p, c.d / 5000.0, 1e-15);
  EXPECT_NEAR(c.p * static_cast<double>(c.n), c.d, 1e-9);  // cap keeps mean degree
}

TEST(PaperParams, Guards) {
  EXPECT_THROW(lc::paper_parameters(1, 1), std::invalid_argument);
  EXPECT_THROW(lc::paper_parameters(3, 0), std::invalid_argument);
  EXPECT_THROW(lc::paper_parameters(10, 30), std::invalid_argument);  // n overflows
  EXPECT_NO_THROW(lc::paper_parameters(3, 3, 100000));
}

TEST(Bounds, PinnedValues) {
  const lc::BoundsReport b = lc::bounds(6, 2, 1);
  EXPECT_DOUBLE_EQ(b.bogdanov_lower, 3.9375);
  const lc::BoundsReport t = lc::bounds(3, 3, 1);
  EXPECT_NEAR(t.f3_upper, 1086.2540647313238, 1e-6);
  // with c = 3 the two upper forms differ by exactly one factor of 3 at r = 1
  EXPECT_NEAR(t.fc_upper, 3.0 * t.f3_upper, 1e-6);
  // l = 4, c = 2: the log ratio cancels, lnl / lnc = 2
  EXPECT_DOUBLE_EQ(lc::bounds(4, 2, 1).fc1_lower_shape, 16.0);
}

TEST(Bounds, MonotoneInEll) {
  for (int r = 1; r <= 3; ++r) {
    double prev_low = 0.0, prev_up = 0.0;
    for (int ell = 4; ell <= 40; ell += 4) {
      const lc::BoundsReport b = lc::bounds(ell, 3, r);
      EXPECT_GT(b.bogdanov_lower, prev_low);
      EXPECT_GT(b.fc_upper, prev_up);
      EXPECT_GE(b.fc_upper, b.bogdanov_lower);  // upper and lower bound one function
      prev_low = b.bogdanov_lower;
      prev_up = b.fc_upper;
    }
  }
}

TEST(Bounds, Guards) {
  EXPECT_THROW(lc::bounds(6, 1, 1), std::invalid_argument);
  EXPECT_THROW(lc::bounds(2, 3, 1), std::invalid_argument);
  EXPECT_THROW(lc::bounds(6, 2, 0), std::invalid_argument);
}

TEST(CliqueExpand, StructureByMapping) {
  const lc::Graph g = fixtures::petersen_graph();
  const int k = 3;
  const lc::Graph e = lc::clique_expand(g, k);
  ASSERT_EQ(e.vertex_count(), 30);
  EXPECT_EQ(e.edge_count(), g.vertex_count() * 3 + g.edge_count() * k * k);
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u; v < g.vertex_count(); ++v)
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
          if (u == v && a == b) continue;
          const bool expect = u == v || g.has_edge(u, v);
          EXPECT_EQ(e.has_edge(u * k + a, v * k + b), expect);
        }
  EXPECT_EQ(lc::clique_expand(g, 1), g);
  EXPECT_THROW(lc::clique_expand(g, 0), std::invalid_argument);
}

TEST(CliqueExpand, FiveCycleTimesTwo) {
  const lc::Graph g = fixtures::cycle_graph(5);
  const lc::Graph e = lc::clique_expand(g, 2);
  EXPECT_EQ(lc::chromatic_number(e).value, 5);
  const auto alpha = lc::independence_number(e, lc::AlphaMode::exact);
  EXPECT_EQ(alpha.value, 2);  // alpha is preserved
  EXPECT_EQ(lc::independence_number(g, lc::AlphaMode::exact).value, 2);
}

TEST(CliqueExpand, SolverIdentitiesOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const lc::Graph g = fixtures::random_graph(7, 0.3, 1000 + seed);
    const int chi = lc::chromatic_number(g).value;
    const int alpha = lc::independence_number(g, lc::AlphaMode::exact).value;
    for (int k = 2; k <= 3; ++k) {
      const lc::Graph e = lc::clique_expand(g, k);
      EXPECT_EQ(lc::independence_number(e, lc::AlphaMode::exact).value, alpha);
      EXPECT_LE(lc::chromatic_number(e).value, k * chi);
      EXPECT_GE(lc::chromatic_number(e).value, k);  // contains K_k
    }
  }
}

TEST(TwoColoring, BipartiteOnly) {
  const auto even = lc::detail::two_coloring(fixtures::cycle_graph(6));
  ASSERT_TRUE(even.has_value());
  EXPECT_LE(even->palette_size, 2);
  EXPECT_TRUE(lc::is_proper(fixtures::cycle_graph(6), *even));
  EXPECT_FALSE(lc::detail::two_coloring(fixtures::cycle_graph(5)).has_value());
  const auto empty = lc::detail::two_coloring(lc::Graph(4));
  ASSERT_TRUE(empty.has_value());
  EXPECT_TRUE(lc::is_proper(lc::Graph(4), *empty));
}

TEST(BallFourColoring, ProperWheneverRemainderIsBipartite) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const lc::Graph g = fixtures::random_graph(24, 0.1 + 0.02 * static_cast<double>(seed % 5), 1100 + seed);
    for (int v = 0; v < g.vertex_count(); v += 5) {
      const lc::Ball b = lc::ball(g, v, 2);
      const bool bip = lc::is_bipartite(b.remainder_graph());
      const auto col = lc::detail::ball_four_coloring(b);
      EXPECT_EQ(col.has_value(), bip);
      if (col) {
        EXPECT_TRUE(lc::is_proper(b.subgraph, *col));
        EXPECT_LE(col->palette_size, 4);
      }
    }
  }
}

TEST(Local5, AuditIsDeterministicAndConsistent) {
  const lc::PaperParams pp = lc::paper_parameters(3, 1, 300);
  const lc::Local5Report a = lc::construct_local5(pp, lc::RngStream(41, 0), 50);
  const lc::Local5Report b = lc::construct_local5(pp, lc::RngStream(41, 0), 50);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.max_ball_size, b.max_ball_size);
  const lc::Local5Report c = lc::construct_local5(pp, lc::RngStream(41, 1), 50);
  EXPECT_NE(a.graph, c.graph);

  EXPECT_EQ(a.graph.vertex_count(), 300);
  EXPECT_EQ(a.centers_audited, 50);
  EXPECT_EQ(a.max_degree, a.graph.max_degree());
  EXPECT_EQ(a.radius, 1);
  int bad = 0, biggest = 0;
  for (int v = 0; v < 50; ++v) {
    const lc::Ball ballv = lc::ball(a.graph, v, 1);
    biggest = std::max(biggest, ballv.size());
    if (lc::degeneracy(ballv.subgraph).degeneracy > 4) ++bad;
  }
  EXPECT_EQ(a.non_4_degenerate_balls, bad);
  EXPECT_EQ(a.max_ball_size, biggest);
  EXPECT_GE(a.alpha_upper, lc::greedy_independent_set(a.graph).value);
  EXPECT_EQ(a.chi_lower, lc::chi_lower_bound_via_alpha(a.graph, a.alpha_upper));

  lc::PaperParams huge = pp;
  huge.n = 60'000'000LL;
  EXPECT_THROW(lc::construct_local5(huge, lc::RngStream(41, 2), 1), std::invalid_argument);
}

TEST(SurgeryLocal4, DeletesOddRemainders) {
  const auto all = lc::surgery_local4(fixtures::complete_graph(4), 1);
  EXPECT_EQ(all.deleted.size(), 4u);  // every remainder is a triangle
  EXPECT_EQ(all.result.vertex_count(), 0);
  EXPECT_DOUBLE_EQ(all.deleted_fraction, 1.0);
  EXPECT_TRUE(all.verified);  // vacuously
  EXPECT_EQ(all.guarantee, 4);
  EXPECT_EQ(all.input_n, 4);

  // Petersen balls at radius 1 are stars, remainder empty
  lc::SurgeryOptions opt;
  opt.measure_local_chi = true;
  const auto stars = lc::surgery_local4(fixtures::petersen_graph(), 1, opt);
  EXPECT_TRUE(stars.deleted.empty());
  EXPECT_EQ(stars.result, fixtures::petersen_graph());
  EXPECT_TRUE(stars.verified);
  EXPECT_EQ(stars.measured_local_chi, 2);
  EXPECT_EQ(stars.undecided_centers, 0);

  // radius 2: the whole graph, remainder is an even cycle, nothing deleted
  const auto whole = lc::surgery_local4(fixtures::petersen_graph(), 2, opt);
  EXPECT_TRUE(whole.deleted.empty());
  EXPECT_TRUE(whole.verified);
  EXPECT_EQ(whole.measured_local_chi, 3);
  EXPECT_LE(whole.measured_local_chi, whole.guarantee);
  EXPECT_THROW(lc::surgery_local4(fixtures::petersen_graph(), 0), std::invalid_argument);
}

TEST(SurgeryLocal3, DeletesDenseBalls) {
  const auto k5 = lc::surgery_local3(fixtures::complete_graph(5), 1);
  EXPECT_EQ(k5.deleted.size(), 5u);
  EXPECT_EQ(k5.guarantee, 3);
  EXPECT_EQ(k5.chi_lower_bound, 0);  // empty result

  lc::SurgeryOptions opt;
  opt.measure_local_chi = true;
  const auto tree = lc::surgery_local3(fixtures::path_graph(10), 2, opt);
  EXPECT_TRUE(tree.deleted.empty());
  EXPECT_TRUE(tree.verified);
  EXPECT_EQ(tree.measured_local_chi, 2);

  const auto stars = lc::surgery_local3(fixtures::petersen_graph(), 1, opt);
  EXPECT_TRUE(stars.deleted.empty());
  EXPECT_EQ(stars.measured_local_chi, 2);

  // radius 2 ball is the whole Petersen graph, degeneracy 3
  const auto whole = lc::surgery_local3(fixtures::petersen_graph(), 2);
  EXPECT_EQ(whole.deleted.size(), 10u);
  EXPECT_THROW(lc::surgery_local3(fixtures::petersen_graph(), -1), std::invalid_argument);
}

TEST(Surgery, ReportPartitionsVertices) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const lc::Graph g = fixtures::random_graph(40, 0.08 + 0.02 * static_cast<double>(seed % 4), 1200 + seed);
    for (int radius = 1; radius <= 2; ++radius) {
      const auto rep = lc::surgery_local3(g, radius);
      std::set<int> seen(rep.kept.begin(), rep.kept.end());
      for (int v : rep.deleted) EXPECT_TRUE(seen.insert(v).second);
      EXPECT_EQ(static_cast<int>(seen.size()), g.vertex_count());
      EXPECT_TRUE(std::is_sorted(rep.kept.begin(), rep.kept.end()));
      EXPECT_TRUE(std::is_sorted(rep.deleted.begin(), rep.deleted.end()));
      EXPECT_DOUBLE_EQ(rep.deleted_fraction,
                       static_cast<double>(rep.deleted.size()) / g.vertex_count());
      EXPECT_EQ(rep.result, lc::delete_vertices(g, rep.deleted).graph);
      EXPECT_TRUE(rep.verified);
    }
  }
}

TEST(Surgery, Local3IsIdempotent) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const lc::Graph g = fixtures::random_graph(50, 0.1, 1300 + seed);
    for (int radius = 1; radius <= 2; ++radius) {
      const auto first = lc::surgery_local3(g, radius);
      const auto second = lc::surgery_local3(first.result, radius);
      EXPECT_TRUE(second.deleted.empty()) << "seed " << seed << " r " << radius;
      EXPECT_EQ(second.result, first.result);
    }
  }
}

TEST(Surgery, MeasuredChiRespectsGuarantee) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const lc::Graph g = fixtures::random_graph(35, 0.12, 1400 + seed);
    lc::SurgeryOptions opt;
    opt.measure_local_chi = true;
    const auto r3 = lc::surgery_local3(g, 1, opt);
    EXPECT_EQ(r3.undecided_centers, 0);
    if (r3.result.vertex_count() > 0 && r3.result.edge_count() > 0) {
      EXPECT_GE(r3.measured_local_chi, 2);
    }
    EXPECT_LE(r3.measured_local_chi, 3);
    const auto r4 = lc::surgery_local4(g, 1, opt);
    EXPECT_EQ(r4.undecided_centers, 0);
    EXPECT_LE(r4.measured_local_chi, 4);
    EXPECT_GE(r4.alpha_upper, 0);
    if (r4.result.vertex_count() > 0) {
      EXPECT_GE(r4.chi_lower_bound, 1);
      EXPECT_TRUE(r4.alpha_exact);  // 35 vertices, exact alpha in reach
    }
  }
}

TEST(Surgery, StarvedBudgetCountsUndecided) {
  lc::SurgeryOptions opt;
  opt.measure_local_chi = true;
  opt.budget.node_limit = 1;
  const auto rep = lc::surgery_local4(fixtures::petersen_graph(), 2, opt);
  EXPECT_EQ(rep.result.vertex_count(), 10);
  EXPECT_GT(rep.undecided_centers, 0);  // starved solves are reported, not guessed
}

TEST(Surgery, EmptyInput) {
  const auto rep = lc::surgery_local3(lc::Graph(0), 1);
  EXPECT_EQ(rep.input_n, 0);
  EXPECT_TRUE(rep.kept.empty());
  EXPECT_TRUE(rep.verified);
  EXPECT_DOUBLE_EQ(rep.deleted_fraction, 0.0);
}
