#ifndef LOCALCOLOR_EXPERIMENTS_HPP
#define LOCALCOLOR_EXPERIMENTS_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "localcolor/checker.hpp"
#include "localcolor/constructions.hpp"
#include "localcolor/gnp.hpp"
#include "localcolor/graph.hpp"
#include "localcolor/json_io.hpp"
#include "localcolor/reveal.hpp"
#include "localcolor/rng.hpp"
#include "localcolor/stats.hpp"

namespace localcolor {

// Thrown when a run observes something the library guarantees impossible,
// e.g. the pessimistic check accepting a ball that is not 2-degenerate. The
// message carries enough of the offending instance to replay it.
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  int version = 1;
  std::string kind;
  std::uint64_t seed = 0;
  long long trials = 0;
  int ell = 0;  // 0 = unset
  int c = 0;    // 0 = unset; 3 or 4 picks the surgery in construction_pipeline
  int r = 1;
  long long scale_cap = 0;  // 0 = no cap
  long long n_override = -1;
  double p_override = -1.0;
  int centers_per_graph = 1;
  int cycle_length_cap = 12;
  std::string schedule = "fixed_r";
  std::string degree_model = "session_mean";
  SolverBudget budget;
  std::string out;  // report path; empty = stdout

  static ExperimentConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

inline const std::set<std::string>& known_experiments() {
  static const std::set<std::string> names{
      "ball_degeneracy", "odd_cycle_R", "checker_soundness",
      "reveal_equivalence", "construction_pipeline", "max_degree_tail"};
  return names;
}

inline ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
  static const std::set<std::string> allowed{
      "version", "kind", "seed", "trials", "ell", "c", "r",
      "scale_cap", "n", "p", "centers_per_graph", "cycle_length_cap",
      "schedule", "degree_model", "budgets", "out"};
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw std::invalid_argument("config: unknown key '" + key + "'");

  ExperimentConfig c;
  if (!j.contains("version") || !j["version"].is_number_integer())
    throw std::invalid_argument("config: missing integer 'version'");
  c.version = j["version"].get<int>();
  if (c.version != 1) throw std::invalid_argument("config: unsupported version");

  if (!j.contains("kind") || !j["kind"].is_string())
    throw std::invalid_argument("config: missing string 'kind'");
  c.kind = j["kind"].get<std::string>();
  if (!known_experiments().count(c.kind))
    throw std::invalid_argument("config: unknown kind '" + c.kind + "'");

  if (!j.contains("seed") || !j["seed"].is_number_integer())
    throw std::invalid_argument("config: missing integer 'seed'");
  if (!j["seed"].is_number_unsigned() && j["seed"].get<long long>() < 0)
    throw std::invalid_argument("config: seed must be nonnegative");
  c.seed = j["seed"].get<std::uint64_t>();

  if (!j.contains("trials") || !j["trials"].is_number_integer())
    throw std::invalid_argument("config: missing integer 'trials'");
  c.trials = j["trials"].get<long long>();
  if (c.trials < 1 || c.trials > 1'000'000'000LL)
    throw std::invalid_argument("config: trials out of range");

  auto get_int = [&](const char* key, long long lo, long long hi) -> long long {
    if (!j[key].is_number_integer())
      throw std::invalid_argument(std::string("config: '") + key + "' must be an integer");
    const long long v = j[key].get<long long>();
    if (v < lo || v > hi)
      throw std::invalid_argument(std::string("config: '") + key + "' out of range");
    return v;
  };
  if (j.contains("ell")) c.ell = static_cast<int>(get_int("ell", 2, 1'000'000));
  if (j.contains("c")) c.c = static_cast<int>(get_int("c", 3, 4));
  if (j.contains("r")) c.r = static_cast<int>(get_int("r", 1, 64));
  if (j.contains("scale_cap")) c.scale_cap = get_int("scale_cap", 1, 50'000'000);
  if (j.contains("n")) c.n_override = get_int("n", 1, 50'000'000);
  if (j.contains("p")) {
    if (!j["p"].is_number()) throw std::invalid_argument("config: 'p' must be a number");
    c.p_override = j["p"].get<double>();
    if (c.p_override < 0.0 || c.p_override > 1.0) throw std::invalid_argument("config: 'p' out of range");
  }
  if (j.contains("centers_per_graph"))
    c.centers_per_graph = static_cast<int>(get_int("centers_per_graph", 1, 1'000'000));
  if (j.contains("cycle_length_cap"))
    c.cycle_length_cap = static_cast<int>(get_int("cycle_length_cap", 3, 64));
  if (j.contains("schedule")) {
    if (!j["schedule"].is_string()) throw std::invalid_argument("config: 'schedule' must be a string");
    c.schedule = j["schedule"].get<std::string>();
    if (c.schedule == "paper_fixed_r") c.schedule = "fixed_r";
    if (c.schedule == "paper_large_r") c.schedule = "large_r";
    if (c.schedule != "fixed_r" && c.schedule != "large_r")
      throw std::invalid_argument("config: schedule must be fixed_r or large_r");
  }
  if (j.contains("degree_model")) {
    if (!j["degree_model"].is_string())
      throw std::invalid_argument("config: 'degree_model' must be a string");
    c.degree_model = j["degree_model"].get<std::string>();
    if (c.degree_model != "session_mean" && c.degree_model != "formula")
      throw std::invalid_argument("config: degree_model must be session_mean or formula");
  }
  if (j.contains("budgets")) {
    const auto& b = j["budgets"];
    if (!b.is_object()) throw std::invalid_argument("config: 'budgets' must be an object");
    for (const auto& [key, value] : b.items())
      if (key != "node_limit")
        throw std::invalid_argument("config: unknown budgets key '" + key + "'");
    if (b.contains("node_limit")) {
      if (!b["node_limit"].is_number_integer() || b["node_limit"].get<long long>() < 1)
        throw std::invalid_argument("config: budgets.node_limit must be a positive integer");
      c.budget.node_limit = b["node_limit"].get<std::int64_t>();
    }
  }
  if (j.contains("out")) {
    if (!j["out"].is_string()) throw std::invalid_argument("config: 'out' must be a string");
    c.out = j["out"].get<std::string>();
  }
  if ((c.n_override >= 0) != (c.p_override >= 0.0))
    throw std::invalid_argument("config: n and p must be set together");
  if (c.kind == "construction_pipeline" && c.c == 0)
    throw std::invalid_argument("config: construction_pipeline needs c (3 or 4)");
  return c;
}

// Unset optionals are omitted so the echo parses back unchanged.
inline nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["version"] = version;
  j["kind"] = kind;
  j["seed"] = seed;
  j["trials"] = trials;
  if (ell != 0) j["ell"] = ell;
  if (c != 0) j["c"] = c;
  j["r"] = r;
  if (scale_cap != 0) j["scale_cap"] = scale_cap;
  if (n_override >= 0) j["n"] = n_override;
  if (p_override >= 0) j["p"] = p_override;
  j["centers_per_graph"] = centers_per_graph;
  j["cycle_length_cap"] = cycle_length_cap;
  j["schedule"] = schedule;
  j["degree_model"] = degree_model;
  j["budgets"] = {{"node_limit", budget.node_limit}};
  if (!out.empty()) j["out"] = out;
  return j;
}

struct StatsReport {
  std::string kind;
  nlohmann::json config_echo;
  long long trials = 0;
  long long wall_clock_ms = 0;  // excluded from reproducibility comparisons
  std::map<std::string, double> metrics;
  std::map<std::string, Histogram> histograms;
  std::map<std::string, WilsonInterval> intervals;
  std::vector<std::string> notes;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["kind"] = kind;
    j["config"] = config_echo;
    j["trials"] = trials;
    j["wall_clock_ms"] = wall_clock_ms;
    nlohmann::json m = nlohmann::json::object();
    for (const auto& [k, v] : metrics) m[k] = v;
    j["metrics"] = m;
    nlohmann::json h = nlohmann::json::object();
    for (const auto& [k, hist] : histograms) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& [key, count] : hist) rows.push_back({key, count});
      h[k] = rows;
    }
    j["histograms"] = h;
    nlohmann::json iv = nlohmann::json::object();
    for (const auto& [k, w] : intervals)
      iv[k] = {{"point", w.point}, {"lo", w.lo}, {"hi", w.hi}};
    j["intervals"] = iv;
    j["notes"] = notes;
    return j;
  }

  std::string to_csv() const {
    auto num = [](double v) { return nlohmann::json(v).dump(); };
    std::string out = "section,name,key,value\n";
    out += "meta,kind," + kind + ",\n";
    out += "meta,trials,," + std::to_string(trials) + "\n";
    out += "meta,wall_clock_ms,," + std::to_string(wall_clock_ms) + "\n";
    for (const auto& [k, v] : metrics) out += "metric," + k + ",," + num(v) + "\n";
    for (const auto& [k, w] : intervals) {
      out += "interval," + k + ",point," + num(w.point) + "\n";
      out += "interval," + k + ",lo," + num(w.lo) + "\n";
      out += "interval," + k + ",hi," + num(w.hi) + "\n";
    }
    for (const auto& [k, hist] : histograms)
      for (const auto& [key, count] : hist)
        out += "histogram," + k + "," + std::to_string(key) + "," + std::to_string(count) + "\n";
    return out;
  }
};

// Simple cycles grouped by length, up to max_len. Each cycle is rooted at
// its smallest vertex and walked in both directions, hence the halving.
inline std::map<int, long long> count_cycles_by_length(const Graph& g, int max_len) {
  if (max_len < 3) throw std::invalid_argument("count_cycles_by_length: max_len must be >= 3");
  std::map<int, long long> twice;
  const int n = g.vertex_count();
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  std::vector<int> path;
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[static_cast<std::size_t>(s)] = 1;
    // depth-first over paths s, v1, ..., vk with all vi > s
    auto extend = [&](auto&& self, int v) -> void {
      for (int w : g.neighbors(v)) {
        if (w == s && path.size() >= 3) ++twice[static_cast<int>(path.size())];
        if (w <= s || on_path[static_cast<std::size_t>(w)]) continue;
        if (static_cast<int>(path.size()) >= max_len) continue;
        path.push_back(w);
        on_path[static_cast<std::size_t>(w)] = 1;
        self(self, w);
        on_path[static_cast<std::size_t>(w)] = 0;
        path.pop_back();
      }
    };
    extend(extend, s);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  std::map<int, long long> out;
  for (const auto& [len, c] : twice) out[len] = c / 2;
  return out;
}

namespace detail {

struct ModelParams {
  long long n = 0;
  double p = 0.0;
  int r = 1;
  int ell = 0;
  double d = 0.0;
  PaperParams pp;
};

inline ModelParams resolve_model(const ExperimentConfig& cfg, bool need_ell) {
  ModelParams m;
  m.r = cfg.r;
  m.ell = cfg.ell;
  if (cfg.n_override >= 0) {
    if (need_ell && cfg.ell < 2)
      throw std::invalid_argument("config: this experiment needs ell");
    m.n = cfg.n_override;
    m.p = cfg.p_override;
    m.d = static_cast<double>(m.n) * m.p;
    m.pp = PaperParams{cfg.ell, cfg.r, m.n, m.p, m.d, false};
  } else {
    if (cfg.ell < 2) throw std::invalid_argument("config: ell required when n/p are not given");
    m.pp = paper_parameters(cfg.ell, cfg.r, cfg.scale_cap);
    m.n = m.pp.n;
    m.p = m.pp.p;
    m.d = m.pp.d;
  }
  if (m.n > 50'000'000LL)
    throw std::invalid_argument("config: n too large to materialize; set scale_cap");
  return m;
}

// All-pairs Bernoulli sampler, the slow reference the skip sampler must match.
inline Graph naive_gnp(int n, double p, RngStream& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

inline WilsonInterval interval_of(long long succ, long long total) {
  return wilson_interval(succ, total);
}

constexpr double kGrowthEpsilon = 1.0 / 9.0;

}  // namespace detail

inline StatsReport run_ball_degeneracy(const ExperimentConfig& cfg) {
  const auto m = detail::resolve_model(cfg, false);
  StatsReport rep;
  RunningStats size_stats;
  long long balls = 0, gt2 = 0, le2 = 0, le4 = 0;
  for (long long trial = 0; trial < cfg.trials; ++trial) {
    RngStream ts(cfg.seed, static_cast<std::uint64_t>(trial));
    RngStream gs = ts.child(0);
    Graph g = sample_gnp(static_cast<int>(m.n), m.p, gs);
    RngStream cs = ts.child(1);
    for (int k = 0; k < cfg.centers_per_graph; ++k) {
      const int v = static_cast<int>(cs.below(static_cast<std::uint64_t>(m.n)));
      Ball b = ball(g, v, m.r);
      const int deg = degeneracy(b.subgraph).degeneracy;
      add_sample(rep.histograms["ball_degeneracy"], deg);
      add_sample(rep.histograms["ball_size"], b.size());
      size_stats.push(b.size());
      ++balls;
      if (deg > 2) ++gt2;
      if (deg <= 2) ++le2;
      if (deg <= 4) ++le4;
    }
  }
  rep.metrics["balls"] = static_cast<double>(balls);
  rep.metrics["mean_degree_d"] = m.d;
  rep.metrics["ball_size_mean"] = size_stats.mean();
  rep.metrics["ball_size_stddev"] = size_stats.stddev();
  rep.metrics["ball_size_max"] = size_stats.max();
  // worst-case level growth the pessimistic check tolerates, compounded
  rep.metrics["ball_size_ref_line"] =
      std::pow((1.0 + detail::kGrowthEpsilon) * m.d, m.r);
  rep.intervals["frac_degeneracy_gt_2"] = detail::interval_of(gt2, balls);
  rep.intervals["frac_degeneracy_le_2"] = detail::interval_of(le2, balls);
  rep.intervals["frac_degeneracy_le_4"] = detail::interval_of(le4, balls);
  return rep;
}

inline StatsReport run_odd_cycle_R(const ExperimentConfig& cfg) {
  const auto m = detail::resolve_model(cfg, false);
  StatsReport rep;
  long long balls = 0, odd = 0;
  RunningStats cycles_per_ball;
  for (long long trial = 0; trial < cfg.trials; ++trial) {
    RngStream ts(cfg.seed, static_cast<std::uint64_t>(trial));
    RngStream gs = ts.child(0);
    Graph g = sample_gnp(static_cast<int>(m.n), m.p, gs);
    RngStream cs = ts.child(1);
    for (int k = 0; k < cfg.centers_per_graph; ++k) {
      const int v = static_cast<int>(cs.below(static_cast<std::uint64_t>(m.n)));
      Ball b = ball(g, v, m.r);
      Graph rg = b.remainder_graph();
      ++balls;
      if (!is_bipartite(rg)) ++odd;
      long long found = 0;
      for (const auto& [len, count] : count_cycles_by_length(rg, cfg.cycle_length_cap)) {
        rep.histograms["r_cycle_length"][len] += count;
        found += count;
      }
      add_sample(rep.histograms["r_cycles_per_ball"], found);
      cycles_per_ball.push(static_cast<double>(found));
    }
  }
  rep.metrics["balls"] = static_cast<double>(balls);
  rep.metrics["mean_cycles_per_ball"] = cycles_per_ball.mean();
  rep.intervals["frac_R_has_odd_cycle"] = detail::interval_of(odd, balls);
  return rep;
}

inline StatsReport run_checker_soundness(const ExperimentConfig& cfg) {
  const auto m = detail::resolve_model(cfg, true);
  CheckerParams params;
  params.ell = m.ell;
  params.schedule = cfg.schedule == "large_r" ? Schedule::large_r : Schedule::fixed_r;
  params.degree_model =
      cfg.degree_model == "formula" ? DegreeModel::formula : DegreeModel::session_mean;
  StatsReport rep;
  long long accepts = 0, rejects = 0, false_no = 0;
  long long rej_growth = 0, rej_cycle = 0, rej_horseshoe = 0;
  std::map<int, RunningStats> b_by_level;
  for (long long trial = 0; trial < cfg.trials; ++trial) {
    RngStream ts(cfg.seed, static_cast<std::uint64_t>(trial));
    RngStream ss = ts.child(0);
    RevealSession session = begin_reveal(static_cast<int>(m.n), m.p, m.r, ss);
    CheckVerdict verdict = check_two_degenerate(session, params);
    finish_reveal(session);
    Ball b = reveal_to_ball(session);
    const bool truly = is_k_degenerate(b.subgraph, 2);
    add_sample(rep.histograms["ball_size"], b.size());
    for (const auto& rec : verdict.levels) {
      const std::string lv = std::to_string(rec.level);
      add_sample(rep.histograms["c_level_" + lv], rec.cycles);
      if (rec.cycles == 0) {
        // h and b are only computed once the level is cycle-free
        add_sample(rep.histograms["h_level_" + lv], rec.horseshoes);
        b_by_level[rec.level].push(rec.threshold);
      }
    }
    if (verdict.two_degenerate) {
      ++accepts;
      if (!truly)
        throw InvariantViolation(
            "checker accepted a ball that is not 2-degenerate: seed=" +
            std::to_string(cfg.seed) + " trial=" + std::to_string(trial) +
            "\ntranscript=" + transcript_json(session).dump() +
            "\nverdict=" + verdict_json(verdict).dump());
    } else {
      ++rejects;
      if (truly) ++false_no;
      switch (verdict.reason) {
        case CheckReason::level_growth: ++rej_growth; break;
        case CheckReason::i_cycle: ++rej_cycle; break;
        case CheckReason::horseshoe_overflow: ++rej_horseshoe; break;
        case CheckReason::none: break;
      }
    }
  }
  rep.metrics["accepts"] = static_cast<double>(accepts);
  rep.metrics["rejects"] = static_cast<double>(rejects);
  rep.metrics["rejects_level_growth"] = static_cast<double>(rej_growth);
  rep.metrics["rejects_i_cycle"] = static_cast<double>(rej_cycle);
  rep.metrics["rejects_horseshoe_overflow"] = static_cast<double>(rej_horseshoe);
  rep.metrics["accepted_unsound"] = 0.0;  // a nonzero count throws instead
  for (const auto& [level, stats] : b_by_level)
    rep.metrics["b_level_" + std::to_string(level) + "_mean"] = stats.mean();
  rep.intervals["yes_rate"] = detail::interval_of(accepts, cfg.trials);
  rep.intervals["false_no_rate"] = detail::interval_of(false_no, cfg.trials);
  if (rejects > 0)
    rep.intervals["false_no_given_no"] = detail::interval_of(false_no, rejects);
  return rep;
}

inline StatsReport run_reveal_equivalence(const ExperimentConfig& cfg) {
  const auto m = detail::resolve_model(cfg, false);
  StatsReport rep;
  auto record = [&](const std::string& suffix, const Ball& b) {
    add_sample(rep.histograms["size_" + suffix], b.size());
    add_sample(rep.histograms["edges_" + suffix], b.subgraph.edge_count());
    add_sample(rep.histograms["max_degree_" + suffix], b.subgraph.max_degree());
    add_sample(rep.histograms["degeneracy_" + suffix], degeneracy(b.subgraph).degeneracy);
    for (int i = 1; i <= m.r; ++i) {
      const long long sz = i < static_cast<int>(b.levels.size())
                               ? static_cast<long long>(b.levels[static_cast<std::size_t>(i)].size())
                               : 0;
      add_sample(rep.histograms["level" + std::to_string(i) + "_" + suffix], sz);
    }
  };
  for (long long trial = 0; trial < cfg.trials; ++trial) {
    RngStream ts(cfg.seed, static_cast<std::uint64_t>(trial));
    RngStream sa = ts.child(0);
    RevealSession session = begin_reveal(static_cast<int>(m.n), m.p, m.r, sa);
    finish_reveal(session);
    record("reveal", reveal_to_ball(session));
    RngStream sb = ts.child(1);
    Graph g = sample_gnp(static_cast<int>(m.n), m.p, sb);
    record("direct", ball(g, 0, m.r));
  }
  std::vector<std::string> marginals{"size", "edges", "max_degree", "degeneracy"};
  for (int i = 1; i <= m.r; ++i) marginals.push_back("level" + std::to_string(i));
  for (const auto& name : marginals)
    rep.metrics["tv_" + name] =
        total_variation(rep.histograms[name + "_reveal"], rep.histograms[name + "_direct"]);
  return rep;
}

inline StatsReport run_construction_pipeline(const ExperimentConfig& cfg) {
  const auto m = detail::resolve_model(cfg, false);
  if (cfg.c != 3 && cfg.c != 4)
    throw std::invalid_argument("config: construction_pipeline needs c (3 or 4)");
  StatsReport rep;
  RunningStats max_deg, ball_size, deleted_frac, measured_chi, result_chi_lower;
  long long verified_ok = 0, non4_total = 0, undecided_total = 0;
  int measured_max = 0;
  SurgeryOptions opt;
  opt.verify = true;
  opt.measure_local_chi = true;
  opt.budget = cfg.budget;
  for (long long trial = 0; trial < cfg.trials; ++trial) {
    RngStream ts(cfg.seed, static_cast<std::uint64_t>(trial));
    RngStream gs = ts.child(0);
    Local5Report five = construct_local5(m.pp, gs, cfg.centers_per_graph);
    max_deg.push(five.max_degree);
    ball_size.push(five.max_ball_size);
    non4_total += five.non_4_degenerate_balls;
    SurgeryReport sr = cfg.c == 3 ? surgery_local3(five.graph, m.r, opt)
                                  : surgery_local4(five.graph, m.r, opt);
    if (!sr.verified)
      throw InvariantViolation(
          "surgery certificate failed: c=" + std::to_string(cfg.c) +
          " seed=" + std::to_string(cfg.seed) + " trial=" + std::to_string(trial) +
          "\nreport=" + surgery_json(sr).dump());
    ++verified_ok;
    if (sr.measured_local_chi > sr.guarantee)
      throw InvariantViolation(
          "surgery result exceeds its guarantee: measured=" +
          std::to_string(sr.measured_local_chi) + " guarantee=" + std::to_string(sr.guarantee) +
          " seed=" + std::to_string(cfg.seed) + " trial=" + std::to_string(trial) +
          "\nreport=" + surgery_json(sr).dump());
    undecided_total += sr.undecided_centers;
    deleted_frac.push(sr.deleted_fraction);
    measured_chi.push(sr.measured_local_chi);
    measured_max = std::max(measured_max, sr.measured_local_chi);
    result_chi_lower.push(sr.chi_lower_bound);
    add_sample(rep.histograms["deleted_count"], static_cast<long long>(sr.deleted.size()));
    add_sample(rep.histograms["measured_local_chi"], sr.measured_local_chi);
  }
  rep.metrics["guarantee"] = static_cast<double>(cfg.c);
  rep.metrics["max_degree_mean"] = max_deg.mean();
  rep.metrics["max_degree_max"] = max_deg.max();
  rep.metrics["max_ball_size_mean"] = ball_size.mean();
  rep.metrics["non_4_degenerate_balls"] = static_cast<double>(non4_total);
  rep.metrics["deleted_fraction_mean"] = deleted_frac.mean();
  rep.metrics["deleted_fraction_max"] = deleted_frac.max();
  rep.metrics["measured_local_chi_mean"] = measured_chi.mean();
  rep.metrics["measured_local_chi_max"] = static_cast<double>(measured_max);
  rep.metrics["undecided_centers_total"] = static_cast<double>(undecided_total);
  rep.metrics["result_chi_lower_mean"] = result_chi_lower.mean();
  rep.metrics["result_chi_lower_max"] = result_chi_lower.max();
  rep.intervals["surgery_verified"] = detail::interval_of(verified_ok, cfg.trials);
  return rep;
}

inline StatsReport run_max_degree_tail(const ExperimentConfig& cfg) {
  const auto m = detail::resolve_model(cfg, false);
  if (m.n > 20'000LL)
    throw std::invalid_argument("config: max_degree_tail materializes naive samples; keep n <= 20000");
  StatsReport rep;
  long long exceed = 0, exceed_naive = 0;
  const double bar = (1.0 + detail::kGrowthEpsilon) * m.d;
  RunningStats skip_stats, naive_stats;
  for (long long trial = 0; trial < cfg.trials; ++trial) {
    RngStream ts(cfg.seed, static_cast<std::uint64_t>(trial));
    RngStream ga = ts.child(0);
    Graph g = sample_gnp(static_cast<int>(m.n), m.p, ga);
    add_sample(rep.histograms["max_degree"], g.max_degree());
    skip_stats.push(g.max_degree());
    if (g.max_degree() > bar) ++exceed;
    RngStream gb = ts.child(1);
    Graph h = detail::naive_gnp(static_cast<int>(m.n), m.p, gb);
    add_sample(rep.histograms["max_degree_naive"], h.max_degree());
    naive_stats.push(h.max_degree());
    if (h.max_degree() > bar) ++exceed_naive;
  }
  rep.metrics["bar"] = bar;
  rep.metrics["max_degree_mean"] = skip_stats.mean();
  rep.metrics["max_degree_se"] =
      skip_stats.stddev() / std::sqrt(static_cast<double>(skip_stats.count()));
  rep.metrics["max_degree_mean_naive"] = naive_stats.mean();
  rep.metrics["max_degree_se_naive"] =
      naive_stats.stddev() / std::sqrt(static_cast<double>(naive_stats.count()));
  rep.metrics["tv_max_degree"] =
      total_variation(rep.histograms["max_degree"], rep.histograms["max_degree_naive"]);
  rep.intervals["frac_exceeds_bar"] = detail::interval_of(exceed, cfg.trials);
  rep.intervals["frac_exceeds_bar_naive"] = detail::interval_of(exceed_naive, cfg.trials);
  return rep;
}

inline StatsReport run_experiment(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  StatsReport rep;
  if (cfg.kind == "ball_degeneracy") rep = run_ball_degeneracy(cfg);
  else if (cfg.kind == "odd_cycle_R") rep = run_odd_cycle_R(cfg);
  else if (cfg.kind == "checker_soundness") rep = run_checker_soundness(cfg);
  else if (cfg.kind == "reveal_equivalence") rep = run_reveal_equivalence(cfg);
  else if (cfg.kind == "construction_pipeline") rep = run_construction_pipeline(cfg);
  else if (cfg.kind == "max_degree_tail") rep = run_max_degree_tail(cfg);
  else throw std::invalid_argument("config: unknown kind '" + cfg.kind + "'");
  rep.kind = cfg.kind;
  rep.config_echo = cfg.to_json();
  rep.trials = cfg.trials;
  rep.wall_clock_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return rep;
}

}  // namespace localcolor

#endif
