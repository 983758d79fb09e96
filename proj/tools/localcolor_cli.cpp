#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "localcolor/localcolor.hpp"

namespace lc = localcolor;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitInvariant = 3;

lc::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return lc::parse_graph(buf.str());
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

// --ell/--r pick the parameter family; --n/--p override it directly.
struct ModelArgs {
  int ell = 0;
  int r = 1;
  long long scale_cap = 0;
  long long n = -1;
  double p = -1.0;

  void attach(CLI::App* cmd, bool radius_too = true) {
    cmd->add_option("--ell", ell, "locality target, >= 2");
    if (radius_too) cmd->add_option("--r", r, "ball radius")->check(CLI::Range(1, 64));
    cmd->add_option("--scale-cap", scale_cap, "cap on n; density rescaled to keep n*p");
    cmd->add_option("--n", n, "vertex count (overrides --ell)");
    cmd->add_option("--p", p, "edge probability, with --n");
  }

  lc::PaperParams resolve() const {
    if (n >= 0 || p >= 0.0) {
      if (n < 1 || p < 0.0 || p > 1.0)
        throw std::invalid_argument("--n and --p must be given together, n >= 1, p in [0,1]");
      return lc::PaperParams{ell, r, n, p, static_cast<double>(n) * p, false};
    }
    if (ell < 2) throw std::invalid_argument("need --ell (or --n with --p)");
    return lc::paper_parameters(ell, r, scale_cap);
  }
};

int cmd_gen(const ModelArgs& model, std::uint64_t seed, const std::string& out) {
  const lc::PaperParams pp = model.resolve();
  if (pp.n > 50'000'000LL) throw std::invalid_argument("n too large; use --scale-cap");
  lc::RngStream rng(seed, 0);
  lc::Graph g = lc::sample_gnp(static_cast<int>(pp.n), pp.p, rng);
  write_text(out, lc::serialize_graph(g));
  return kExitOk;
}

int cmd_analyze(const std::string& path, int radius, std::int64_t node_limit) {
  lc::Graph g = load_graph(path);
  const lc::SolverBudget budget{node_limit};
  bool undecided = false;

  lc::ChromaticResult chi = lc::chromatic_number(g, budget);
  if (chi.feasibility == lc::Feasibility::yes)
    std::cout << "chi = " << chi.value << "\n";
  else {
    std::cout << "chi in [" << chi.lower_bound << ", " << chi.upper_bound << "] (undecided)\n";
    undecided = true;
  }

  std::cout << "degeneracy = " << lc::degeneracy(g).degeneracy << "\n";

  lc::IndependenceResult alpha = lc::independence_number(g, lc::AlphaMode::exact, budget);
  if (alpha.feasibility == lc::Feasibility::yes)
    std::cout << "alpha = " << alpha.value << "\n";
  else {
    std::cout << "alpha >= " << alpha.value << " (undecided)\n";
    undecided = true;
  }

  lc::LocalChromaticResult loc = lc::local_chromatic_number(g, radius, budget);
  if (loc.feasibility == lc::Feasibility::yes)
    std::cout << "local_chi_" << radius << " = " << loc.value
              << " (worst center " << loc.worst_center << ")\n";
  else {
    std::cout << "local_chi_" << radius << " undecided at center " << loc.undecided_center << "\n";
    undecided = true;
  }
  return undecided ? kExitUndecided : kExitOk;
}

int cmd_bounds(int ell, int c, int r) {
  const lc::BoundsReport b = lc::bounds(ell, c, r);
  std::cout << "ell = " << b.ell << ", c = " << b.c << ", r = " << b.r << "\n";
  const auto line = [](const char* name, double v) {
    std::cout << name << " = " << nlohmann::json(v).dump() << "\n";
  };
  line("bogdanov_lower", b.bogdanov_lower);
  line("f3_upper", b.f3_upper);
  line("fc_upper", b.fc_upper);
  line("fc1_lower_shape", b.fc1_lower_shape);
  return kExitOk;
}

int cmd_check(const ModelArgs& model, std::uint64_t seed,
              const std::string& schedule, const std::string& degree_model) {
  const lc::PaperParams pp = model.resolve();
  if (pp.n > 50'000'000LL) throw std::invalid_argument("n too large; use --scale-cap");
  lc::CheckerParams params;
  params.ell = pp.ell >= 2 ? pp.ell : 3;
  params.schedule = schedule == "large_r" ? lc::Schedule::large_r : lc::Schedule::fixed_r;
  params.degree_model = degree_model == "formula" ? lc::DegreeModel::formula
                                                  : lc::DegreeModel::session_mean;
  lc::RngStream rng(seed, 0);
  lc::RevealSession session = lc::begin_reveal(static_cast<int>(pp.n), pp.p, pp.r, rng);
  lc::CheckVerdict verdict = lc::check_two_degenerate(session, params);
  lc::finish_reveal(session);
  lc::Ball b = lc::reveal_to_ball(session);
  nlohmann::json j = lc::verdict_json(verdict);
  j["ball_size"] = b.size();
  j["ball_two_degenerate"] = lc::is_k_degenerate(b.subgraph, 2);
  std::cout << j.dump(2) << "\n";
  if (verdict.two_degenerate && !lc::is_k_degenerate(b.subgraph, 2)) {
    std::cerr << "yes verdict on a ball peeling rejects\n";
    return kExitInvariant;
  }
  return kExitOk;
}

int cmd_construct(const std::string& what, const ModelArgs& model, std::uint64_t seed,
                  const std::string& in, const std::string& out, int k,
                  std::int64_t node_limit, bool measure) {
  if (what == "clique-expand") {
    if (in.empty()) throw std::invalid_argument("clique-expand needs --in");
    lc::Graph g = load_graph(in);
    write_text(out, lc::serialize_graph(lc::clique_expand(g, k)));
    return kExitOk;
  }
  if (what == "local5") {
    const lc::PaperParams pp = model.resolve();
    lc::RngStream rng(seed, 0);
    lc::Local5Report rep = lc::construct_local5(pp, rng);
    std::cout << lc::local5_json(rep).dump(2) << "\n";
    if (!out.empty()) write_text(out, lc::serialize_graph(rep.graph));
    return kExitOk;
  }
  if (what != "local3" && what != "local4")
    throw std::invalid_argument("--what must be local5, local4, local3 or clique-expand");

  lc::Graph g;
  int radius = model.r;
  if (!in.empty()) {
    g = load_graph(in);
  } else {
    const lc::PaperParams pp = model.resolve();
    if (pp.n > 50'000'000LL) throw std::invalid_argument("n too large; use --scale-cap");
    lc::RngStream rng(seed, 0);
    g = lc::sample_gnp(static_cast<int>(pp.n), pp.p, rng);
    radius = pp.r;
  }
  lc::SurgeryOptions opt;
  opt.measure_local_chi = measure;
  opt.budget = lc::SolverBudget{node_limit};
  lc::SurgeryReport rep = what == "local3" ? lc::surgery_local3(g, radius, opt)
                                           : lc::surgery_local4(g, radius, opt);
  std::cout << lc::surgery_json(rep).dump(2) << "\n";
  if (!out.empty()) write_text(out, lc::serialize_graph(rep.result));
  if (!rep.verified) {
    std::cerr << "survivor certificate failed\n";
    return kExitInvariant;
  }
  if (measure && rep.undecided_centers > 0) return kExitUndecided;
  return kExitOk;
}

int cmd_mc(const std::string& config_path, const std::string& format) {
  std::ifstream in(config_path);
  if (!in) throw std::invalid_argument("cannot open '" + config_path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config parse error: " + std::string(e.what()));
  }
  const lc::ExperimentConfig cfg = lc::ExperimentConfig::from_json(j);
  const lc::StatsReport rep = lc::run_experiment(cfg);
  const std::string text =
      format == "csv" ? rep.to_csv() : rep.to_json().dump(2) + "\n";
  write_text(cfg.out, text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local coloring toolkit"};
  app.require_subcommand(1);

  ModelArgs gen_model;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "sample a seeded random graph");
  gen_model.attach(gen);
  gen->add_option("--seed", gen_seed, "master seed");
  gen->add_option("--out", gen_out, "output path, '-' = stdout");

  std::string analyze_path;
  int analyze_r = 1;
  std::int64_t analyze_budget = lc::SolverBudget{}.node_limit;
  CLI::App* analyze = app.add_subcommand("analyze", "exact statistics of a graph file");
  analyze->add_option("file", analyze_path, "edge-list file")->required();
  analyze->add_option("--r", analyze_r, "ball radius")->check(CLI::Range(0, 64));
  analyze->add_option("--budget", analyze_budget, "search-node limit per solve");

  std::string construct_what = "local5";
  ModelArgs construct_model;
  std::uint64_t construct_seed = 0;
  std::string construct_in, construct_out;
  int construct_k = 2;
  std::int64_t construct_budget = lc::SolverBudget{}.node_limit;
  bool construct_measure = false;
  CLI::App* construct = app.add_subcommand("construct", "build and audit constructions");
  construct->add_option("--what", construct_what, "local5 | local4 | local3 | clique-expand");
  construct_model.attach(construct);
  construct->add_option("--seed", construct_seed, "master seed");
  construct->add_option("--in", construct_in, "input graph (skips sampling)");
  construct->add_option("--out", construct_out, "write the resulting graph here");
  construct->add_option("--k", construct_k, "clique size for clique-expand")->check(CLI::Range(1, 64));
  construct->add_option("--budget", construct_budget, "search-node limit per solve");
  construct->add_flag("--measure", construct_measure, "exact local chromatic number of the result");

  ModelArgs check_model;
  std::uint64_t check_seed = 0;
  std::string check_schedule = "fixed_r";
  std::string check_degree_model = "session_mean";
  CLI::App* check = app.add_subcommand("check", "two-degeneracy check of one seeded ball");
  check_model.attach(check);
  check->add_option("--seed", check_seed, "master seed");
  check->add_option("--schedule", check_schedule, "fixed_r | large_r")
      ->check(CLI::IsMember({"fixed_r", "large_r"}));
  check->add_option("--degree-model", check_degree_model, "session_mean | formula")
      ->check(CLI::IsMember({"session_mean", "formula"}));

  std::string mc_config;
  std::string mc_format = "json";
  CLI::App* mc = app.add_subcommand("mc", "run a Monte Carlo campaign from a config file");
  mc->add_option("config", mc_config, "JSON config")->required();
  mc->add_option("--format", mc_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  int bounds_ell = 0, bounds_c = 0, bounds_r = 0;
  CLI::App* bounds = app.add_subcommand("bounds", "closed-form bound table");
  bounds->add_option("--ell", bounds_ell)->required();
  bounds->add_option("--c", bounds_c)->required();
  bounds->add_option("--r", bounds_r)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_model, gen_seed, gen_out);
    if (analyze->parsed()) return cmd_analyze(analyze_path, analyze_r, analyze_budget);
    if (construct->parsed())
      return cmd_construct(construct_what, construct_model, construct_seed, construct_in,
                           construct_out, construct_k, construct_budget, construct_measure);
    if (check->parsed())
      return cmd_check(check_model, check_seed, check_schedule, check_degree_model);
    if (mc->parsed()) return cmd_mc(mc_config, mc_format);
    if (bounds->parsed()) return cmd_bounds(bounds_ell, bounds_c, bounds_r);
  } catch (const lc::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
