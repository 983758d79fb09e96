#ifndef LOCALCOLOR_JSON_IO_HPP
#define LOCALCOLOR_JSON_IO_HPP

#include <json.hpp>

#include "localcolor/ball.hpp"
#include "localcolor/checker.hpp"
#include "localcolor/constructions.hpp"
#include "localcolor/reveal.hpp"

namespace localcolor {

inline nlohmann::json pairs_json(const std::vector<std::pair<int, int>>& edges) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

inline nlohmann::json transcript_json(const RevealSession& s) {
  nlohmann::json j;
  j["n"] = s.n;
  j["p"] = s.p;
  j["radius"] = s.radius;
  j["master_seed"] = s.master_seed;
  j["stream_id"] = s.stream_id;
  j["levels"] = s.levels;
  nlohmann::json placed = nlohmann::json::array();
  for (int v = 0; v < s.n; ++v)
    if (s.level_of[static_cast<std::size_t>(v)] > 0)
      placed.push_back({v, s.level_of[static_cast<std::size_t>(v)], s.k_of[static_cast<std::size_t>(v)]});
  j["placed"] = placed;  // rows [vertex, level, k]
  nlohmann::json counted = nlohmann::json::array();
  for (int v = 0; v < s.n; ++v)
    if (s.t_of[static_cast<std::size_t>(v)] >= 0) counted.push_back({v, s.t_of[static_cast<std::size_t>(v)]});
  j["counted"] = counted;  // rows [vertex, t]
  j["edges"] = pairs_json(s.edges);
  j["tree_edges"] = pairs_json(s.tree_edges);
  j["remainder_edges"] = pairs_json(s.rem_edges);
  nlohmann::json inner = nlohmann::json::array();
  nlohmann::json down = nlohmann::json::array();
  for (std::size_t i = 0; i < s.inner_log.size(); ++i) {
    inner.push_back(pairs_json(s.inner_log[i]));
    down.push_back(pairs_json(s.down_log[i]));
  }
  j["inner_by_level"] = inner;
  j["down_by_level"] = down;
  return j;
}

inline nlohmann::json ball_json(const Ball& b) {
  nlohmann::json j;
  j["center"] = b.center;
  j["radius"] = b.radius;
  j["size"] = b.size();
  j["vertices"] = b.vertices;
  j["level_of"] = b.level_of;
  j["parent"] = b.parent;
  nlohmann::json sizes = nlohmann::json::array();
  for (const auto& level : b.levels) sizes.push_back(level.size());
  j["level_sizes"] = sizes;
  j["edge_count"] = b.subgraph.edge_count();
  j["tree_edges"] = pairs_json(b.tree_edges);
  j["remainder_edges"] = pairs_json(b.remainder_edges);
  return j;
}

inline nlohmann::json verdict_json(const CheckVerdict& v) {
  nlohmann::json j;
  j["answer"] = v.two_degenerate ? "yes" : "no";
  j["reason"] = check_reason_name(v.reason);
  j["reason_level"] = v.reason_level;
  j["cycle_witness"] = v.cycle_witness;
  j["d_used"] = v.d_used;
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& rec : v.levels) {
    levels.push_back({{"i", rec.level},
                      {"n_i", rec.size},
                      {"c_i", rec.cycles},
                      {"h_i", rec.horseshoes},
                      {"b_i", rec.threshold},
                      {"deleted", rec.deleted},
                      {"completed", rec.completed}});
  }
  j["per_level"] = levels;
  return j;
}

inline nlohmann::json paper_params_json(const PaperParams& pp) {
  nlohmann::json j;
  j["ell"] = pp.ell;
  j["r"] = pp.r;
  j["n"] = pp.n;
  j["p"] = pp.p;
  j["d"] = pp.d;
  j["capped"] = pp.capped;
  return j;
}

inline nlohmann::json bounds_json(const BoundsReport& b) {
  nlohmann::json j;
  j["ell"] = b.ell;
  j["c"] = b.c;
  j["r"] = b.r;
  j["bogdanov_lower"] = b.bogdanov_lower;
  j["f3_upper"] = b.f3_upper;
  j["fc_upper"] = b.fc_upper;
  j["fc1_lower_shape"] = b.fc1_lower_shape;
  return j;
}

inline nlohmann::json local5_json(const Local5Report& r) {
  nlohmann::json j;
  j["params"] = paper_params_json(r.params);
  j["radius"] = r.radius;
  j["centers_audited"] = r.centers_audited;
  j["max_degree"] = r.max_degree;
  j["max_ball_size"] = r.max_ball_size;
  j["non_4_degenerate_balls"] = r.non_4_degenerate_balls;
  j["alpha_upper"] = r.alpha_upper;
  j["alpha_exact"] = r.alpha_exact;
  j["chi_lower"] = r.chi_lower;
  j["n"] = r.graph.vertex_count();
  j["edges"] = r.graph.edge_count();
  return j;
}

inline nlohmann::json surgery_json(const SurgeryReport& r) {
  nlohmann::json j;
  j["radius"] = r.radius;
  j["guarantee"] = r.guarantee;
  j["input_n"] = r.input_n;
  j["kept"] = static_cast<long long>(r.kept.size());
  j["deleted"] = static_cast<long long>(r.deleted.size());
  j["deleted_vertices"] = r.deleted;
  j["deleted_fraction"] = r.deleted_fraction;
  j["verified"] = r.verified;
  j["measured_local_chi"] = r.measured_local_chi;
  j["undecided_centers"] = r.undecided_centers;
  j["alpha_upper"] = r.alpha_upper;
  j["alpha_exact"] = r.alpha_exact;
  j["chi_lower_bound"] = r.chi_lower_bound;
  j["result_edges"] = r.result.edge_count();
  return j;
}

}  // namespace localcolor

#endif
