// Command-line front end: instance generation, solving, experiment
// sweeps, and Gambit export. Exit codes: 0 success, 2 config error,
// 3 solver failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sgkit/double_oracle.hpp"
#include "sgkit/experiments.hpp"
#include "sgkit/instance.hpp"
#include "sgkit/io.hpp"
#include "sgkit/nash.hpp"
#include "sgkit/random_games.hpp"
#include "sgkit/regret.hpp"
#include "sgkit/stackelberg.hpp"

namespace fs = std::filesystem;
using sgkit::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  if (fs::path(path).has_parent_path()) fs::create_directories(fs::path(path).parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

template <typename T>
T require(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw ConfigError(where + ": missing required key '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const std::exception&) {
    throw ConfigError(where + "." + key + ": wrong type");
  }
}

sgkit::BoundingBox bbox_from_json(const json& j, const std::string& where) {
  sgkit::BoundingBox b;
  b.lat_min = require<double>(j, "lat_min", where);
  b.lat_max = require<double>(j, "lat_max", where);
  b.lon_min = require<double>(j, "lon_min", where);
  b.lon_max = require<double>(j, "lon_max", where);
  try {
    b.validate();
  } catch (const std::exception& e) {
    throw ConfigError(where + ": " + e.what());
  }
  return b;
}

std::vector<std::vector<sgkit::Coord>> bases_from_json(const json& j, const std::string& where) {
  std::vector<std::vector<sgkit::Coord>> out;
  for (const auto& defender : j) {
    std::vector<sgkit::Coord> bases;
    for (const auto& b : defender)
      bases.push_back({b.at(0).get<double>(), b.at(1).get<double>()});
    out.push_back(std::move(bases));
  }
  return out;
}

sgkit::GameInstance generate_from_config(const json& cfg, std::uint64_t seed) {
  std::string domain = require<std::string>(cfg, "domain", "config");
  if (domain == "gsg") {
    sgkit::GsgParams p;
    p.bbox = bbox_from_json(cfg.at("bbox"), "config.bbox");
    p.scoring = cfg.value("scoring", "centroid");
    p.num_clusters = cfg.value("num_clusters", 10);
    p.rows = require<int>(cfg, "rows", "config");
    p.cols = require<int>(cfg, "cols", "config");
    if (cfg.contains("escape_line")) {
      const auto& el = cfg.at("escape_line");
      p.escape_line = {{el.at(0).at(0).get<double>(), el.at(0).at(1).get<double>()},
                       {el.at(1).at(0).get<double>(), el.at(1).at(1).get<double>()}};
    }
    p.alpha_escape = cfg.value("alpha_escape", 1.0);
    p.attacker_value_scale = cfg.value("attacker_value_scale", 1.0);
    p.defender_value_scale = cfg.value("defender_value_scale", 1.0);
    p.attacker_penalty_factor = cfg.value("attacker_penalty_factor", 1.0);
    p.defender_penalty_factor = cfg.value("defender_penalty_factor", 1.0);
    p.home_bases = bases_from_json(cfg.at("home_bases"), "config.home_bases");
    p.num_attackers = cfg.value("num_attackers", 1);
    p.num_defenders = cfg.value("num_defenders", 1);
    p.num_timesteps = require<int>(cfg, "num_timesteps", "config");
    p.defense_time_threshold = cfg.value("defense_time_threshold", 1);
    p.capture_radius = cfg.value("capture_radius", 0.0);
    p.allow_wait = cfg.value("allow_wait", true);
    p.force_return = cfg.value("force_return", false);
    p.general_sum = cfg.value("general_sum", false);
    p.schedule_form = cfg.value("schedule_form", false);
    p.simple_schedules = cfg.value("simple", false);
    p.defender_step_cost = cfg.value("defender_step_cost", 0.0);
    p.randomize_target_values = cfg.value("randomize_target_values", false);
    p.build_matrices = cfg.value("build_matrices", true);
    sgkit::TrackDataset tracks =
        sgkit::load_tracks_csv_file(require<std::string>(cfg, "tracks_csv", "config"));
    return sgkit::generate_gsg(tracks, p, seed);
  }
  if (domain == "isg") {
    sgkit::IsgParams p;
    p.bbox = bbox_from_json(cfg.at("bbox"), "config.bbox");
    std::string mode = cfg.value("mode", "block");
    if (mode != "block" && mode != "radius")
      throw ConfigError("config.mode: must be 'block' or 'radius'");
    p.mode = mode == "block" ? sgkit::PopulationMode::block : sgkit::PopulationMode::radius;
    p.radius_m = cfg.value("radius_m", 200.0);
    p.alpha_pop = cfg.value("alpha_pop", 1.0);
    if (cfg.contains("escape_point")) {
      const auto& ep = cfg.at("escape_point");
      p.escape_point = sgkit::Coord{ep.at(0).get<double>(), ep.at(1).get<double>()};
    }
    p.alpha_escape = cfg.value("alpha_escape", 0.5);
    p.attacker_value_scale = cfg.value("attacker_value_scale", 1.0);
    p.defender_value_scale = cfg.value("defender_value_scale", 1.0);
    p.attacker_penalty_factor = cfg.value("attacker_penalty_factor", 1.0);
    p.defender_penalty_factor = cfg.value("defender_penalty_factor", 1.0);
    p.home_bases = bases_from_json(cfg.at("home_bases"), "config.home_bases");
    p.num_attackers = cfg.value("num_attackers", 1);
    p.num_defenders = cfg.value("num_defenders", 1);
    p.num_timesteps = require<int>(cfg, "num_timesteps", "config");
    p.defense_time_threshold = cfg.value("defense_time_threshold", 1);
    p.allow_wait = cfg.value("allow_wait", true);
    p.force_return = cfg.value("force_return", true);
    p.general_sum = cfg.value("general_sum", false);
    p.schedule_form = cfg.value("schedule_form", false);
    p.simple_schedules = cfg.value("simple", false);
    p.defender_step_cost = cfg.value("defender_step_cost", 0.0);
    p.randomize_target_values = cfg.value("randomize_target_values", false);
    p.build_matrices = cfg.value("build_matrices", true);

    sgkit::FeatureDataset features =
        sgkit::load_features_csv_file(require<std::string>(cfg, "features_csv", "config"));
    json wj = cfg.contains("weights_file")
                  ? load_json_file(cfg.at("weights_file").get<std::string>())
                  : cfg.at("weights");
    features.weights = sgkit::weights_from_json(wj);
    // Every retained feature type needs a weight; name the first missing one.
    for (const auto& f : features.records) {
      if (!p.bbox.contains(f.lat, f.lon)) continue;
      if (!features.weights.count(f.type))
        throw ConfigError("config.weights: missing weight for feature type '" + f.type + "'");
    }
    sgkit::PopulationBlocks blocks = sgkit::blocks_from_json(
        load_json_file(require<std::string>(cfg, "blocks_json", "config")));
    sgkit::DirectedGameGraph street = sgkit::graph_from_json(
        load_json_file(require<std::string>(cfg, "street_graph_json", "config")));
    return sgkit::generate_isg(features, blocks, std::move(street), p, seed);
  }
  throw ConfigError("config.domain: must be 'gsg' or 'isg'");
}

json solve_report_to_json(const sgkit::SolveReport& r) {
  json gaps = json::array();
  for (const auto& g : r.gap_trace)
    gaps.push_back({{"iteration", g.iteration}, {"time_s", g.time_s}, {"gap", g.gap}});
  return {{"value", r.value},
          {"row_strategy", r.row_strategy.probs},
          {"col_strategy", r.col_strategy.probs},
          {"row_support", r.row_strategy.support_size()},
          {"iterations", r.iterations},
          {"wall_time_s", r.wall_time_s},
          {"stop_reason", r.stop_reason},
          {"gap_trace", gaps}};
}

sgkit::Matrix zero_sum_matrix(const sgkit::GameInstance& inst) {
  if (!inst.matrices) throw ConfigError("game file has no matrices; regenerate with build_matrices");
  return inst.matrices->defender;
}

int cmd_generate(const std::string& config_path, const std::string& out_path,
                 const std::string& format, std::uint64_t seed) {
  json cfg = load_json_file(config_path);
  sgkit::GameInstance inst = generate_from_config(cfg, seed);

  std::size_t actions = inst.matrices ? inst.matrices->rows()
                        : inst.sfg    ? inst.sfg->num_joint_actions()
                                      : 0;
  std::cout << "nodes=" << inst.graph.num_nodes() << " targets=" << inst.targets.size()
            << " defender_actions=" << actions << "\n";

  write_text_file(out_path, sgkit::instance_to_json(inst).dump(2) + "\n");
  if (format == "nfg") {
    if (!inst.matrices) throw ConfigError("nfg output needs build_matrices=true");
    std::string nfg_path = out_path + ".nfg";
    write_text_file(nfg_path, sgkit::nfg_to_string(*inst.matrices));
    std::cout << "wrote " << nfg_path << "\n";
  }
  std::cout << "wrote " << out_path << "\n";
  return kExitOk;
}

int cmd_solve(const std::string& game_path, const std::string& solver,
              const std::string& out_path, const std::string& format, int k, long iterations) {
  sgkit::GameInstance inst = sgkit::instance_from_json(load_json_file(game_path));
  sgkit::SolveReport report;
  json extra;

  if (solver == "nash_lp") {
    report = sgkit::nash_lp(zero_sum_matrix(inst));
  } else if (solver == "sparse_milp") {
    report = sgkit::sparse_nash_milp(zero_sum_matrix(inst), k);
  } else if (solver == "do_nfg") {
    if (inst.schedule_form) throw ConfigError("do_nfg needs a normal-form game");
    sgkit::NfgOracleContext ctx{inst.graph, inst.config, inst.targets};
    sgkit::SecurityNfgOracleGame game(ctx);
    report = sgkit::double_oracle(game);
  } else if (solver == "do_sfg") {
    if (!inst.sfg) throw ConfigError("do_sfg needs a schedule-form game");
    sgkit::SecuritySfgOracleGame game(*inst.sfg);
    report = sgkit::double_oracle(game);
  } else if (solver == "rm" || solver == "rm_plus" || solver == "prm_plus") {
    sgkit::RegretMatchingParams params;
    params.variant = solver == "rm"        ? sgkit::RegretVariant::rm
                     : solver == "rm_plus" ? sgkit::RegretVariant::rm_plus
                                           : sgkit::RegretVariant::prm_plus;
    if (iterations > 0) params.iterations = iterations;
    report = sgkit::regret_matching(zero_sum_matrix(inst), params);
  } else if (solver == "sse_general") {
    if (!inst.matrices) throw ConfigError("sse_general needs matrices");
    sgkit::SseResult r = sgkit::sse_multiple_lp(inst.matrices->defender, inst.matrices->attacker);
    report.value = r.leader_value;
    report.row_strategy = r.leader;
    report.wall_time_s = r.runtime_s;
    report.stop_reason = "optimal";
    extra = {{"follower_action", r.follower_action},
             {"support", r.support_size},
             {"tied_columns", r.tied_columns}};
  } else if (solver == "sse_simple") {
    if (!inst.schedule_form || !inst.simple_schedules_only)
      throw ConfigError("sse_simple needs a singleton-schedule game");
    sgkit::CoverageSseResult r =
        sgkit::sse_simple_schedules(inst.targets, inst.config.moving_defenders);
    report.value = r.defender_value;
    report.row_strategy.probs = r.coverage;  // coverage vector, not a simplex point
    report.wall_time_s = r.runtime_s;
    report.stop_reason = "optimal";
    extra = {{"attacked_target", inst.targets[r.attacked_target].node_id},
             {"support", r.support_size}};
  } else {
    throw ConfigError("unknown solver: " + solver);
  }

  json out = solve_report_to_json(report);
  if (!extra.is_null()) out["sse"] = extra;
  if (format == "csv") {
    std::ostringstream ss;
    sgkit::write_gap_trace_csv(ss, report.gap_trace);
    write_text_file(out_path, ss.str());
  } else {
    write_text_file(out_path, out.dump(2) + "\n");
  }
  std::cout << "value=" << sgkit::format_double(report.value) << "\n";
  std::cout << "wrote " << out_path << "\n";
  return kExitOk;
}

int cmd_experiment(const std::string& kind, const std::string& config_path,
                   const std::string& out_dir, std::uint64_t seed) {
  json cfg = load_json_file(config_path);
  fs::create_directories(out_dir);

  if (kind == "sparsity") {
    sgkit::GameInstance inst =
        sgkit::instance_from_json(load_json_file(require<std::string>(cfg, "game", "config")));
    sgkit::SparsityResult res = sgkit::sparsity_sweep(zero_sum_matrix(inst));
    std::ostringstream ss;
    sgkit::write_sparsity_csv(ss, res);
    write_text_file(out_dir + "/sparsity.csv", ss.str());
    json summary{{"nash_value", res.nash_value}, {"nash_support", res.nash_support}};
    write_text_file(out_dir + "/summary.json", summary.dump(2) + "\n");
  } else if (kind == "convergence") {
    sgkit::GameInstance inst =
        sgkit::instance_from_json(load_json_file(require<std::string>(cfg, "game", "config")));
    sgkit::ConvergenceResult res = sgkit::convergence_experiment(
        zero_sum_matrix(inst), cfg.value("iterations", 10000), cfg.value("runtime_cap_s", 120.0),
        cfg.value("sample_interval", 5));
    for (const auto& [name, trace] : res.traces) {
      std::ostringstream ss;
      sgkit::write_gap_trace_csv(ss, trace);
      write_text_file(out_dir + "/" + name + "_gap.csv", ss.str());
    }
    json summary;
    for (const auto& [name, value] : res.final_values) summary[name] = value;
    write_text_file(out_dir + "/summary.json", summary.dump(2) + "\n");
  } else if (kind == "sse_compare") {
    sgkit::GameInstance inst =
        sgkit::instance_from_json(load_json_file(require<std::string>(cfg, "game", "config")));
    if (!inst.sfg) throw ConfigError("sse_compare needs a schedule-form game");
    sgkit::SseCompareResult res =
        sgkit::sse_compare(*inst.sfg, cfg.value("num_baseline_seeds", 10), seed);
    std::vector<sgkit::SseRow> rows{res.real};
    rows.insert(rows.end(), res.baselines.begin(), res.baselines.end());
    std::ostringstream ss;
    sgkit::write_sse_rows_csv(ss, rows);
    write_text_file(out_dir + "/sse_compare.csv", ss.str());
  } else if (kind == "random_lab") {
    int n = cfg.value("n", 20);
    int samples = cfg.value("num_samples", 200);
    sgkit::DegeneracyReport report = sgkit::degeneracy_report(n, samples, seed);
    std::ostringstream ss;
    sgkit::write_degeneracy_csv(ss, report);
    write_text_file(out_dir + "/degeneracy.csv", ss.str());
    write_text_file(out_dir + "/summary.json",
                    sgkit::degeneracy_report_to_json(report).dump(2) + "\n");
  } else {
    throw ConfigError("unknown experiment kind: " + kind);
  }
  std::cout << "wrote " << out_dir << "\n";
  return kExitOk;
}

int cmd_export(const std::string& game_path, const std::string& out_path,
               const std::string& title) {
  sgkit::GameInstance inst = sgkit::instance_from_json(load_json_file(game_path));
  if (!inst.matrices) throw ConfigError("export needs matrices; regenerate with build_matrices");
  write_text_file(out_path, sgkit::nfg_to_string(*inst.matrices, title));
  std::cout << "wrote " << out_path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"security-game instance generation and equilibrium solving"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string config_path, out_path = "out.json", format = "json", solver = "nash_lp";
  app.add_option("--seed", seed, "random seed (streams derive from it)");

  auto* gen = app.add_subcommand("generate", "build a game instance from a config file");
  gen->add_option("--config", config_path, "JSON config")->required();
  gen->add_option("--out", out_path, "output game JSON path");
  gen->add_option("--format", format, "json or nfg (nfg adds a .nfg next to the JSON)");

  std::string game_path;
  int sparse_k = 1;
  long iterations = 0;
  auto* solve = app.add_subcommand("solve", "solve a generated game");
  solve->add_option("--game", game_path, "game JSON file")->required();
  solve->add_option("--solver", solver,
                    "nash_lp|sparse_milp|do_nfg|do_sfg|rm|rm_plus|prm_plus|sse_general|sse_simple");
  solve->add_option("--k", sparse_k, "support bound for sparse_milp");
  solve->add_option("--iterations", iterations, "iteration cap for rm family");
  solve->add_option("--out", out_path, "result path");
  solve->add_option("--format", format, "json or csv (csv writes the gap trace)");

  std::string kind, out_dir = "experiment_out";
  auto* exp = app.add_subcommand("experiment", "run an experiment sweep");
  exp->add_option("--kind", kind, "sparsity|convergence|sse_compare|random_lab")->required();
  exp->add_option("--config", config_path, "JSON config")->required();
  exp->add_option("--out", out_dir, "output directory");

  std::string title = "game";
  auto* exp_nfg = app.add_subcommand("export", "export a game's matrices as Gambit .nfg");
  exp_nfg->add_option("--game", game_path, "game JSON file")->required();
  exp_nfg->add_option("--out", out_path, "output .nfg path");
  exp_nfg->add_option("--title", title, "nfg title string");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_generate(config_path, out_path, format, seed);
    if (solve->parsed())
      return cmd_solve(game_path, solver, out_path, format, sparse_k, iterations);
    if (exp->parsed()) return cmd_experiment(kind, config_path, out_dir, seed);
    if (exp_nfg->parsed()) return cmd_export(game_path, out_path, title);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  }
  return kExitOk;
}
