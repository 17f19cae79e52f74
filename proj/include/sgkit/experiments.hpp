#ifndef SGKIT_EXPERIMENTS_HPP
#define SGKIT_EXPERIMENTS_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgkit/common.hpp"
#include "sgkit/double_oracle.hpp"
#include "sgkit/instance.hpp"
#include "sgkit/io.hpp"
#include "sgkit/nash.hpp"
#include "sgkit/random_games.hpp"
#include "sgkit/regret.hpp"
#include "sgkit/schedules.hpp"
#include "sgkit/stackelberg.hpp"

namespace sgkit {

// ---------------------------------------------------------------------------
// Sparsity sweep: support-bounded MILP values across k, normalized per
// the experiment conventions. U_norm is null (flagged) when the Nash and
// k=1 values coincide.

struct SparsityRow {
  int k = 0;
  double value = 0.0;
  double runtime_s = 0.0;
  std::optional<double> u_norm;
  double r_norm = 0.0;
  double k_norm = 0.0;
};

struct SparsityResult {
  double nash_value = 0.0;
  std::size_t nash_support = 0;
  std::vector<SparsityRow> rows;
};

inline SparsityResult sparsity_sweep(const Matrix& A, std::vector<int> ks = {}) {
  SolveReport nash = nash_lp(A);
  SparsityResult res;
  res.nash_value = nash.value;
  res.nash_support = nash.row_strategy.support_size();

  if (ks.empty())
    for (int k = 1; k <= static_cast<int>(A.size()); ++k) ks.push_back(k);
  std::sort(ks.begin(), ks.end());

  double u1 = 0.0;
  bool have_u1 = false;
  for (int k : ks) {
    SolveReport r = sparse_nash_milp(A, k);
    if (k == 1) {
      u1 = r.value;
      have_u1 = true;
    }
    res.rows.push_back({k, r.value, r.wall_time_s, std::nullopt, 0.0, 0.0});
  }
  if (!have_u1) u1 = sparse_nash_milp(A, 1).value;

  double r_min = kInf, r_max = -kInf;
  for (const auto& row : res.rows) {
    r_min = std::min(r_min, row.runtime_s);
    r_max = std::max(r_max, row.runtime_s);
  }
  const double denom = res.nash_value - u1;
  const double k_max_nash = static_cast<double>(std::max<std::size_t>(res.nash_support, 1));
  for (auto& row : res.rows) {
    if (std::abs(denom) > 1e-12) row.u_norm = (row.value - u1) / denom;
    row.r_norm = r_max > r_min ? (row.runtime_s - r_min) / (r_max - r_min) : 0.0;
    row.k_norm = row.k / k_max_nash;
  }
  return res;
}

inline void write_sparsity_csv(std::ostream& out, const SparsityResult& res) {
  out << "k,value,runtime_s,u_norm,r_norm,k_norm\n";
  for (const auto& r : res.rows) {
    out << r.k << ',' << format_double(r.value) << ',' << format_double(r.runtime_s) << ',';
    if (r.u_norm)
      out << format_double(*r.u_norm);
    else
      out << "null";
    out << ',' << format_double(r.r_norm) << ',' << format_double(r.k_norm) << '\n';
  }
}

// ---------------------------------------------------------------------------
// Convergence: gap traces of the four iterative algorithms on one
// zero-sum matrix.

struct ConvergenceResult {
  std::map<std::string, std::vector<GapSample>> traces;
  std::map<std::string, double> final_values;
};

inline ConvergenceResult convergence_experiment(const Matrix& A, long iterations = 10000,
                                                double runtime_cap_s = 120.0,
                                                long sample_interval = 5) {
  ConvergenceResult res;
  {
    MatrixOracleGame game(A);
    auto t0 = std::chrono::steady_clock::now();
    SolveReport dr = double_oracle(game);
    // DO terminates at the gap tolerance; log a single converged sample.
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.traces["do"] = {{dr.iterations, elapsed, 0.0}};
    res.final_values["do"] = dr.value;
  }
  const std::map<std::string, RegretVariant> variants{{"rm", RegretVariant::rm},
                                                      {"rm_plus", RegretVariant::rm_plus},
                                                      {"prm_plus", RegretVariant::prm_plus}};
  for (const auto& [name, variant] : variants) {
    RegretMatchingParams params;
    params.variant = variant;
    params.iterations = iterations;
    params.runtime_cap_s = runtime_cap_s;
    params.sample_interval = sample_interval;
    SolveReport r = regret_matching(A, params);
    res.traces[name] = r.gap_trace;
    res.final_values[name] = r.value;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Stackelberg comparison: the real general-sum schedule-form instance
// against randomized baselines, all solved through the expanded-NFG
// multiple-LP route.
//   rm  — resample the expanded payoff matrices uniformly in their
//         observed ranges.
//   rt  — resample target values within the real covered/uncovered range
//         (covered kept on the penalized side), keep schedules.
//   rts — rt plus randomized schedule assignments: per defender the same
//         schedule count, each schedule drawing ceil(mean real schedule
//         length) distinct targets.
struct SseCompareResult {
  SseRow real;
  std::vector<SseRow> baselines;  // one row per (kind, seed)
};

namespace detail {

inline ScheduleFormGame randomize_schedules(const ScheduleFormGame& real, RngStream& rng) {
  ScheduleFormGame out;
  out.targets = real.targets;
  double total_len = 0.0;
  long count = 0;
  double total_cost = 0.0;
  for (const auto& list : real.defender_schedules)
    for (const auto& s : list) {
      total_len += static_cast<double>(s.targets.size());
      total_cost += s.movement_cost;
      ++count;
    }
  const int sched_len =
      std::max(1, static_cast<int>(std::ceil(total_len / std::max<long>(count, 1))));
  const double mean_cost = count > 0 ? total_cost / count : 0.0;

  std::vector<int> nodes;
  for (const auto& t : real.targets) nodes.push_back(t.node_id);
  for (const auto& list : real.defender_schedules) {
    std::vector<Schedule> rand_list;
    for (std::size_t i = 0; i < list.size(); ++i) {
      Schedule s;
      int len = std::min<int>(sched_len, static_cast<int>(nodes.size()));
      for (std::size_t pick : rng.sample_without_replacement(nodes.size(), len))
        s.targets.push_back(nodes[pick]);
      std::sort(s.targets.begin(), s.targets.end());
      s.movement_cost = mean_cost;
      s.movement_steps = 0;
      rand_list.push_back(std::move(s));
    }
    out.defender_schedules.push_back(std::move(rand_list));
  }
  std::vector<std::vector<int>> index_lists;
  for (const auto& list : out.defender_schedules) {
    std::vector<int> idx(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) idx[i] = static_cast<int>(i);
    index_lists.push_back(std::move(idx));
  }
  out.joint_actions = detail::cartesian_product(index_lists);
  for (const auto& joint : out.joint_actions) {
    double cost = 0.0;
    for (std::size_t d = 0; d < joint.size(); ++d)
      cost += out.defender_schedules[d][joint[d]].movement_cost;
    out.joint_costs.push_back(cost);
  }
  return out;
}

inline SseRow solve_expanded_sse(const ScheduleFormGame& sfg, const std::string& name,
                                 const std::string& form) {
  BimatrixGame game = schedule_game_matrix(sfg, /*general_sum=*/true, /*normalize=*/false);
  SseResult r = sse_multiple_lp(game.defender, game.attacker);
  return {name, form, r.leader_value, r.runtime_s, static_cast<double>(r.support_size)};
}

}  // namespace detail

inline SseCompareResult sse_compare(const ScheduleFormGame& real_sfg, int num_baseline_seeds,
                                    std::uint64_t seed,
                                    const std::vector<std::string>& kinds = {"rm", "rt", "rts"}) {
  SseCompareResult res;
  res.real = detail::solve_expanded_sse(real_sfg, "real", "general");

  BimatrixGame real_game = schedule_game_matrix(real_sfg, true, false);
  double a_lo = kInf, a_hi = -kInf, d_lo = kInf, d_hi = -kInf;
  for (const auto& row : real_game.attacker)
    for (double v : row) {
      a_lo = std::min(a_lo, v);
      a_hi = std::max(a_hi, v);
    }
  for (const auto& row : real_game.defender)
    for (double v : row) {
      d_lo = std::min(d_lo, v);
      d_hi = std::max(d_hi, v);
    }

  for (std::size_t kid = 0; kid < kinds.size(); ++kid) {
    const std::string& kind = kinds[kid];
    for (int s = 0; s < num_baseline_seeds; ++s) {
      RngStream rng = RngStream::derive(seed, (kid + 1) * 1000003ULL + s);
      SseRow row;
      if (kind == "rm") {
        BimatrixGame g = real_game;
        for (auto& r : g.defender)
          for (double& v : r) v = rng.uniform(d_lo, d_hi);
        for (auto& r : g.attacker)
          for (double& v : r) v = rng.uniform(a_lo, a_hi);
        SseResult sr = sse_multiple_lp(g.defender, g.attacker);
        row = {"rm#" + std::to_string(s), "general", sr.leader_value, sr.runtime_s,
               static_cast<double>(sr.support_size)};
      } else if (kind == "rt") {
        ScheduleFormGame g = real_sfg;
        g.targets = randomize_target_values(real_sfg.targets, rng);
        row = detail::solve_expanded_sse(g, "rt#" + std::to_string(s), "general");
      } else if (kind == "rts") {
        ScheduleFormGame g = detail::randomize_schedules(real_sfg, rng);
        g.targets = randomize_target_values(real_sfg.targets, rng);
        row = detail::solve_expanded_sse(g, "rts#" + std::to_string(s), "general");
      } else {
        throw std::invalid_argument("sse_compare: unknown baseline kind " + kind);
      }
      res.baselines.push_back(std::move(row));
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Random-game laboratory reports.

inline json degeneracy_report_to_json(const DegeneracyReport& r) {
  return {{"n", r.n},
          {"num_samples", r.num_samples},
          {"seed", r.seed},
          {"mean_support", r.mean_support},
          {"median_support", r.median_support},
          {"support_q25", r.support_q25},
          {"support_q75", r.support_q75},
          {"support_q90", r.support_q90},
          {"mean_leader_value", r.mean_leader_value},
          {"mean_best_pure", r.mean_best_pure}};
}

inline void write_degeneracy_csv(std::ostream& out, const DegeneracyReport& r) {
  out << "sample,sse_support,sse_leader_value,best_pure_value\n";
  for (int s = 0; s < r.num_samples; ++s)
    out << s << ',' << r.sse_support_sizes[s] << ',' << format_double(r.sse_leader_values[s])
        << ',' << format_double(r.best_pure_values[s]) << '\n';
}

}  // namespace sgkit

#endif  // SGKIT_EXPERIMENTS_HPP
