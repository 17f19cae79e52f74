#ifndef SGKIT_DOUBLE_ORACLE_HPP
#define SGKIT_DOUBLE_ORACLE_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "sgkit/evaluate.hpp"
#include "sgkit/game_types.hpp"
#include "sgkit/mip.hpp"
#include "sgkit/nash.hpp"
#include "sgkit/paths.hpp"
#include "sgkit/schedules.hpp"

namespace sgkit {

constexpr double kDoubleOracleEps = 1e-12;

/// Best-response interface for the double oracle loop. Actions are
/// identified by integer-vector keys; payoff(row, col) is the row
/// (defender) utility of the zero-sum game.
struct OracleGame {
  using ActionKey = std::vector<int>;
  virtual ~OracleGame() = default;
  virtual ActionKey initial_row_action() const = 0;
  virtual ActionKey initial_col_action() const = 0;
  virtual double payoff(const ActionKey& row, const ActionKey& col) const = 0;
  /// Best row action against a mixed strategy over `cols`; returns the
  /// action and its expected row payoff.
  virtual std::pair<ActionKey, double> row_best_response(
      const std::vector<ActionKey>& cols, const std::vector<double>& y) const = 0;
  /// Best col action against a mixed strategy over `rows`; returns the
  /// action and its expected *column-player* payoff (negated row payoff).
  virtual std::pair<ActionKey, double> col_best_response(
      const std::vector<ActionKey>& rows, const std::vector<double>& x) const = 0;
};

/// Standard double oracle: restricted-game Nash via LP, expand with both
/// best responses, stop when neither improves by more than eps. The
/// returned strategies live on the restricted action sets discovered.
inline SolveReport double_oracle(const OracleGame& game, double eps = kDoubleOracleEps,
                                 long max_iterations = 10000) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<OracleGame::ActionKey> rows{game.initial_row_action()};
  std::vector<OracleGame::ActionKey> cols{game.initial_col_action()};
  std::set<OracleGame::ActionKey> row_set(rows.begin(), rows.end());
  std::set<OracleGame::ActionKey> col_set(cols.begin(), cols.end());

  Matrix U{{game.payoff(rows[0], cols[0])}};
  SolveReport restricted;
  long iter = 0;
  std::string stop = "max_iterations";
  while (iter < max_iterations) {
    ++iter;
    restricted = nash_lp(U);
    auto [row_br, row_val] = game.row_best_response(cols, restricted.col_strategy.probs);
    auto [col_br, col_val] = game.col_best_response(rows, restricted.row_strategy.probs);

    double upper = row_val;         // defender can guarantee at most this vs current y
    double lower = -col_val;        // and at least this vs attacker's best response
    bool row_new = !row_set.count(row_br);
    bool col_new = !col_set.count(col_br);
    bool improving = (upper - restricted.value > eps) || (restricted.value - lower > eps);
    if (!improving || (!row_new && !col_new)) {
      stop = "converged";
      break;
    }
    if (row_new) {
      row_set.insert(row_br);
      rows.push_back(row_br);
      U.emplace_back(cols.size());
      for (std::size_t j = 0; j < cols.size(); ++j) U.back()[j] = game.payoff(row_br, cols[j]);
    }
    if (col_new) {
      col_set.insert(col_br);
      cols.push_back(col_br);
      for (std::size_t i = 0; i < rows.size(); ++i)
        U[i].push_back(game.payoff(rows[i], cols.back()));
    }
  }

  SolveReport report = restricted;
  report.iterations = iter;
  report.stop_reason = stop;
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

/// Plain matrix adapter: oracles scan rows/columns exhaustively.
class MatrixOracleGame : public OracleGame {
 public:
  explicit MatrixOracleGame(Matrix A) : A_(std::move(A)) { detail::check_matrix(A_); }

  ActionKey initial_row_action() const override { return {0}; }
  ActionKey initial_col_action() const override { return {0}; }

  double payoff(const ActionKey& row, const ActionKey& col) const override {
    return A_[row[0]][col[0]];
  }

  std::pair<ActionKey, double> row_best_response(const std::vector<ActionKey>& cols,
                                                 const std::vector<double>& y) const override {
    int best = 0;
    double best_val = -kInf;
    for (std::size_t i = 0; i < A_.size(); ++i) {
      double v = 0.0;
      for (std::size_t j = 0; j < cols.size(); ++j) v += y[j] * A_[i][cols[j][0]];
      if (v > best_val + 1e-15) {
        best_val = v;
        best = static_cast<int>(i);
      }
    }
    return {{best}, best_val};
  }

  std::pair<ActionKey, double> col_best_response(const std::vector<ActionKey>& rows,
                                                 const std::vector<double>& x) const override {
    int best = 0;
    double best_val = -kInf;
    for (std::size_t j = 0; j < A_[0].size(); ++j) {
      double v = 0.0;
      for (std::size_t i = 0; i < rows.size(); ++i) v -= x[i] * A_[rows[i][0]][j];
      if (v > best_val + 1e-15) {
        best_val = v;
        best = static_cast<int>(j);
      }
    }
    return {{best}, best_val};
  }

 private:
  Matrix A_;
};

/// Security-game context for the normal-form oracles: a graph game with
/// moving defenders and stationary attackers picking k-subsets of
/// targets.
struct NfgOracleContext {
  const DirectedGameGraph& graph;
  GameConfig config;
  std::vector<TargetSpec> targets;
  std::size_t path_enumeration_cap = 100000;
};

/// Exact defender best response against attack probabilities P_t:
/// maximize sum_t P_t V_t g_t over feasible joint defender paths, where
/// g_t flags dwell-threshold interdiction. Solved by exhaustive joint
/// path search when the product space fits the cap, otherwise by the
/// time-expanded binary MIP; both routes are equivalent and are
/// cross-checked in the tests.
inline std::pair<ActionMatrix, double> defender_br_nfg(const NfgOracleContext& ctx,
                                                       const std::map<int, double>& attack_probs) {
  const int T = ctx.config.num_timesteps;
  const int D = ctx.config.moving_defenders;
  if (D < 1) throw std::invalid_argument("defender_br_nfg: needs moving defenders");

  std::vector<std::pair<int, double>> weighted;  // (target node, P_t * V_t)
  for (const auto& t : ctx.targets) {
    auto it = attack_probs.find(t.node_id);
    if (it != attack_probs.end() && it->second > 0.0)
      weighted.emplace_back(t.node_id, it->second * t.value);
  }

  std::vector<std::vector<std::vector<int>>> per_resource;
  double product = 1.0;
  for (int r = 0; r < D; ++r) {
    std::vector<int> starts = ctx.config.defender_start_sets.empty()
                                  ? std::vector<int>{}
                                  : ctx.config.defender_start_sets[r];
    std::vector<int> ends =
        ctx.config.defender_end_sets.empty() ? std::vector<int>{} : ctx.config.defender_end_sets[r];
    per_resource.push_back(generate_paths(ctx.graph, starts, ends, T, ctx.config.allow_wait,
                                          ctx.config.force_return));
    if (per_resource.back().empty())
      throw std::invalid_argument("defender_br_nfg: no feasible defender path");
    product *= static_cast<double>(per_resource.back().size());
  }

  const int delta = ctx.config.protocol.defense_time_threshold;
  if (product <= static_cast<double>(ctx.path_enumeration_cap)) {
    auto joints = detail::cartesian_product(per_resource);
    double best_val = -kInf;
    std::size_t best_idx = 0;
    for (std::size_t a = 0; a < joints.size(); ++a) {
      double val = 0.0;
      for (const auto& [node, w] : weighted) {
        int presence = 0;
        for (const auto& path : joints[a])
          for (int tau = 0; tau < T; ++tau)
            if (path[tau] == node) ++presence;
        if (presence >= delta) val += w;
      }
      if (val > best_val + 1e-15) {
        best_val = val;
        best_idx = a;
      }
    }
    ActionMatrix action;
    for (auto& p : joints[best_idx]) {
      action.positions.push_back(std::move(p));
      action.resource_kinds.push_back(ResourceKind::moving);
    }
    return {action, best_val};
  }

  // Time-expanded binary formulation: v[d][i][tau] node occupancy,
  // g_t interdiction indicators.
  MipProgram mip;
  LinearProgram& lp = mip.lp;
  lp.sense = Sense::maximize;
  const std::size_t V = ctx.graph.num_nodes();
  auto vid = [&](int d, std::size_t i, int tau) {
    return static_cast<int>((static_cast<std::size_t>(d) * V + i) * T + tau);
  };
  for (int d = 0; d < D; ++d)
    for (std::size_t i = 0; i < V; ++i)
      for (int tau = 0; tau < T; ++tau) mip.binary_vars.push_back(lp.add_var(0.0, 1.0, 0.0));
  std::vector<int> gvars;
  for (const auto& [node, w] : weighted) gvars.push_back(lp.add_var(0.0, 1.0, w));
  for (int g : gvars) mip.binary_vars.push_back(g);
  const std::size_t total = lp.num_vars();

  auto unit_row = [&]() { return std::vector<double>(total, 0.0); };
  for (int d = 0; d < D; ++d) {
    std::vector<int> starts = ctx.config.defender_start_sets.empty()
                                  ? ctx.graph.node_ids()
                                  : ctx.config.defender_start_sets[d];
    std::set<int> start_set(starts.begin(), starts.end());
    // Start in the home-base set.
    auto row = unit_row();
    for (int s : starts) row[vid(d, ctx.graph.index_of(s), 0)] = 1.0;
    lp.add_row(std::move(row), Rel::eq, 1.0);
    for (std::size_t i = 0; i < V; ++i)
      if (!start_set.count(ctx.graph.node_id(i))) {
        auto r = unit_row();
        r[vid(d, i, 0)] = 1.0;
        lp.add_row(std::move(r), Rel::eq, 0.0);
      }
    if (ctx.config.force_return) {
      // End where the resource started.
      for (std::size_t i = 0; i < V; ++i) {
        auto r = unit_row();
        r[vid(d, i, T - 1)] = 1.0;
        r[vid(d, i, 0)] = -1.0;
        lp.add_row(std::move(r), Rel::eq, 0.0);
      }
    } else if (!ctx.config.defender_end_sets.empty() &&
               !ctx.config.defender_end_sets[d].empty()) {
      std::set<int> end_set(ctx.config.defender_end_sets[d].begin(),
                            ctx.config.defender_end_sets[d].end());
      for (std::size_t i = 0; i < V; ++i)
        if (!end_set.count(ctx.graph.node_id(i))) {
          auto r = unit_row();
          r[vid(d, i, T - 1)] = 1.0;
          lp.add_row(std::move(r), Rel::eq, 0.0);
        }
    }
    // One node per timestep.
    for (int tau = 0; tau < T; ++tau) {
      auto r = unit_row();
      for (std::size_t i = 0; i < V; ++i) r[vid(d, i, tau)] = 1.0;
      lp.add_row(std::move(r), Rel::eq, 1.0);
    }
    // Movement feasibility: occupancy flows from in-neighbours (waiting
    // allowed via the self term when permitted; dead ends always wait).
    for (std::size_t i = 0; i < V; ++i) {
      std::vector<std::size_t> preds;
      for (std::size_t u = 0; u < V; ++u) {
        const auto& nbrs = ctx.graph.neighbor_indices(u);
        bool edge = std::binary_search(nbrs.begin(), nbrs.end(), static_cast<int>(i));
        bool wait = u == i && (ctx.config.allow_wait || nbrs.empty());
        if (edge || wait) preds.push_back(u);
      }
      for (int tau = 1; tau < T; ++tau) {
        auto r = unit_row();
        r[vid(d, i, tau)] = 1.0;
        for (std::size_t u : preds) r[vid(d, u, tau - 1)] -= 1.0;
        lp.add_row(std::move(r), Rel::le, 0.0);
      }
    }
  }
  // Interdiction threshold: delta * g_t <= cumulative presence at t.
  for (std::size_t w = 0; w < weighted.size(); ++w) {
    auto r = unit_row();
    r[gvars[w]] = delta;
    std::size_t node_idx = ctx.graph.index_of(weighted[w].first);
    for (int d = 0; d < D; ++d)
      for (int tau = 0; tau < T; ++tau) r[vid(d, node_idx, tau)] -= 1.0;
    lp.add_row(std::move(r), Rel::le, 0.0);
  }

  LpSolution sol = solve_mip(mip);
  if (sol.status != LpStatus::optimal)
    throw std::runtime_error("defender_br_nfg: MIP not optimal");

  ActionMatrix action;
  for (int d = 0; d < D; ++d) {
    std::vector<int> path(T, -1);
    for (int tau = 0; tau < T; ++tau)
      for (std::size_t i = 0; i < V; ++i)
        if (sol.x[vid(d, i, tau)] > 0.5) path[tau] = ctx.graph.node_id(i);
    action.positions.push_back(std::move(path));
    action.resource_kinds.push_back(ResourceKind::moving);
  }
  return {action, sol.value};
}

/// Attacker best response: the k targets with the highest interdiction-
/// discounted value V_t (1 - q_t); ties break toward the lower node id.
inline std::pair<std::vector<int>, double> attacker_br_nfg(
    const std::vector<TargetSpec>& targets, const std::map<int, double>& interdiction_probs,
    int k) {
  if (k > static_cast<int>(targets.size()))
    throw std::invalid_argument("attacker_br_nfg: k exceeds target count");
  std::vector<std::pair<double, int>> scored;  // (-value, node) for stable ordering
  for (const auto& t : targets) {
    double q = 0.0;
    auto it = interdiction_probs.find(t.node_id);
    if (it != interdiction_probs.end()) q = it->second;
    scored.emplace_back(t.value * (1.0 - q), t.node_id);
  }
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<int> subset;
  double value = 0.0;
  for (int i = 0; i < k; ++i) {
    subset.push_back(scored[i].second);
    value += scored[i].first;
  }
  std::sort(subset.begin(), subset.end());
  return {subset, value};
}

/// Oracle adapter for the security NFG: defender rows are joint paths,
/// attacker columns are target subsets of size k (the stationary
/// attacker count).
class SecurityNfgOracleGame : public OracleGame {
 public:
  explicit SecurityNfgOracleGame(NfgOracleContext ctx) : ctx_(std::move(ctx)), dist_(ctx_.graph) {
    if (ctx_.config.stationary_attackers < 1)
      throw std::invalid_argument("security NFG oracle: needs stationary attackers");
    if (ctx_.config.stationary_attackers > static_cast<int>(ctx_.targets.size()))
      throw std::invalid_argument("security NFG oracle: more attackers than targets");
    for (const auto& t : ctx_.targets) target_by_node_[t.node_id] = t;
  }

  ActionKey initial_row_action() const override {
    ActionMatrix a = first_defender_action();
    return a.key();
  }

  ActionKey initial_col_action() const override {
    std::vector<int> nodes;
    for (const auto& [node, t] : target_by_node_) nodes.push_back(node);
    std::sort(nodes.begin(), nodes.end());
    nodes.resize(ctx_.config.stationary_attackers);
    return nodes;
  }

  double payoff(const ActionKey& row, const ActionKey& col) const override {
    auto [ua, ud] = evaluate_actions(defender_from_key(row), attacker_from_subset(col),
                                     ctx_.targets, ctx_.config.protocol, ctx_.graph, &dist_);
    return ud;
  }

  std::pair<ActionKey, double> row_best_response(const std::vector<ActionKey>& cols,
                                                 const std::vector<double>& y) const override {
    std::map<int, double> attack_probs;
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (int node : cols[j]) attack_probs[node] += y[j];
    auto [action, gain] = defender_br_nfg(ctx_, attack_probs);
    // Defender utility = interdicted gain minus the full expected loss.
    double base = 0.0;
    for (const auto& [node, p] : attack_probs) {
      auto it = target_by_node_.find(node);
      if (it != target_by_node_.end()) base += p * it->second.value;
    }
    return {action.key(), gain - base};
  }

  std::pair<ActionKey, double> col_best_response(const std::vector<ActionKey>& rows,
                                                 const std::vector<double>& x) const override {
    std::map<int, double> q = interdiction_probabilities(rows, x);
    auto [subset, value] = attacker_br_nfg(ctx_.targets, q, ctx_.config.stationary_attackers);
    return {subset, value};
  }

  /// q_t: probability the defender mix interdicts a stationary attack
  /// at t (dwell threshold met).
  std::map<int, double> interdiction_probabilities(const std::vector<ActionKey>& rows,
                                                   const std::vector<double>& x) const {
    std::map<int, double> q;
    const int delta = ctx_.config.protocol.defense_time_threshold;
    for (const auto& t : ctx_.targets) {
      double prob = 0.0;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        int presence = 0;
        for (int node : rows[i])
          if (node == t.node_id) ++presence;
        if (presence >= delta) prob += x[i];
      }
      q[t.node_id] = prob;
    }
    return q;
  }

  ActionMatrix defender_from_key(const ActionKey& key) const {
    const int T = ctx_.config.num_timesteps;
    ActionMatrix a;
    for (std::size_t off = 0; off + T <= key.size(); off += T) {
      a.positions.emplace_back(key.begin() + off, key.begin() + off + T);
      a.resource_kinds.push_back(ResourceKind::moving);
    }
    return a;
  }

  ActionMatrix attacker_from_subset(const std::vector<int>& nodes) const {
    ActionMatrix a;
    for (int node : nodes) {
      a.positions.emplace_back(ctx_.config.num_timesteps, node);
      a.resource_kinds.push_back(ResourceKind::stationary);
    }
    return a;
  }

 private:
  ActionMatrix first_defender_action() const {
    ActionMatrix a;
    const int T = ctx_.config.num_timesteps;
    for (int r = 0; r < ctx_.config.moving_defenders; ++r) {
      std::vector<int> starts = ctx_.config.defender_start_sets.empty()
                                    ? std::vector<int>{}
                                    : ctx_.config.defender_start_sets[r];
      auto paths = generate_paths(ctx_.graph, starts, {}, T, ctx_.config.allow_wait,
                                  ctx_.config.force_return);
      if (paths.empty()) throw std::invalid_argument("security NFG oracle: no defender path");
      a.positions.push_back(paths.front());
      a.resource_kinds.push_back(ResourceKind::moving);
    }
    return a;
  }

  NfgOracleContext ctx_;
  NodeDistances dist_;
  std::map<int, TargetSpec> target_by_node_;
};

/// Schedule-form oracle context.
struct SfgOracleContext {
  const ScheduleFormGame& sfg;
};

/// Defender best response in schedule form: one schedule per resource,
/// maximizing the summed defense gain w_t over covered targets (the B.2
/// selection MIP).
inline std::pair<std::vector<int>, double> defender_br_sfg(const ScheduleFormGame& sfg,
                                                           const std::vector<double>& w) {
  const std::size_t R = sfg.num_defenders();
  const std::size_t Tn = sfg.targets.size();
  if (w.size() != Tn) throw std::invalid_argument("defender_br_sfg: weight size mismatch");

  MipProgram mip;
  LinearProgram& lp = mip.lp;
  lp.sense = Sense::maximize;
  std::vector<std::vector<int>> xvars(R);
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t i = 0; i < sfg.defender_schedules[r].size(); ++i) {
      int var = lp.add_var(0.0, 1.0, 0.0);
      xvars[r].push_back(var);
      mip.binary_vars.push_back(var);
    }
  std::vector<int> gvars;
  for (std::size_t t = 0; t < Tn; ++t) gvars.push_back(lp.add_var(0.0, 1.0, w[t]));
  for (int g : gvars) mip.binary_vars.push_back(g);
  const std::size_t total = lp.num_vars();

  for (std::size_t r = 0; r < R; ++r) {
    std::vector<double> row(total, 0.0);
    for (int var : xvars[r]) row[var] = 1.0;
    lp.add_row(std::move(row), Rel::eq, 1.0);
  }
  for (std::size_t t = 0; t < Tn; ++t) {
    std::vector<double> row(total, 0.0);
    row[gvars[t]] = 1.0;
    int node = sfg.targets[t].node_id;
    for (std::size_t r = 0; r < R; ++r)
      for (std::size_t i = 0; i < sfg.defender_schedules[r].size(); ++i) {
        const auto& ts = sfg.defender_schedules[r][i].targets;
        if (std::binary_search(ts.begin(), ts.end(), node)) row[xvars[r][i]] -= 1.0;
      }
    lp.add_row(std::move(row), Rel::le, 0.0);
  }

  LpSolution sol = solve_mip(mip);
  if (sol.status != LpStatus::optimal)
    throw std::runtime_error("defender_br_sfg: MIP not optimal");

  std::vector<int> picks(R, 0);
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t i = 0; i < xvars[r].size(); ++i)
      if (sol.x[xvars[r][i]] > 0.5) picks[r] = static_cast<int>(i);
  return {picks, sol.value};
}

/// Attacker best response in schedule form: the single target with the
/// highest expected value given per-target coverage of the defender mix.
inline std::pair<int, double> attacker_br_sfg(const ScheduleFormGame& sfg,
                                              const std::vector<double>& coverage) {
  int best = -1;
  double best_val = -kInf;
  for (std::size_t t = 0; t < sfg.targets.size(); ++t) {
    const auto& spec = sfg.targets[t];
    double v = coverage[t] * spec.u_a_covered + (1.0 - coverage[t]) * spec.u_a_uncovered;
    if (v > best_val + 1e-15 ||
        (std::abs(v - best_val) <= 1e-15 && best >= 0 && spec.node_id < sfg.targets[best].node_id)) {
      best_val = v;
      best = static_cast<int>(t);
    }
  }
  return {best, best_val};
}

/// Oracle adapter for zero-sum schedule-form games. Rows are joint
/// schedule selections; columns are single targets. Payoffs are the
/// unnormalized zero-sum entries (-attacker value).
class SecuritySfgOracleGame : public OracleGame {
 public:
  explicit SecuritySfgOracleGame(const ScheduleFormGame& sfg) : sfg_(sfg) {
    if (sfg.num_defenders() == 0) throw std::invalid_argument("SFG oracle: no defenders");
  }

  ActionKey initial_row_action() const override {
    return ActionKey(sfg_.num_defenders(), 0);
  }
  ActionKey initial_col_action() const override { return {0}; }

  double payoff(const ActionKey& row, const ActionKey& col) const override {
    const TargetSpec& t = sfg_.targets[col[0]];
    bool covered = false;
    for (std::size_t d = 0; d < row.size(); ++d) {
      const auto& ts = sfg_.defender_schedules[d][row[d]].targets;
      if (std::binary_search(ts.begin(), ts.end(), t.node_id)) {
        covered = true;
        break;
      }
    }
    return -(covered ? t.u_a_covered : t.u_a_uncovered);
  }

  std::pair<ActionKey, double> row_best_response(const std::vector<ActionKey>& cols,
                                                 const std::vector<double>& y) const override {
    // w_t = P_t * (u_a_unc - u_a_cov): expected gain from covering t.
    std::vector<double> w(sfg_.targets.size(), 0.0);
    double base = 0.0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const TargetSpec& t = sfg_.targets[cols[j][0]];
      w[cols[j][0]] += y[j] * (t.u_a_uncovered - t.u_a_covered);
      base += y[j] * t.u_a_uncovered;
    }
    auto [picks, gain] = defender_br_sfg(sfg_, w);
    return {picks, gain - base};
  }

  std::pair<ActionKey, double> col_best_response(const std::vector<ActionKey>& rows,
                                                 const std::vector<double>& x) const override {
    std::vector<double> coverage(sfg_.targets.size(), 0.0);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t t = 0; t < sfg_.targets.size(); ++t) {
        const int node = sfg_.targets[t].node_id;
        for (std::size_t d = 0; d < rows[i].size(); ++d) {
          const auto& ts = sfg_.defender_schedules[d][rows[i][d]].targets;
          if (std::binary_search(ts.begin(), ts.end(), node)) {
            coverage[t] += x[i];
            break;
          }
        }
      }
    auto [target_idx, value] = attacker_br_sfg(sfg_, coverage);
    return {{target_idx}, value};
  }

 private:
  const ScheduleFormGame& sfg_;
};

}  // namespace sgkit

#endif  // SGKIT_DOUBLE_ORACLE_HPP
