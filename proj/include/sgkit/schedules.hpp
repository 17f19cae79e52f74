#ifndef SGKIT_SCHEDULES_HPP
#define SGKIT_SCHEDULES_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgkit/evaluate.hpp"
#include "sgkit/game_types.hpp"
#include "sgkit/graph.hpp"
#include "sgkit/paths.hpp"

namespace sgkit {

/// Target subset one defender resource can protect in a single tour.
/// movement_steps counts edge traversals (dwell timesteps excluded);
/// movement_cost = step_cost * movement_steps. The empty target set is
/// the explicit idle schedule.
struct Schedule {
  std::vector<int> targets;  // sorted node ids
  int movement_steps = 0;
  double movement_cost = 0.0;
};

struct FullPathResult {
  bool feasible = false;
  std::vector<int> path;
  int cost = 0;   // edges traversed + dwell timesteps
  int steps = 0;  // edges traversed only
};

/// Cheapest tour home -> targets (in some visit order) -> home, dwelling
/// delta-1 extra timesteps at each target. Minimizes over visit-order
/// permutations; equal-cost ties keep the first order in lexicographic
/// sequence. Infeasible inputs yield a distinguished result, not an
/// exception.
inline FullPathResult get_full_path(const DirectedGameGraph& graph, int home_base,
                                    std::vector<int> target_set, int delta) {
  if (target_set.empty()) throw std::invalid_argument("get_full_path: empty target set");
  std::sort(target_set.begin(), target_set.end());

  // Pairwise shortest paths among {home} + targets, computed once.
  std::vector<int> pois = target_set;
  pois.push_back(home_base);
  std::map<std::pair<int, int>, std::vector<int>> leg;
  for (int from : pois)
    for (int to : pois)
      if (from != to) leg[{from, to}] = graph.shortest_path(from, to);

  FullPathResult best;
  long best_cost = -1;
  std::vector<int> perm = target_set;
  do {
    std::vector<int> path{home_base};
    long cost = 0, steps = 0;
    int at = home_base;
    bool ok = true;
    for (int v : perm) {
      const std::vector<int>* q;
      std::vector<int> self{v};
      if (v == at) {
        q = &self;
      } else {
        q = &leg[{at, v}];
        if (q->empty()) {
          ok = false;
          break;
        }
      }
      path.insert(path.end(), q->begin() + 1, q->end());
      cost += static_cast<long>(q->size()) - 1;
      steps += static_cast<long>(q->size()) - 1;
      for (int d = 0; d < delta - 1; ++d) path.push_back(v);
      cost += delta - 1;
      at = v;
    }
    if (!ok) continue;
    if (at != home_base) {
      const auto& ret = leg[{at, home_base}];
      if (ret.empty()) continue;
      path.insert(path.end(), ret.begin() + 1, ret.end());
      cost += static_cast<long>(ret.size()) - 1;
      steps += static_cast<long>(ret.size()) - 1;
    }
    if (best_cost < 0 || cost < best_cost) {
      best_cost = cost;
      best.feasible = true;
      best.path = std::move(path);
      best.cost = static_cast<int>(cost);
      best.steps = static_cast<int>(steps);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  return best;
}

/// Singleton schedules under the closed-form feasibility condition
/// T >= 2|p| + delta - 1, with |p| the shortest-path edge count from the
/// home base. Unreachable targets are excluded.
inline std::vector<Schedule> simple_schedules(const DirectedGameGraph& graph,
                                              const std::vector<TargetSpec>& targets,
                                              int home_base, int T, int delta,
                                              double step_cost = 0.0) {
  graph.index_of(home_base);
  std::vector<int> dist = graph.hop_distances_from(home_base);
  std::vector<Schedule> out;
  std::set<int> seen;
  for (const auto& t : targets) {
    if (!seen.insert(t.node_id).second) continue;
    int d = dist[graph.index_of(t.node_id)];
    if (d == kUnreachable) continue;
    if (T >= 2 * d + delta - 1) {
      Schedule s;
      s.targets = {t.node_id};
      s.movement_steps = 2 * d;
      s.movement_cost = step_cost * s.movement_steps;
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Schedule& a, const Schedule& b) { return a.targets < b.targets; });
  return out;
}

/// Backtracking over subsets of the simple-schedule targets; a subset is
/// kept when its cheapest tour fits the horizon (cost <= T, dwell
/// included). Tour cost is monotone in the target set under the
/// shortest-path metric, so infeasible subsets prune their supersets.
/// Results deduplicate by target set keeping the minimal cost.
inline std::vector<Schedule> general_schedules(const DirectedGameGraph& graph,
                                               const std::vector<TargetSpec>& targets,
                                               int home_base, int T, int delta,
                                               double step_cost) {
  std::vector<Schedule> simple = simple_schedules(graph, targets, home_base, T, delta, step_cost);
  std::map<std::vector<int>, Schedule> dedup;
  for (const auto& s : simple) dedup[s.targets] = s;

  std::vector<int> pool;
  for (const auto& s : simple) pool.push_back(s.targets[0]);
  std::sort(pool.begin(), pool.end());

  std::vector<int> current;
  std::function<void(std::size_t)> backtrack = [&](std::size_t next) {
    if (!current.empty()) {
      FullPathResult r = get_full_path(graph, home_base, current, delta);
      if (!r.feasible || r.cost > T) return;  // supersets only cost more
      Schedule s;
      s.targets = current;
      s.movement_steps = r.steps;
      s.movement_cost = step_cost * r.steps;
      auto it = dedup.find(s.targets);
      if (it == dedup.end() || s.movement_cost < it->second.movement_cost)
        dedup[s.targets] = std::move(s);
    }
    for (std::size_t i = next; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      std::sort(current.begin(), current.end());
      backtrack(i + 1);
      current.erase(std::find(current.begin(), current.end(), pool[i]));
    }
  };
  backtrack(0);

  std::vector<Schedule> out;
  for (auto& [key, s] : dedup) out.push_back(std::move(s));
  return out;
}

/// Schedule-form game artifacts: per-defender schedule lists, the 4x|T|
/// target utility matrix, and the expanded joint actions with summed
/// movement costs.
struct ScheduleFormGame {
  std::vector<TargetSpec> targets;
  std::vector<std::vector<Schedule>> defender_schedules;  // per defender
  std::vector<std::vector<int>> joint_actions;            // schedule index per defender
  std::vector<double> joint_costs;

  std::size_t num_defenders() const { return defender_schedules.size(); }
  std::size_t num_joint_actions() const { return joint_actions.size(); }

  /// 4 x |T| rows: defender uncovered, defender covered, attacker
  /// covered, attacker uncovered.
  std::vector<std::vector<double>> target_utility_matrix() const {
    std::vector<std::vector<double>> m(4, std::vector<double>(targets.size(), 0.0));
    for (std::size_t j = 0; j < targets.size(); ++j) {
      m[0][j] = targets[j].u_d_uncovered;
      m[1][j] = targets[j].u_d_covered;
      m[2][j] = targets[j].u_a_covered;
      m[3][j] = targets[j].u_a_uncovered;
    }
    return m;
  }

  bool joint_action_covers(std::size_t action, int target_node) const {
    const auto& idx = joint_actions[action];
    for (std::size_t d = 0; d < idx.size(); ++d) {
      const auto& ts = defender_schedules[d][idx[d]].targets;
      if (std::binary_search(ts.begin(), ts.end(), target_node)) return true;
    }
    return false;
  }
};

/// Builds SFG artifacts. Each defender's schedule list is the union over
/// its allowed home-base nodes, deduplicated by target set at minimal
/// cost. A defender with no feasible schedule receives a single idle
/// schedule so joint products stay nonempty.
inline ScheduleFormGame build_schedule_form_game(
    const DirectedGameGraph& graph, const std::vector<TargetSpec>& targets,
    const std::vector<std::vector<int>>& defender_home_bases, int T, int delta,
    double step_cost, bool simple_only) {
  ScheduleFormGame sfg;
  sfg.targets = targets;
  for (const auto& bases : defender_home_bases) {
    std::map<std::vector<int>, Schedule> dedup;
    for (int base : bases) {
      std::vector<Schedule> found =
          simple_only ? simple_schedules(graph, targets, base, T, delta, step_cost)
                      : general_schedules(graph, targets, base, T, delta, step_cost);
      for (auto& s : found) {
        auto it = dedup.find(s.targets);
        if (it == dedup.end() || s.movement_cost < it->second.movement_cost)
          dedup[s.targets] = std::move(s);
      }
    }
    std::vector<Schedule> list;
    for (auto& [key, s] : dedup) list.push_back(std::move(s));
    if (list.empty()) list.push_back(Schedule{});  // idle
    sfg.defender_schedules.push_back(std::move(list));
  }

  std::vector<std::vector<int>> index_lists;
  for (const auto& list : sfg.defender_schedules) {
    std::vector<int> idx(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) idx[i] = static_cast<int>(i);
    index_lists.push_back(std::move(idx));
  }
  sfg.joint_actions = detail::cartesian_product(index_lists);
  for (const auto& joint : sfg.joint_actions) {
    double cost = 0.0;
    for (std::size_t d = 0; d < joint.size(); ++d)
      cost += sfg.defender_schedules[d][joint[d]].movement_cost;
    sfg.joint_costs.push_back(cost);
  }
  return sfg;
}

/// Expands the SFG into normal form: rows are joint schedule actions,
/// columns are single attacked targets. Coverage is boolean, so a target
/// appearing in several selected schedules is covered exactly once.
/// General-sum defender payoffs subtract the joint movement cost;
/// zero-sum mode normalizes by the maximum absolute entry as in the
/// graph-game layer.
inline BimatrixGame schedule_game_matrix(const ScheduleFormGame& sfg, bool general_sum,
                                         bool normalize = true) {
  const std::size_t n = sfg.num_joint_actions();
  const std::size_t m = sfg.targets.size();
  if (n == 0 || m == 0)
    throw std::invalid_argument("schedule_game_matrix: empty action or target set");

  BimatrixGame game;
  game.zero_sum = !general_sum;
  game.defender.assign(n, std::vector<double>(m, 0.0));
  game.attacker.assign(n, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const TargetSpec& t = sfg.targets[j];
      bool covered = sfg.joint_action_covers(i, t.node_id);
      double ua = covered ? t.u_a_covered : t.u_a_uncovered;
      game.attacker[i][j] = ua;
      if (general_sum)
        game.defender[i][j] = (covered ? t.u_d_covered : t.u_d_uncovered) - sfg.joint_costs[i];
      else
        game.defender[i][j] = -ua;
    }
  }

  if (normalize && !general_sum) {
    double s = normalize_by_max_abs(game.defender);
    if (s > 0.0)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) game.attacker[i][j] /= s;
  }

  for (std::size_t i = 0; i < n; ++i) game.row_labels.push_back("s" + std::to_string(i));
  for (std::size_t j = 0; j < m; ++j)
    game.col_labels.push_back("t" + std::to_string(sfg.targets[j].node_id));
  return game;
}

}  // namespace sgkit

#endif  // SGKIT_SCHEDULES_HPP
