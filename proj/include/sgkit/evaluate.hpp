#ifndef SGKIT_EVALUATE_HPP
#define SGKIT_EVALUATE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "sgkit/common.hpp"
#include "sgkit/game_types.hpp"
#include "sgkit/graph.hpp"

namespace sgkit {

/// All-pairs hop distances, precomputed once so per-timestep capture
/// checks stay O(1) when large action spaces are evaluated.
class NodeDistances {
 public:
  explicit NodeDistances(const DirectedGameGraph& graph) : graph_(graph) {
    if (graph.metric() == DistanceMetric::hop_count) {
      hops_.reserve(graph.num_nodes());
      for (int id : graph.node_ids()) hops_.push_back(graph.hop_distances_from(id));
    }
  }

  double operator()(int u, int v) const {
    if (graph_.metric() == DistanceMetric::hop_count) {
      int d = hops_[graph_.index_of(u)][graph_.index_of(v)];
      return d == kUnreachable ? std::numeric_limits<double>::infinity()
                               : static_cast<double>(d);
    }
    return graph_.distance(u, v);
  }

 private:
  const DirectedGameGraph& graph_;
  std::vector<std::vector<int>> hops_;
};

namespace detail {

struct TargetOutcome {
  bool attacked = false;
  bool captured = false;  // reached/selected by a non-interdicted resource
};

/// Per-target attack outcomes for one action pair. A moving attacker
/// reaches every target node it visits; a stationary one selects its own
/// node. Moving resources are interdicted by proximity within the capture
/// radius at any timestep; stationary ones by cumulative defender
/// presence at the target (resources present in the same timestep count
/// separately) meeting the dwell threshold.
inline std::unordered_map<int, TargetOutcome> resolve_attacks(
    const ActionMatrix& defender, const ActionMatrix& attacker,
    const std::vector<TargetSpec>& targets, const InterdictionProtocol& protocol,
    const DirectedGameGraph& graph, const NodeDistances& dist) {
  const std::size_t T = attacker.num_timesteps();
  if (defender.num_resources() > 0 && defender.num_timesteps() != T)
    throw std::invalid_argument("evaluate_actions: timestep count mismatch");

  std::set<int> target_nodes;
  for (const auto& t : targets) {
    if (!graph.has_node(t.node_id))
      throw std::invalid_argument("evaluate_actions: target node absent from graph");
    target_nodes.insert(t.node_id);
  }

  std::unordered_map<int, TargetOutcome> outcome;
  for (std::size_t ja = 0; ja < attacker.num_resources(); ++ja) {
    const auto& row = attacker.positions[ja];
    bool interdicted = false;
    std::set<int> reached;
    if (attacker.resource_kinds[ja] == ResourceKind::moving) {
      for (std::size_t tau = 0; tau < T && !interdicted; ++tau) {
        for (std::size_t jd = 0; jd < defender.num_resources(); ++jd) {
          if (dist(row[tau], defender.positions[jd][tau]) <= protocol.capture_radius) {
            interdicted = true;
            break;
          }
        }
      }
      for (int node : row)
        if (target_nodes.count(node)) reached.insert(node);
    } else {
      int node = row.empty() ? -1 : row[0];
      if (target_nodes.count(node)) {
        reached.insert(node);
        int presence = 0;
        for (std::size_t tau = 0; tau < T; ++tau)
          for (std::size_t jd = 0; jd < defender.num_resources(); ++jd)
            if (defender.positions[jd][tau] == node) ++presence;
        interdicted = presence >= protocol.defense_time_threshold;
      }
    }
    for (int node : reached) {
      auto& o = outcome[node];
      o.attacked = true;
      if (!interdicted) o.captured = true;
    }
  }
  return outcome;
}

inline int count_defender_moves(const ActionMatrix& defender) {
  int moves = 0;
  for (const auto& row : defender.positions)
    for (std::size_t tau = 1; tau < row.size(); ++tau)
      if (row[tau] != row[tau - 1]) ++moves;
  return moves;
}

}  // namespace detail

/// Divides every entry by the maximum absolute value. All-zero matrices
/// are left unchanged. Returns the scale applied (0 when unchanged).
inline double normalize_by_max_abs(std::vector<std::vector<double>>& m) {
  double max_abs = 0.0;
  for (const auto& row : m)
    for (double v : row) max_abs = std::max(max_abs, std::abs(v));
  if (max_abs > 0.0)
    for (auto& row : m)
      for (double& v : row) v /= max_abs;
  return max_abs;
}

/// Zero-sum evaluation: attacker utility is the summed value of captured
/// targets; defender utility is its exact negation.
inline std::pair<double, double> evaluate_actions(const ActionMatrix& defender,
                                                  const ActionMatrix& attacker,
                                                  const std::vector<TargetSpec>& targets,
                                                  const InterdictionProtocol& protocol,
                                                  const DirectedGameGraph& graph,
                                                  const NodeDistances* dist = nullptr) {
  std::optional<NodeDistances> local;
  if (!dist) local.emplace(graph);
  const NodeDistances& d = dist ? *dist : *local;
  auto outcome = detail::resolve_attacks(defender, attacker, targets, protocol, graph, d);
  double u_a = 0.0;
  for (const auto& t : targets) {
    auto it = outcome.find(t.node_id);
    if (it != outcome.end() && it->second.captured) u_a += t.value;
  }
  return {u_a, -u_a};
}

/// General-sum evaluation with the covered/uncovered payoff split and an
/// optional defender movement penalty (step_cost per move between
/// distinct nodes).
inline std::pair<double, double> evaluate_actions_general(
    const ActionMatrix& defender, const ActionMatrix& attacker,
    const std::vector<TargetSpec>& targets, const InterdictionProtocol& protocol,
    const DirectedGameGraph& graph, double step_cost,
    const NodeDistances* dist = nullptr) {
  std::optional<NodeDistances> local;
  if (!dist) local.emplace(graph);
  const NodeDistances& d = dist ? *dist : *local;
  auto outcome = detail::resolve_attacks(defender, attacker, targets, protocol, graph, d);
  double u_a = 0.0, u_d = 0.0;
  for (const auto& t : targets) {
    auto it = outcome.find(t.node_id);
    if (it == outcome.end() || !it->second.attacked) continue;
    if (it->second.captured) {
      u_a += t.u_a_uncovered;
      u_d += t.u_d_uncovered;
    } else {
      u_a += t.u_a_covered;
      u_d += t.u_d_covered;
    }
  }
  u_d -= step_cost * detail::count_defender_moves(defender);
  return {u_a, u_d};
}

/// Assembles the normal-form matrices over enumerated actions. Zero-sum
/// mode stores the defender payoff matrix scaled by its maximum absolute
/// entry (left untouched when all-zero); general-sum mode keeps raw
/// payoffs unless `normalize` is set, in which case each matrix is scaled
/// by its own maximum absolute entry. Cells are independent and evaluated
/// in parallel with deterministic placement.
inline BimatrixGame build_utility_matrix(const std::vector<ActionMatrix>& defender_actions,
                                         const std::vector<ActionMatrix>& attacker_actions,
                                         const std::vector<TargetSpec>& targets,
                                         const InterdictionProtocol& protocol,
                                         const DirectedGameGraph& graph, bool general_sum,
                                         double step_cost = 0.0, bool normalize = true) {
  if (defender_actions.empty() || attacker_actions.empty())
    throw std::invalid_argument("build_utility_matrix: empty action list");
  const std::size_t n = defender_actions.size();
  const std::size_t m = attacker_actions.size();
  NodeDistances dist(graph);

  BimatrixGame game;
  game.zero_sum = !general_sum;
  game.defender.assign(n, std::vector<double>(m, 0.0));
  game.attacker.assign(n, std::vector<double>(m, 0.0));

  parallel_for(n * m, [&](std::size_t cell) {
    std::size_t i = cell / m, j = cell % m;
    if (general_sum) {
      auto [ua, ud] = evaluate_actions_general(defender_actions[i], attacker_actions[j],
                                               targets, protocol, graph, step_cost, &dist);
      game.defender[i][j] = ud;
      game.attacker[i][j] = ua;
    } else {
      auto [ua, ud] = evaluate_actions(defender_actions[i], attacker_actions[j], targets,
                                       protocol, graph, &dist);
      game.defender[i][j] = ud;
      game.attacker[i][j] = ua;
    }
  });

  if (normalize) {
    if (!general_sum) {
      double s = normalize_by_max_abs(game.defender);
      if (s > 0.0)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < m; ++j) game.attacker[i][j] /= s;
    } else {
      normalize_by_max_abs(game.defender);
      normalize_by_max_abs(game.attacker);
    }
  }

  for (std::size_t i = 0; i < n; ++i) game.row_labels.push_back("d" + std::to_string(i));
  for (std::size_t j = 0; j < m; ++j) game.col_labels.push_back("a" + std::to_string(j));
  return game;
}

}  // namespace sgkit

#endif  // SGKIT_EVALUATE_HPP
