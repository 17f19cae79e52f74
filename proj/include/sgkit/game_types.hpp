#ifndef SGKIT_GAME_TYPES_HPP
#define SGKIT_GAME_TYPES_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgkit/common.hpp"
#include "sgkit/graph.hpp"

namespace sgkit {

/// Target with a zero-sum value and the four general-sum payoffs.
/// The general-sum fields follow the row layout of the target utility
/// matrix: uncovered/covered defender, covered/uncovered attacker.
struct TargetSpec {
  int node_id = 0;
  double value = 0.0;
  double u_d_uncovered = 0.0;
  double u_d_covered = 0.0;
  double u_a_covered = 0.0;
  double u_a_uncovered = 0.0;
};

/// Scales covered payoffs down from the uncovered ones, preserving sign:
/// u_a_covered = u_a_uncovered / attacker_factor, and likewise for the
/// defender. Factors must be positive.
inline std::vector<TargetSpec> scale_target_utilities(std::vector<TargetSpec> targets,
                                                      double attacker_penalty_factor,
                                                      double defender_penalty_factor) {
  if (attacker_penalty_factor <= 0.0 || defender_penalty_factor <= 0.0)
    throw std::invalid_argument("scale_target_utilities: factors must be > 0");
  for (auto& t : targets) {
    t.u_a_covered = t.u_a_uncovered / attacker_penalty_factor;
    t.u_d_covered = t.u_d_uncovered / defender_penalty_factor;
  }
  return targets;
}

enum class ResourceKind { moving, stationary };

/// Per-player action: resource positions over the horizon, one row per
/// resource, one column per game state (T columns include the initial
/// state). Stationary rows are constant.
struct ActionMatrix {
  std::vector<std::vector<int>> positions;  // [resource][timestep] node ids
  std::vector<ResourceKind> resource_kinds;

  std::size_t num_resources() const { return positions.size(); }
  std::size_t num_timesteps() const { return positions.empty() ? 0 : positions[0].size(); }

  /// Flat encoding used as action identity in oracle-driven solvers.
  std::vector<int> key() const {
    std::vector<int> flat;
    for (const auto& row : positions) flat.insert(flat.end(), row.begin(), row.end());
    return flat;
  }
};

/// Capture rules: radius r for moving attackers, dwell threshold delta
/// for stationary ones.
struct InterdictionProtocol {
  double capture_radius = 0.0;
  int defense_time_threshold = 1;

  void validate() const {
    if (defense_time_threshold < 1)
      throw std::invalid_argument("interdiction: defense_time_threshold must be >= 1");
    if (capture_radius < 0.0)
      throw std::invalid_argument("interdiction: capture_radius must be >= 0");
  }
};

/// Per-player resource configuration for graph games. Empty start/end
/// sets default to all nodes during enumeration.
struct GameConfig {
  int num_timesteps = 1;
  int moving_attackers = 0;
  int stationary_attackers = 0;
  int moving_defenders = 0;
  int stationary_defenders = 0;
  std::vector<std::vector<int>> attacker_start_sets;  // per moving attacker
  std::vector<std::vector<int>> attacker_end_sets;
  std::vector<std::vector<int>> defender_start_sets;  // per moving defender
  std::vector<std::vector<int>> defender_end_sets;
  std::vector<std::vector<int>> stationary_defender_placements;  // per resource
  bool allow_wait = true;
  bool force_return = false;
  double defender_step_cost = 0.0;
  InterdictionProtocol protocol;

  void validate(const DirectedGameGraph& graph) const {
    if (num_timesteps < 1) throw std::invalid_argument("config: num_timesteps must be >= 1");
    if (moving_attackers < 0 || stationary_attackers < 0 || moving_defenders < 0 ||
        stationary_defenders < 0)
      throw std::invalid_argument("config: resource counts must be >= 0");
    if (defender_step_cost < 0.0)
      throw std::invalid_argument("config: defender_step_cost must be >= 0");
    protocol.validate();
    auto check_sets = [&](const std::vector<std::vector<int>>& sets) {
      for (const auto& set : sets)
        for (int id : set)
          if (!graph.has_node(id))
            throw std::invalid_argument("config: start/end node not in graph");
    };
    check_sets(attacker_start_sets);
    check_sets(attacker_end_sets);
    check_sets(defender_start_sets);
    check_sets(defender_end_sets);
    check_sets(stationary_defender_placements);
  }
};

/// Payoff matrices over enumerated pure actions; defender indexes rows.
/// In zero-sum games attacker == -defender.
struct BimatrixGame {
  std::vector<std::vector<double>> defender;
  std::vector<std::vector<double>> attacker;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  bool zero_sum = false;

  std::size_t rows() const { return defender.size(); }
  std::size_t cols() const { return defender.empty() ? 0 : defender[0].size(); }
};

/// Probability vector over a labeled action set.
struct MixedStrategy {
  std::vector<double> probs;
  std::vector<std::string> labels;

  void validate() const {
    double sum = 0.0;
    for (double p : probs) {
      if (p < -kSupportThreshold) throw std::invalid_argument("mixed strategy: negative mass");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw std::invalid_argument("mixed strategy: probabilities must sum to 1");
  }

  std::vector<std::size_t> support(double threshold = kSupportThreshold) const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < probs.size(); ++i)
      if (probs[i] > threshold) idx.push_back(i);
    return idx;
  }

  std::size_t support_size(double threshold = kSupportThreshold) const {
    return support(threshold).size();
  }
};

inline MixedStrategy uniform_strategy(std::size_t n) {
  MixedStrategy s;
  s.probs.assign(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n));
  return s;
}

struct GapSample {
  long iteration = 0;
  double time_s = 0.0;
  double gap = 0.0;
};

/// Uniform result record for equilibrium solvers.
struct SolveReport {
  double value = 0.0;
  MixedStrategy row_strategy;
  MixedStrategy col_strategy;
  long iterations = 0;
  double wall_time_s = 0.0;
  std::vector<GapSample> gap_trace;
  std::string stop_reason;
};

}  // namespace sgkit

#endif  // SGKIT_GAME_TYPES_HPP
