#ifndef SGKIT_PATHS_HPP
#define SGKIT_PATHS_HPP

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "sgkit/game_types.hpp"
#include "sgkit/graph.hpp"

namespace sgkit {

/// All node sequences of length T (T game states) that start in `starts`,
/// follow edges (a resource may wait in place when allowed, and is forced
/// to wait at a dead end), and satisfy the end rule: last node equals the
/// origin when force_return is set, otherwise last node lies in `ends`.
/// Empty start/end sets default to all nodes. Output is in DFS order with
/// the wait move explored first.
inline std::vector<std::vector<int>> generate_paths(const DirectedGameGraph& graph,
                                                    std::vector<int> starts,
                                                    std::vector<int> ends, int T,
                                                    bool allow_wait, bool force_return) {
  if (T < 1) throw std::invalid_argument("generate_paths: T must be >= 1");
  if (starts.empty()) starts = graph.node_ids();
  if (ends.empty()) ends = graph.node_ids();
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  std::set<int> end_set(ends.begin(), ends.end());
  for (int s : starts) graph.index_of(s);  // validates membership
  for (int e : end_set) graph.index_of(e);

  std::vector<std::vector<int>> all_paths;
  std::vector<int> path;

  auto accept = [&](int last, int origin) {
    return force_return ? last == origin : end_set.count(last) != 0;
  };

  std::function<void(int)> dfs = [&](int origin) {
    if (static_cast<int>(path.size()) == T) {
      if (accept(path.back(), origin)) all_paths.push_back(path);
      return;
    }
    int v = path.back();
    std::vector<int> nbrs = graph.neighbors(v);
    std::vector<int> nexts;
    bool waits = allow_wait || nbrs.empty();
    if (waits) nexts.push_back(v);
    for (int u : nbrs)
      if (!(waits && u == v)) nexts.push_back(u);  // self-loop would duplicate the wait
    for (int u : nexts) {
      path.push_back(u);
      dfs(origin);
      path.pop_back();
    }
  };

  for (int s : starts) {
    path.assign(1, s);
    dfs(s);
  }
  return all_paths;
}

namespace detail {

/// k-combinations of `items` in lexicographic order.
inline std::vector<std::vector<int>> combinations(const std::vector<int>& items, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > static_cast<int>(items.size())) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<int> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = items[idx[i]];
    out.push_back(std::move(combo));
    int i = k - 1;
    while (i >= 0 && idx[i] == static_cast<int>(items.size()) - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/// Cartesian product over per-resource option lists, first list varying
/// slowest.
template <typename T>
std::vector<std::vector<T>> cartesian_product(const std::vector<std::vector<T>>& lists) {
  std::vector<std::vector<T>> out;
  if (lists.empty()) return out;
  for (const auto& l : lists)
    if (l.empty()) return out;
  std::vector<std::size_t> cursor(lists.size(), 0);
  while (true) {
    std::vector<T> tuple;
    tuple.reserve(lists.size());
    for (std::size_t i = 0; i < lists.size(); ++i) tuple.push_back(lists[i][cursor[i]]);
    out.push_back(std::move(tuple));
    std::size_t i = lists.size();
    while (i > 0) {
      --i;
      if (++cursor[i] < lists[i].size()) break;
      cursor[i] = 0;
      if (i == 0) return out;
    }
  }
}

}  // namespace detail

enum class Player { attacker, defender };

/// Joint action space for one player. Moving resources enumerate paths per
/// resource and combine via Cartesian product; stationary attackers pick
/// k-subsets of the target nodes; stationary defenders take Cartesian
/// products of their placement sets.
inline std::vector<ActionMatrix> generate_player_actions(
    const DirectedGameGraph& graph, const GameConfig& config, Player player,
    const std::vector<TargetSpec>& targets) {
  config.validate(graph);
  const bool is_attacker = player == Player::attacker;
  int moving = is_attacker ? config.moving_attackers : config.moving_defenders;
  int stationary = is_attacker ? config.stationary_attackers : config.stationary_defenders;
  if (moving + stationary == 0) return {};

  const auto& start_sets = is_attacker ? config.attacker_start_sets : config.defender_start_sets;
  const auto& end_sets = is_attacker ? config.attacker_end_sets : config.defender_end_sets;
  if (!start_sets.empty() && static_cast<int>(start_sets.size()) != moving)
    throw std::invalid_argument("generate_player_actions: start-set count != moving resources");
  if (!end_sets.empty() && static_cast<int>(end_sets.size()) != moving)
    throw std::invalid_argument("generate_player_actions: end-set count != moving resources");

  const int T = config.num_timesteps;
  std::vector<std::vector<std::vector<int>>> moving_paths;  // [resource][path][step]
  for (int r = 0; r < moving; ++r) {
    std::vector<int> starts = start_sets.empty() ? std::vector<int>{} : start_sets[r];
    std::vector<int> ends = end_sets.empty() ? std::vector<int>{} : end_sets[r];
    moving_paths.push_back(
        generate_paths(graph, starts, ends, T, config.allow_wait, config.force_return));
  }

  // Stationary placements: per-resource lists of constant rows.
  std::vector<std::vector<int>> stationary_choices;  // flattened to node per resource
  std::vector<std::vector<std::vector<int>>> stationary_tuples;
  if (stationary > 0) {
    if (is_attacker) {
      std::vector<int> target_nodes;
      for (const auto& t : targets) target_nodes.push_back(t.node_id);
      std::sort(target_nodes.begin(), target_nodes.end());
      target_nodes.erase(std::unique(target_nodes.begin(), target_nodes.end()),
                         target_nodes.end());
      stationary_tuples.push_back(detail::combinations(target_nodes, stationary));
      if (stationary_tuples.back().empty())
        throw std::invalid_argument(
            "generate_player_actions: more stationary attackers than targets");
    } else {
      std::vector<std::vector<std::vector<int>>> lists;
      std::vector<std::vector<int>> per_resource;
      for (int r = 0; r < stationary; ++r) {
        std::vector<int> placements;
        if (r < static_cast<int>(config.stationary_defender_placements.size()) &&
            !config.stationary_defender_placements[r].empty())
          placements = config.stationary_defender_placements[r];
        else
          placements = graph.node_ids();
        std::sort(placements.begin(), placements.end());
        per_resource.push_back(std::move(placements));
      }
      stationary_tuples.push_back(detail::cartesian_product(per_resource));
    }
  }

  // Combine moving path tuples with stationary node tuples.
  std::vector<std::vector<std::vector<int>>> path_tuples =
      moving > 0 ? detail::cartesian_product(moving_paths)
                 : std::vector<std::vector<std::vector<int>>>{{}};
  std::vector<std::vector<int>> stat_list =
      stationary > 0 ? stationary_tuples[0] : std::vector<std::vector<int>>{{}};

  std::vector<ActionMatrix> actions;
  actions.reserve(path_tuples.size() * stat_list.size());
  for (const auto& paths : path_tuples) {
    for (const auto& nodes : stat_list) {
      ActionMatrix a;
      for (const auto& p : paths) {
        a.positions.push_back(p);
        a.resource_kinds.push_back(ResourceKind::moving);
      }
      for (int node : nodes) {
        a.positions.emplace_back(T, node);
        a.resource_kinds.push_back(ResourceKind::stationary);
      }
      actions.push_back(std::move(a));
    }
  }
  return actions;
}

}  // namespace sgkit

#endif  // SGKIT_PATHS_HPP
