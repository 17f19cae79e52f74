#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "sgkit/paths.hpp"
#include "test_support.hpp"

using namespace sgkit;
using test_support::make_graph;

namespace {

std::vector<std::vector<int>> sorted(std::vector<std::vector<int>> paths) {
  std::sort(paths.begin(), paths.end());
  return paths;
}

}  // namespace

TEST_CASE("two-node graph with waiting enumerates all sequences from the start") {
  auto g = make_graph(2, {{0, 1}});
  auto paths = generate_paths(g, {0}, {0, 1}, 3, true, false);
  REQUIRE(paths.size() == 4);  // complete transition graph: 2^(T-1)
  for (const auto& p : paths) REQUIRE(p.front() == 0);
}

TEST_CASE("force_return keeps only walks that end at their origin") {
  auto g = make_graph(2, {{0, 1}});
  auto paths = sorted(generate_paths(g, {0}, {}, 3, true, true));
  REQUIRE(paths == std::vector<std::vector<int>>{{0, 0, 0}, {0, 1, 0}});
}

TEST_CASE("dead ends force a wait even when waiting is disallowed") {
  auto g = make_graph(1, {});
  auto paths = generate_paths(g, {0}, {0}, 2, false, false);
  REQUIRE(paths == std::vector<std::vector<int>>{{0, 0}});
}

TEST_CASE("generate_paths rejects horizons below one") {
  auto g = make_graph(2, {{0, 1}});
  REQUIRE_THROWS_AS(generate_paths(g, {0}, {1}, 0, true, false), std::invalid_argument);
}

TEST_CASE("empty start and end sets default to all nodes") {
  auto g = make_graph(3, {{0, 1}, {1, 2}});
  auto all = generate_paths(g, {}, {}, 2, true, false);
  auto explicit_sets = generate_paths(g, {0, 1, 2}, {0, 1, 2}, 2, true, false);
  REQUIRE(sorted(all) == sorted(explicit_sets));
}

TEST_CASE("self-loop plus waiting does not duplicate paths") {
  std::vector<int> ids{0};
  std::vector<Coord> coords{{0.0, 0.0}};
  DirectedGameGraph g(ids, coords, {{0, 0}});
  auto paths = generate_paths(g, {0}, {0}, 3, true, false);
  REQUIRE(paths.size() == 1);
}

TEST_CASE("enumeration equals the naive |V|^T filter on random graphs") {
  RngStream rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 2 + static_cast<int>(rng.uniform_index(5));
    auto g = test_support::random_symmetric_graph(n, 0.4, rng);
    int T = 1 + static_cast<int>(rng.uniform_index(5));
    bool wait = rng.uniform01() < 0.5;
    bool ret = rng.uniform01() < 0.5;
    std::vector<int> starts{0};
    auto expected = test_support::naive_paths(g, starts, {}, T, wait, ret);
    auto actual = sorted(generate_paths(g, starts, {}, T, wait, ret));
    REQUIRE(actual == expected);
  }
}

TEST_CASE("one stationary attacker picks each target node") {
  auto g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  GameConfig cfg;
  cfg.num_timesteps = 3;
  cfg.stationary_attackers = 1;
  std::vector<TargetSpec> targets{{1, 1.0}, {2, 2.0}, {3, 3.0}};
  auto actions = generate_player_actions(g, cfg, Player::attacker, targets);
  REQUIRE(actions.size() == 3);
  for (const auto& a : actions) {
    REQUIRE(a.num_resources() == 1);
    REQUIRE(a.resource_kinds[0] == ResourceKind::stationary);
    REQUIRE(a.positions[0][0] == a.positions[0][2]);
  }
}

TEST_CASE("joint action count is the product of per-resource path counts") {
  // Path graph 0-1 with T=2 and waiting: each defender from node 0 has
  // paths [0,0] and [0,1].
  auto g = make_graph(2, {{0, 1}});
  GameConfig cfg;
  cfg.num_timesteps = 2;
  cfg.moving_defenders = 2;
  cfg.defender_start_sets = {{0}, {0}};
  cfg.defender_end_sets = {{}, {}};
  auto actions = generate_player_actions(g, cfg, Player::defender, {});
  REQUIRE(actions.size() == 4);
}

TEST_CASE("defender action count matches generate_paths on the wait graph") {
  auto g = make_graph(2, {{0, 1}});
  GameConfig cfg;
  cfg.num_timesteps = 3;
  cfg.moving_defenders = 1;
  cfg.defender_start_sets = {{0}};
  auto actions = generate_player_actions(g, cfg, Player::defender, {});
  REQUIRE(actions.size() == generate_paths(g, {0}, {}, 3, true, false).size());
}

TEST_CASE("mismatched start-set length raises") {
  auto g = make_graph(2, {{0, 1}});
  GameConfig cfg;
  cfg.num_timesteps = 2;
  cfg.moving_defenders = 2;
  cfg.defender_start_sets = {{0}};  // one set for two resources
  REQUIRE_THROWS_AS(generate_player_actions(g, cfg, Player::defender, {}),
                    std::invalid_argument);
}

TEST_CASE("action-count law holds for random configurations") {
  RngStream rng(19);
  for (int trial = 0; trial < 6; ++trial) {
    int n = 3 + static_cast<int>(rng.uniform_index(3));
    auto g = test_support::random_symmetric_graph(n, 0.5, rng, true);
    GameConfig cfg;
    cfg.num_timesteps = 2 + static_cast<int>(rng.uniform_index(2));
    cfg.moving_defenders = 2;
    cfg.defender_start_sets = {{0}, {1 % n}};
    auto actions = generate_player_actions(g, cfg, Player::defender, {});
    std::size_t expected = 1;
    for (int r = 0; r < 2; ++r)
      expected *= generate_paths(g, cfg.defender_start_sets[r], {}, cfg.num_timesteps,
                                 cfg.allow_wait, cfg.force_return)
                      .size();
    REQUIRE(actions.size() == expected);
  }
}

TEST_CASE("stationary defenders use cartesian placement products") {
  auto g = make_graph(3, {{0, 1}, {1, 2}});
  GameConfig cfg;
  cfg.num_timesteps = 2;
  cfg.stationary_defenders = 2;
  cfg.stationary_defender_placements = {{0, 1}, {1, 2}};
  auto actions = generate_player_actions(g, cfg, Player::defender, {});
  REQUIRE(actions.size() == 4);  // 2 x 2, repetition across resources allowed
}

TEST_CASE("two stationary attackers enumerate target subsets") {
  auto g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  GameConfig cfg;
  cfg.num_timesteps = 2;
  cfg.stationary_attackers = 2;
  std::vector<TargetSpec> targets{{0, 1.0}, {2, 1.0}, {3, 1.0}};
  auto actions = generate_player_actions(g, cfg, Player::attacker, targets);
  REQUIRE(actions.size() == 3);  // C(3,2)
  std::set<std::vector<int>> seen;
  for (const auto& a : actions) seen.insert({a.positions[0][0], a.positions[1][0]});
  REQUIRE(seen == std::set<std::vector<int>>{{0, 2}, {0, 3}, {2, 3}});
}
