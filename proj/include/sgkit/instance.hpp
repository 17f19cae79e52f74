#ifndef SGKIT_INSTANCE_HPP
#define SGKIT_INSTANCE_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgkit/common.hpp"
#include "sgkit/evaluate.hpp"
#include "sgkit/game_types.hpp"
#include "sgkit/geo.hpp"
#include "sgkit/graph.hpp"
#include "sgkit/paths.hpp"
#include "sgkit/schedules.hpp"

namespace sgkit {

// ---------------------------------------------------------------------------
// Input datasets (simplified text-format ingestion).

struct TrackRecord {
  std::string animal_id;
  double lat = 0.0;
  double lon = 0.0;
  std::string timestamp;
};

struct TrackDataset {
  std::vector<TrackRecord> records;
};

struct FeatureRecord {
  std::string id;
  std::string type;
  double lat = 0.0;
  double lon = 0.0;
};

struct FeatureDataset {
  std::vector<FeatureRecord> records;
  std::map<std::string, double> weights;  // type -> W
  int dropped_unknown_types = 0;
};

struct PopulationBlock {
  std::string geoid;
  long population = 0;
  std::vector<Coord> polygon;
};

struct PopulationBlocks {
  std::vector<PopulationBlock> records;
};

// ---------------------------------------------------------------------------
// Grid construction.

struct GridSpec {
  BoundingBox bbox;
  int rows = 1;
  int cols = 1;

  int node_id(int r, int c) const { return r * cols + c; }

  Coord center(int r, int c) const {
    double dlat = (bbox.lat_max - bbox.lat_min) / rows;
    double dlon = (bbox.lon_max - bbox.lon_min) / cols;
    return {bbox.lat_min + (r + 0.5) * dlat, bbox.lon_min + (c + 0.5) * dlon};
  }

  /// Containing cell of a lat/lon point, clamped to the grid edge.
  std::pair<int, int> cell_of(double lat, double lon) const {
    double fr = (lat - bbox.lat_min) / (bbox.lat_max - bbox.lat_min) * rows;
    double fc = (lon - bbox.lon_min) / (bbox.lon_max - bbox.lon_min) * cols;
    int r = std::clamp(static_cast<int>(fr), 0, rows - 1);
    int c = std::clamp(static_cast<int>(fc), 0, cols - 1);
    return {r, c};
  }
};

/// rows x cols nodes at cell centres with 4-neighbour bidirectional
/// edges.
inline DirectedGameGraph build_grid_graph(const BoundingBox& bbox, int rows, int cols) {
  bbox.validate();
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("build_grid_graph: rows/cols must be >= 1");
  GridSpec spec{bbox, rows, cols};
  std::vector<int> ids;
  std::vector<Coord> coords;
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      ids.push_back(spec.node_id(r, c));
      coords.push_back(spec.center(r, c));
      if (r + 1 < rows) {
        edges.emplace_back(spec.node_id(r, c), spec.node_id(r + 1, c));
        edges.emplace_back(spec.node_id(r + 1, c), spec.node_id(r, c));
      }
      if (c + 1 < cols) {
        edges.emplace_back(spec.node_id(r, c), spec.node_id(r, c + 1));
        edges.emplace_back(spec.node_id(r, c + 1), spec.node_id(r, c));
      }
    }
  return DirectedGameGraph(std::move(ids), std::move(coords), edges,
                           DistanceMetric::hop_count);
}

/// Nearest graph node to a lat/lon point under the equirectangular
/// metric; ties break to the lowest node id.
inline int snap_to_nearest_node(const DirectedGameGraph& graph, double lat, double lon,
                                const geo::Projection& proj) {
  int best = -1;
  double best_d = kInf;
  for (std::size_t i = 0; i < graph.num_nodes(); ++i) {
    const Coord& c = graph.coord(i);
    double d = geo::distance_m(lat, lon, c.lat, c.lon, proj);
    int id = graph.node_id(i);
    if (d < best_d - 1e-9 || (std::abs(d - best_d) <= 1e-9 && (best < 0 || id < best))) {
      best_d = d;
      best = id;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// K-means (Lloyd's algorithm, seeded initial centres from observations).

struct KMeansResult {
  std::vector<Coord> centers;
  std::vector<int> assignment;
  std::vector<int> cluster_sizes;
};

inline KMeansResult kmeans(const std::vector<Coord>& points, int k, std::uint64_t seed,
                           int max_iters = 100, double tol = 1e-9) {
  if (k < 1) throw std::invalid_argument("kmeans: k must be >= 1");
  if (static_cast<std::size_t>(k) > points.size())
    throw std::invalid_argument("kmeans: k exceeds number of observations");

  RngStream rng(seed);
  KMeansResult res;
  for (std::size_t idx : rng.sample_without_replacement(points.size(), k))
    res.centers.push_back(points[idx]);
  res.assignment.assign(points.size(), 0);
  res.cluster_sizes.assign(k, 0);

  for (int iter = 0; iter < max_iters; ++iter) {
    for (std::size_t p = 0; p < points.size(); ++p) {
      int best = 0;
      double best_d = kInf;
      for (int c = 0; c < k; ++c) {
        double d = std::hypot(points[p].lat - res.centers[c].lat,
                              points[p].lon - res.centers[c].lon);
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      res.assignment[p] = best;
    }
    std::vector<Coord> next(k, Coord{0.0, 0.0});
    std::vector<int> counts(k, 0);
    for (std::size_t p = 0; p < points.size(); ++p) {
      next[res.assignment[p]].lat += points[p].lat;
      next[res.assignment[p]].lon += points[p].lon;
      ++counts[res.assignment[p]];
    }
    double shift = 0.0;
    for (int c = 0; c < k; ++c) {
      if (counts[c] == 0) {
        next[c] = res.centers[c];  // empty cluster keeps its centre
        continue;
      }
      next[c].lat /= counts[c];
      next[c].lon /= counts[c];
      double scale = std::max(1.0, std::hypot(res.centers[c].lat, res.centers[c].lon));
      shift = std::max(shift, std::hypot(next[c].lat - res.centers[c].lat,
                                         next[c].lon - res.centers[c].lon) /
                                  scale);
    }
    res.centers = std::move(next);
    res.cluster_sizes = counts;
    if (shift < tol) break;
  }
  // Final assignment pass keeps sizes consistent with the final centres.
  std::fill(res.cluster_sizes.begin(), res.cluster_sizes.end(), 0);
  for (std::size_t p = 0; p < points.size(); ++p) {
    int best = 0;
    double best_d = kInf;
    for (int c = 0; c < k; ++c) {
      double d =
          std::hypot(points[p].lat - res.centers[c].lat, points[p].lon - res.centers[c].lon);
      if (d < best_d) {
        best_d = d;
        best = c;
      }
    }
    res.assignment[p] = best;
    ++res.cluster_sizes[best];
  }
  return res;
}

// ---------------------------------------------------------------------------
// GSG target scoring.

namespace detail {

inline std::vector<TrackRecord> filter_tracks(const TrackDataset& tracks,
                                              const BoundingBox& bbox) {
  std::vector<TrackRecord> in;
  for (const auto& r : tracks.records)
    if (bbox.contains(r.lat, r.lon)) in.push_back(r);
  return in;
}

inline int count_unique_animals(const std::vector<TrackRecord>& records) {
  std::set<std::string> ids;
  for (const auto& r : records) ids.insert(r.animal_id);
  return static_cast<int>(ids.size());
}

/// Builds a base target from a score: zero-sum value and the general-sum
/// uncovered payoffs; covered payoffs start at zero until scaled.
inline TargetSpec base_target(int node_id, double score, double attacker_scale,
                              double defender_scale) {
  TargetSpec t;
  t.node_id = node_id;
  t.value = score;
  t.u_a_uncovered = score * attacker_scale;
  t.u_d_uncovered = -score * defender_scale;
  t.u_a_covered = 0.0;
  t.u_d_covered = 0.0;
  return t;
}

}  // namespace detail

/// Centroid scoring: k-means over in-bbox observations, each centroid
/// snapped to its nearest grid node; score = cluster_size *
/// (num_animals / num_total_observations). Centroids landing on the same
/// node merge by summing scores.
inline std::vector<TargetSpec> score_targets_centroid(const TrackDataset& tracks, int k,
                                                      const BoundingBox& bbox,
                                                      const DirectedGameGraph& grid,
                                                      std::uint64_t seed,
                                                      double attacker_scale = 1.0,
                                                      double defender_scale = 1.0) {
  bbox.validate();
  auto in = detail::filter_tracks(tracks, bbox);
  if (in.empty()) throw std::invalid_argument("score_targets_centroid: no in-bbox tracks");
  std::vector<Coord> pts;
  for (const auto& r : in) pts.push_back({r.lat, r.lon});
  KMeansResult km = kmeans(pts, k, seed);

  const double ratio =
      static_cast<double>(detail::count_unique_animals(in)) / static_cast<double>(in.size());
  geo::Projection proj(bbox.mean_lat());
  std::map<int, double> score_by_node;
  for (int c = 0; c < k; ++c) {
    if (km.cluster_sizes[c] == 0) continue;
    int node = snap_to_nearest_node(grid, km.centers[c].lat, km.centers[c].lon, proj);
    score_by_node[node] += km.cluster_sizes[c] * ratio;
  }
  std::vector<TargetSpec> targets;
  for (const auto& [node, score] : score_by_node)
    targets.push_back(detail::base_target(node, score, attacker_scale, defender_scale));
  return targets;
}

/// Density scoring: per-cell observation counts scaled by the
/// animal-to-observation ratio; empty cells yield no target.
inline std::vector<TargetSpec> score_targets_density(const TrackDataset& tracks,
                                                     const GridSpec& grid_spec,
                                                     double attacker_scale = 1.0,
                                                     double defender_scale = 1.0) {
  grid_spec.bbox.validate();
  auto in = detail::filter_tracks(tracks, grid_spec.bbox);
  if (in.empty()) throw std::invalid_argument("score_targets_density: no in-bbox tracks");
  const double ratio =
      static_cast<double>(detail::count_unique_animals(in)) / static_cast<double>(in.size());
  std::map<int, int> counts;
  for (const auto& r : in) {
    auto [row, col] = grid_spec.cell_of(r.lat, r.lon);
    counts[grid_spec.node_id(row, col)] += 1;
  }
  std::vector<TargetSpec> targets;
  for (const auto& [node, count] : counts)
    targets.push_back(detail::base_target(node, count * ratio, attacker_scale, defender_scale));
  return targets;
}

/// Escape-line proximity bonus on the attacker side:
/// u_a *= 1 + alpha * (1 - (d_i - d_min)/(d_max - d_min)), with d_i the
/// perpendicular distance from the target to the line. Equidistant
/// layouts (d_max == d_min) leave values unchanged.
inline void apply_escape_line(std::vector<TargetSpec>& targets,
                              const DirectedGameGraph& graph, const Coord& line_a,
                              const Coord& line_b, double alpha,
                              const geo::Projection& proj) {
  if (targets.empty()) return;
  std::vector<double> d(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Coord& c = graph.coord(graph.index_of(targets[i].node_id));
    d[i] = geo::point_line_distance_m(c.lat, c.lon, line_a, line_b, proj);
  }
  double dmin = *std::min_element(d.begin(), d.end());
  double dmax = *std::max_element(d.begin(), d.end());
  if (dmax - dmin < 1e-12) return;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    double frac = (d[i] - dmin) / (dmax - dmin);
    targets[i].u_a_uncovered *= 1.0 + alpha * (1.0 - frac);
  }
}

/// Escape-point variant: u_a *= 1 + alpha * (d_max - d_i)/(d_max - d_min).
inline void apply_escape_point(std::vector<TargetSpec>& targets,
                               const DirectedGameGraph& graph, const Coord& point,
                               double alpha, const geo::Projection& proj) {
  if (targets.empty()) return;
  std::vector<double> d(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Coord& c = graph.coord(graph.index_of(targets[i].node_id));
    d[i] = geo::distance_m(c.lat, c.lon, point.lat, point.lon, proj);
  }
  double dmin = *std::min_element(d.begin(), d.end());
  double dmax = *std::max_element(d.begin(), d.end());
  if (dmax - dmin < 1e-12) return;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    double frac = (dmax - d[i]) / (dmax - dmin);
    targets[i].u_a_uncovered *= 1.0 + alpha * frac;
  }
}

// ---------------------------------------------------------------------------
// ISG target scoring.

enum class PopulationMode { block, radius };

/// Population-weighted infrastructure scores:
/// raw_score = W * (ln(P+1))^alpha_pop, with P the containing-block
/// population (block mode) or the summed population of blocks
/// intersecting a radius_m buffer (radius mode). Features map to their
/// nearest street-graph node; co-located features sum their raw scores.
inline std::vector<TargetSpec> score_infra_targets(
    const FeatureDataset& features, const PopulationBlocks& blocks, PopulationMode mode,
    double radius_m, double alpha_pop, const DirectedGameGraph& street_graph,
    const BoundingBox& bbox, double attacker_scale = 1.0, double defender_scale = 1.0,
    int* dropped_unknown = nullptr) {
  bbox.validate();
  geo::Projection proj(bbox.mean_lat());
  int dropped = 0;
  std::map<int, double> score_by_node;
  for (const auto& f : features.records) {
    if (!bbox.contains(f.lat, f.lon)) continue;
    auto wit = features.weights.find(f.type);
    if (wit == features.weights.end()) {
      ++dropped;
      continue;
    }
    double population = 0.0;
    if (mode == PopulationMode::block) {
      for (const auto& b : blocks.records) {
        if (geo::point_in_polygon(f.lat, f.lon, b.polygon)) {
          population = static_cast<double>(b.population);
          break;
        }
      }
    } else {
      for (const auto& b : blocks.records)
        if (geo::point_polygon_distance_m(f.lat, f.lon, b.polygon, proj) <= radius_m)
          population += static_cast<double>(b.population);
    }
    double raw = wit->second * std::pow(std::log(population + 1.0), alpha_pop);
    int node = snap_to_nearest_node(street_graph, f.lat, f.lon, proj);
    score_by_node[node] += raw;
  }
  if (dropped_unknown) *dropped_unknown = dropped;
  std::vector<TargetSpec> targets;
  for (const auto& [node, score] : score_by_node)
    targets.push_back(detail::base_target(node, score, attacker_scale, defender_scale));
  return targets;
}

// ---------------------------------------------------------------------------
// Assembled game instances.

struct GameInstance {
  DirectedGameGraph graph;
  std::vector<TargetSpec> targets;
  GameConfig config;
  std::vector<std::vector<int>> defender_base_nodes;  // per defender
  bool general_sum = false;
  bool schedule_form = false;
  bool simple_schedules_only = false;
  std::optional<BimatrixGame> matrices;
  std::optional<ScheduleFormGame> sfg;
};

/// Randomized-target-values baseline: draws each target's values
/// uniformly within the observed range of the real instance's values,
/// keeping covered payoffs on the penalized side (u_a_cov <= u_a_unc,
/// u_d_cov >= u_d_unc).
inline std::vector<TargetSpec> randomize_target_values(const std::vector<TargetSpec>& real,
                                                       RngStream& rng) {
  if (real.empty()) return {};
  double v_lo = kInf, v_hi = -kInf;
  double a_lo = kInf, a_hi = -kInf;
  double d_lo = kInf, d_hi = -kInf;
  for (const auto& t : real) {
    v_lo = std::min(v_lo, t.value);
    v_hi = std::max(v_hi, t.value);
    a_lo = std::min({a_lo, t.u_a_covered, t.u_a_uncovered});
    a_hi = std::max({a_hi, t.u_a_covered, t.u_a_uncovered});
    d_lo = std::min({d_lo, t.u_d_covered, t.u_d_uncovered});
    d_hi = std::max({d_hi, t.u_d_covered, t.u_d_uncovered});
  }
  std::vector<TargetSpec> out = real;
  for (auto& t : out) {
    t.value = rng.uniform(v_lo, v_hi);
    double a1 = rng.uniform(a_lo, a_hi), a2 = rng.uniform(a_lo, a_hi);
    t.u_a_covered = std::min(a1, a2);
    t.u_a_uncovered = std::max(a1, a2);
    double d1 = rng.uniform(d_lo, d_hi), d2 = rng.uniform(d_lo, d_hi);
    t.u_d_covered = std::max(d1, d2);
    t.u_d_uncovered = std::min(d1, d2);
  }
  return out;
}

struct GsgParams {
  BoundingBox bbox;
  std::string scoring = "centroid";  // or "density"
  int num_clusters = 10;
  int rows = 7;
  int cols = 7;
  std::optional<std::pair<Coord, Coord>> escape_line;
  double alpha_escape = 1.0;
  double attacker_value_scale = 1.0;
  double defender_value_scale = 1.0;
  double attacker_penalty_factor = 1.0;
  double defender_penalty_factor = 1.0;
  std::vector<std::vector<Coord>> home_bases;  // per defender, allowed bases
  int num_attackers = 1;
  int num_defenders = 1;
  int num_timesteps = 7;
  int defense_time_threshold = 1;
  double capture_radius = 0.0;
  bool allow_wait = true;
  bool force_return = false;
  bool general_sum = false;
  bool schedule_form = false;
  bool simple_schedules = false;
  double defender_step_cost = 0.0;
  bool randomize_target_values = false;
  bool build_matrices = false;
};

namespace detail {

inline void assemble_instance(GameInstance& inst, int num_attackers, int num_defenders,
                              int num_timesteps, int delta, double capture_radius,
                              bool allow_wait, bool force_return, double step_cost,
                              bool general_sum, bool schedule_form, bool simple_schedules,
                              bool build_matrices, double apf, double dpf,
                              bool randomize_values, std::uint64_t seed) {
  if (inst.targets.empty()) throw std::invalid_argument("generate: zero targets");
  if (randomize_values) {
    RngStream rng = RngStream::derive(seed, 0x5247);
    inst.targets = randomize_target_values(inst.targets, rng);
  }
  inst.targets = scale_target_utilities(inst.targets, apf, dpf);

  GameConfig& cfg = inst.config;
  cfg.num_timesteps = num_timesteps;
  cfg.stationary_attackers = num_attackers;
  cfg.moving_defenders = num_defenders;
  cfg.allow_wait = allow_wait;
  cfg.force_return = force_return;
  cfg.defender_step_cost = step_cost;
  cfg.protocol.defense_time_threshold = delta;
  cfg.protocol.capture_radius = capture_radius;
  for (const auto& bases : inst.defender_base_nodes) {
    cfg.defender_start_sets.push_back(bases);
    cfg.defender_end_sets.push_back(force_return ? bases : std::vector<int>{});
  }
  cfg.validate(inst.graph);

  inst.general_sum = general_sum;
  inst.schedule_form = schedule_form;
  inst.simple_schedules_only = simple_schedules;

  if (schedule_form) {
    inst.sfg = build_schedule_form_game(inst.graph, inst.targets, inst.defender_base_nodes,
                                        num_timesteps, delta, step_cost, simple_schedules);
    if (build_matrices) inst.matrices = schedule_game_matrix(*inst.sfg, general_sum);
  } else if (build_matrices) {
    auto defender_actions =
        generate_player_actions(inst.graph, cfg, Player::defender, inst.targets);
    auto attacker_actions =
        generate_player_actions(inst.graph, cfg, Player::attacker, inst.targets);
    inst.matrices = build_utility_matrix(defender_actions, attacker_actions, inst.targets,
                                         cfg.protocol, inst.graph, general_sum, step_cost);
  }
}

}  // namespace detail

/// Green security game: grid world over the bounding box, targets scored
/// from animal tracks, optional escape-line adjustment, defender bases
/// snapped to grid nodes.
inline GameInstance generate_gsg(const TrackDataset& tracks, const GsgParams& p,
                                 std::uint64_t seed) {
  p.bbox.validate();
  GameInstance inst;
  inst.graph = build_grid_graph(p.bbox, p.rows, p.cols);
  GridSpec spec{p.bbox, p.rows, p.cols};
  geo::Projection proj(p.bbox.mean_lat());

  if (p.scoring == "centroid")
    inst.targets = score_targets_centroid(tracks, p.num_clusters, p.bbox, inst.graph, seed,
                                          p.attacker_value_scale, p.defender_value_scale);
  else if (p.scoring == "density")
    inst.targets = score_targets_density(tracks, spec, p.attacker_value_scale,
                                         p.defender_value_scale);
  else
    throw std::invalid_argument("generate_gsg: scoring must be centroid or density");

  if (p.escape_line && p.general_sum)
    apply_escape_line(inst.targets, inst.graph, p.escape_line->first, p.escape_line->second,
                      p.alpha_escape, proj);

  if (static_cast<int>(p.home_bases.size()) != p.num_defenders)
    throw std::invalid_argument("generate_gsg: home_bases must list one set per defender");
  for (const auto& bases : p.home_bases) {
    std::vector<int> nodes;
    for (const Coord& b : bases) {
      if (!p.bbox.contains(b.lat, b.lon))
        throw std::invalid_argument("generate_gsg: home base outside bounding box");
      nodes.push_back(snap_to_nearest_node(inst.graph, b.lat, b.lon, proj));
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    inst.defender_base_nodes.push_back(std::move(nodes));
  }

  detail::assemble_instance(inst, p.num_attackers, p.num_defenders, p.num_timesteps,
                            p.defense_time_threshold, p.capture_radius, p.allow_wait,
                            p.force_return, p.defender_step_cost, p.general_sum,
                            p.schedule_form, p.simple_schedules, p.build_matrices,
                            p.attacker_penalty_factor, p.defender_penalty_factor,
                            p.randomize_target_values, seed);
  return inst;
}

struct IsgParams {
  BoundingBox bbox;
  PopulationMode mode = PopulationMode::block;
  double radius_m = 200.0;
  double alpha_pop = 1.0;
  std::optional<Coord> escape_point;
  double alpha_escape = 0.5;
  double attacker_value_scale = 1.0;
  double defender_value_scale = 1.0;
  double attacker_penalty_factor = 1.0;
  double defender_penalty_factor = 1.0;
  std::vector<std::vector<Coord>> home_bases;
  int num_attackers = 1;
  int num_defenders = 1;
  int num_timesteps = 7;
  int defense_time_threshold = 1;
  double capture_radius = 0.0;
  bool allow_wait = true;
  bool force_return = true;
  bool general_sum = false;
  bool schedule_form = false;
  bool simple_schedules = false;
  double defender_step_cost = 0.0;
  bool randomize_target_values = false;
  bool build_matrices = false;
};

/// Infrastructure security game on an ingested street graph.
inline GameInstance generate_isg(const FeatureDataset& features, const PopulationBlocks& blocks,
                                 DirectedGameGraph street_graph, const IsgParams& p,
                                 std::uint64_t seed) {
  p.bbox.validate();
  GameInstance inst;
  inst.graph = std::move(street_graph);
  geo::Projection proj(p.bbox.mean_lat());

  inst.targets = score_infra_targets(features, blocks, p.mode, p.radius_m, p.alpha_pop,
                                     inst.graph, p.bbox, p.attacker_value_scale,
                                     p.defender_value_scale);
  if (p.escape_point && p.general_sum)
    apply_escape_point(inst.targets, inst.graph, *p.escape_point, p.alpha_escape, proj);

  if (static_cast<int>(p.home_bases.size()) != p.num_defenders)
    throw std::invalid_argument("generate_isg: home_bases must list one set per defender");
  for (const auto& bases : p.home_bases) {
    std::vector<int> nodes;
    for (const Coord& b : bases) {
      if (!p.bbox.contains(b.lat, b.lon))
        throw std::invalid_argument("generate_isg: home base outside bounding box");
      nodes.push_back(snap_to_nearest_node(inst.graph, b.lat, b.lon, proj));
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    inst.defender_base_nodes.push_back(std::move(nodes));
  }

  detail::assemble_instance(inst, p.num_attackers, p.num_defenders, p.num_timesteps,
                            p.defense_time_threshold, p.capture_radius, p.allow_wait,
                            p.force_return, p.defender_step_cost, p.general_sum,
                            p.schedule_form, p.simple_schedules, p.build_matrices,
                            p.attacker_penalty_factor, p.defender_penalty_factor,
                            p.randomize_target_values, seed);
  return inst;
}

}  // namespace sgkit

#endif  // SGKIT_INSTANCE_HPP
