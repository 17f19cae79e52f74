// Shared test fixtures and independent oracles. Everything here stays
// deliberately naive: oracles must not share logic with the library
// implementations they check.

#ifndef SGKIT_TEST_SUPPORT_HPP
#define SGKIT_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "sgkit/common.hpp"
#include "sgkit/graph.hpp"
#include "sgkit/instance.hpp"

namespace test_support {

using sgkit::Coord;
using sgkit::DirectedGameGraph;
using sgkit::RngStream;

inline DirectedGameGraph make_graph(int num_nodes,
                                    const std::vector<std::pair<int, int>>& undirected_edges,
                                    bool symmetric = true) {
  std::vector<int> ids(num_nodes);
  std::vector<Coord> coords(num_nodes);
  for (int i = 0; i < num_nodes; ++i) {
    ids[i] = i;
    coords[i] = {static_cast<double>(i), 0.0};
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : undirected_edges) {
    edges.emplace_back(u, v);
    if (symmetric) edges.emplace_back(v, u);
  }
  return DirectedGameGraph(std::move(ids), std::move(coords), edges);
}

/// Random graph on n nodes; each unordered pair becomes a bidirectional
/// edge with probability p (plus a Hamiltonian-ish chain so most graphs
/// stay connected when chain=true).
inline DirectedGameGraph random_symmetric_graph(int n, double p, RngStream& rng,
                                                bool chain = false) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform01() < p) edges.emplace_back(u, v);
  if (chain)
    for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return make_graph(n, edges);
}

/// Naive path oracle: filters all |V|^T node sequences by the same
/// contract generate_paths promises (edge-or-wait steps, forced wait at
/// dead ends, end rule by force_return), written as a direct scan.
inline std::vector<std::vector<int>> naive_paths(const DirectedGameGraph& graph,
                                                 std::vector<int> starts, std::vector<int> ends,
                                                 int T, bool allow_wait, bool force_return) {
  if (starts.empty()) starts = graph.node_ids();
  if (ends.empty()) ends = graph.node_ids();
  std::set<int> start_set(starts.begin(), starts.end());
  std::set<int> end_set(ends.begin(), ends.end());
  const auto& ids = graph.node_ids();
  std::vector<std::vector<int>> out;
  std::vector<int> seq(T, 0);

  std::function<void(int)> rec = [&](int pos) {
    if (pos == T) {
      if (!start_set.count(seq.front())) return;
      for (int i = 0; i + 1 < T; ++i) {
        int u = seq[i], v = seq[i + 1];
        auto nbrs = graph.neighbors(u);
        bool can_wait = allow_wait || nbrs.empty();
        bool edge = std::find(nbrs.begin(), nbrs.end(), v) != nbrs.end();
        if (!(edge || (can_wait && u == v))) return;
      }
      if (force_return ? seq.back() == seq.front() : end_set.count(seq.back()) != 0)
        out.push_back(seq);
      return;
    }
    for (int id : ids) {
      seq[pos] = id;
      rec(pos + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Tour-existence oracle: minimal walk cost (edges plus dwell timesteps)
/// to leave home, dwell delta consecutive timesteps at every target in
/// the subset, and return home. Breadth-first over (node, dwelled-mask)
/// states with unit edge moves and a "dwell here" transition.
inline int min_tour_cost(const DirectedGameGraph& graph, int home,
                         const std::vector<int>& subset, int delta) {
  const int k = static_cast<int>(subset.size());
  const int full = (1 << k) - 1;
  std::map<int, int> target_bit;
  for (int i = 0; i < k; ++i) target_bit[subset[i]] = i;

  const std::size_t n = graph.num_nodes();
  std::vector<std::vector<int>> dist(n, std::vector<int>(full + 1, -1));
  std::size_t h = graph.index_of(home);
  dist[h][0] = 0;
  // Dijkstra-style expansion with nonnegative integer weights.
  using State = std::pair<int, std::pair<std::size_t, int>>;
  std::set<State> frontier{{0, {h, 0}}};
  while (!frontier.empty()) {
    auto [cost, state] = *frontier.begin();
    frontier.erase(frontier.begin());
    auto [node, mask] = state;
    if (dist[node][mask] != cost) continue;
    int node_id = graph.node_id(node);
    auto relax = [&](std::size_t nn, int nm, int nc) {
      if (dist[nn][nm] < 0 || nc < dist[nn][nm]) {
        dist[nn][nm] = nc;
        frontier.insert({nc, {nn, nm}});
      }
    };
    auto bit = target_bit.find(node_id);
    if (bit != target_bit.end() && !(mask & (1 << bit->second)))
      relax(node, mask | (1 << bit->second), cost + delta - 1);
    for (int nbr : graph.neighbor_indices(node)) relax(nbr, mask, cost + 1);
  }
  return dist[h][full];  // -1 when unreachable
}

/// Random zero-sum matrix with entries in [lo, hi].
inline std::vector<std::vector<double>> random_matrix(int n, int m, RngStream& rng,
                                                      double lo = -1.0, double hi = 1.0) {
  std::vector<std::vector<double>> A(n, std::vector<double>(m));
  for (auto& row : A)
    for (double& v : row) v = rng.uniform(lo, hi);
  return A;
}

/// Synthetic animal tracks: `clusters` tight groups placed on a coarse
/// lattice inside the bbox, observations split across animals.
inline sgkit::TrackDataset synthetic_tracks(const sgkit::BoundingBox& bbox, int clusters,
                                            int obs_per_cluster, int num_animals,
                                            std::uint64_t seed) {
  sgkit::TrackDataset out;
  RngStream rng(seed);
  double dlat = bbox.lat_max - bbox.lat_min;
  double dlon = bbox.lon_max - bbox.lon_min;
  int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(clusters))));
  int obs_id = 0;
  for (int c = 0; c < clusters; ++c) {
    int r = c / side, q = c % side;
    double clat = bbox.lat_min + dlat * (r + 0.5) / side;
    double clon = bbox.lon_min + dlon * (q + 0.5) / side;
    for (int o = 0; o < obs_per_cluster; ++o) {
      sgkit::TrackRecord rec;
      rec.animal_id = "animal" + std::to_string(obs_id % num_animals);
      rec.lat = clat + (rng.uniform01() - 0.5) * dlat * 0.02;
      rec.lon = clon + (rng.uniform01() - 0.5) * dlon * 0.02;
      rec.timestamp = "2005-01-01T00:00:00Z";
      out.records.push_back(std::move(rec));
      ++obs_id;
    }
  }
  return out;
}

}  // namespace test_support

#endif  // SGKIT_TEST_SUPPORT_HPP
