#ifndef SGKIT_GRAPH_HPP
#define SGKIT_GRAPH_HPP

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace sgkit {

struct Coord {
  double lat = 0.0;
  double lon = 0.0;
};

enum class DistanceMetric { hop_count, euclidean_on_coords };

constexpr int kUnreachable = -1;

/// Directed game environment. Node ids are arbitrary unique integers;
/// internally they map to dense indices for adjacency and BFS work.
class DirectedGameGraph {
 public:
  DirectedGameGraph() = default;

  DirectedGameGraph(std::vector<int> node_ids, std::vector<Coord> coords,
                    const std::vector<std::pair<int, int>>& edges,
                    DistanceMetric metric = DistanceMetric::hop_count)
      : ids_(std::move(node_ids)), coords_(std::move(coords)), metric_(metric) {
    if (coords_.size() != ids_.size())
      throw std::invalid_argument("graph: coords/ids size mismatch");
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      if (!index_.emplace(ids_[i], i).second)
        throw std::invalid_argument("graph: duplicate node id");
    }
    out_.assign(ids_.size(), {});
    for (const auto& [u, v] : edges) {
      auto iu = index_.find(u), iv = index_.find(v);
      if (iu == index_.end() || iv == index_.end())
        throw std::invalid_argument("graph: edge endpoint not a node");
      out_[iu->second].push_back(static_cast<int>(iv->second));
    }
    for (auto& nbrs : out_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
  }

  std::size_t num_nodes() const { return ids_.size(); }
  const std::vector<int>& node_ids() const { return ids_; }
  int node_id(std::size_t idx) const { return ids_[idx]; }
  const Coord& coord(std::size_t idx) const { return coords_[idx]; }
  DistanceMetric metric() const { return metric_; }
  void set_metric(DistanceMetric m) { metric_ = m; }

  bool has_node(int id) const { return index_.count(id) != 0; }

  std::size_t index_of(int id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw std::invalid_argument("graph: unknown node id");
    return it->second;
  }

  /// Out-neighbours as node ids, ascending.
  std::vector<int> neighbors(int id) const {
    std::vector<int> out;
    for (int idx : out_[index_of(id)]) out.push_back(ids_[idx]);
    std::sort(out.begin(), out.end());
    return out;
  }

  const std::vector<int>& neighbor_indices(std::size_t idx) const { return out_[idx]; }

  bool has_edge(int u, int v) const {
    const auto& nbrs = out_[index_of(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), static_cast<int>(index_of(v)));
  }

  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t u = 0; u < out_.size(); ++u)
      for (int v : out_[u]) out.emplace_back(ids_[u], ids_[v]);
    return out;
  }

  /// BFS hop distances from `source`; kUnreachable where no path exists.
  std::vector<int> hop_distances_from(int source) const {
    std::vector<int> dist(num_nodes(), kUnreachable);
    std::deque<std::size_t> queue;
    std::size_t s = index_of(source);
    dist[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (int v : out_[u]) {
        if (dist[v] == kUnreachable) {
          dist[v] = dist[u] + 1;
          queue.push_back(static_cast<std::size_t>(v));
        }
      }
    }
    return dist;
  }

  int hop_distance(int from, int to) const {
    return hop_distances_from(from)[index_of(to)];
  }

  /// One shortest path (node ids, inclusive) or empty when unreachable.
  /// Ties resolved toward the lowest predecessor index, so output is stable.
  std::vector<int> shortest_path(int from, int to) const {
    std::size_t s = index_of(from), t = index_of(to);
    std::vector<int> dist(num_nodes(), kUnreachable);
    std::vector<int> pred(num_nodes(), -1);
    std::deque<std::size_t> queue;
    dist[s] = 0;
    queue.push_back(s);
    while (!queue.empty() && dist[t] == kUnreachable) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (int v : out_[u]) {
        if (dist[v] == kUnreachable) {
          dist[v] = dist[u] + 1;
          pred[v] = static_cast<int>(u);
          queue.push_back(static_cast<std::size_t>(v));
        }
      }
    }
    if (dist[t] == kUnreachable) return {};
    std::vector<int> path;
    for (int cur = static_cast<int>(t); cur != -1; cur = pred[cur]) path.push_back(ids_[cur]);
    std::reverse(path.begin(), path.end());
    return path;
  }

  /// Inter-node distance under the configured metric.
  double distance(int u, int v) const {
    if (metric_ == DistanceMetric::hop_count) {
      int d = hop_distance(u, v);
      return d == kUnreachable ? std::numeric_limits<double>::infinity()
                               : static_cast<double>(d);
    }
    const Coord& a = coords_[index_of(u)];
    const Coord& b = coords_[index_of(v)];
    return std::hypot(a.lat - b.lat, a.lon - b.lon);
  }

 private:
  std::vector<int> ids_;
  std::vector<Coord> coords_;
  std::unordered_map<int, std::size_t> index_;
  std::vector<std::vector<int>> out_;
  DistanceMetric metric_ = DistanceMetric::hop_count;
};

}  // namespace sgkit

#endif  // SGKIT_GRAPH_HPP
