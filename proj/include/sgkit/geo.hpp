#ifndef SGKIT_GEO_HPP
#define SGKIT_GEO_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "sgkit/graph.hpp"

namespace sgkit {

struct BoundingBox {
  double lat_min = 0.0, lat_max = 0.0, lon_min = 0.0, lon_max = 0.0;

  void validate() const {
    if (!(lat_min < lat_max) || !(lon_min < lon_max))
      throw std::invalid_argument("bounding box: min must be below max");
  }

  bool contains(double lat, double lon) const {
    return lat >= lat_min && lat <= lat_max && lon >= lon_min && lon <= lon_max;
  }

  double mean_lat() const { return 0.5 * (lat_min + lat_max); }
};

namespace geo {

constexpr double kEarthRadiusM = 6371000.0;

inline double deg2rad(double d) { return d * M_PI / 180.0; }

/// Equirectangular projection to local metres around a reference
/// latitude; adequate at city/park scale.
struct Projection {
  double ref_lat_rad;
  explicit Projection(double ref_lat_deg) : ref_lat_rad(deg2rad(ref_lat_deg)) {}

  std::pair<double, double> to_xy(double lat, double lon) const {
    double x = kEarthRadiusM * deg2rad(lon) * std::cos(ref_lat_rad);
    double y = kEarthRadiusM * deg2rad(lat);
    return {x, y};
  }
};

inline double distance_m(double lat1, double lon1, double lat2, double lon2,
                         const Projection& proj) {
  auto [x1, y1] = proj.to_xy(lat1, lon1);
  auto [x2, y2] = proj.to_xy(lat2, lon2);
  return std::hypot(x1 - x2, y1 - y2);
}

/// Perpendicular distance from a point to the infinite line through two
/// points, in projected metres.
inline double point_line_distance_m(double lat, double lon, const Coord& a, const Coord& b,
                                    const Projection& proj) {
  auto [px, py] = proj.to_xy(lat, lon);
  auto [ax, ay] = proj.to_xy(a.lat, a.lon);
  auto [bx, by] = proj.to_xy(b.lat, b.lon);
  double dx = bx - ax, dy = by - ay;
  double len = std::hypot(dx, dy);
  if (len == 0.0) return std::hypot(px - ax, py - ay);
  return std::abs(dy * (px - ax) - dx * (py - ay)) / len;
}

/// Ray casting with on-edge points counted inside.
inline bool point_in_polygon(double lat, double lon, const std::vector<Coord>& polygon) {
  const std::size_t n = polygon.size();
  if (n < 3) return false;
  constexpr double kEps = 1e-12;
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    double yi = polygon[i].lat, xi = polygon[i].lon;
    double yj = polygon[j].lat, xj = polygon[j].lon;
    // On-edge check via collinearity within the segment's bounding box.
    double cross = (xj - xi) * (lat - yi) - (yj - yi) * (lon - xi);
    if (std::abs(cross) < kEps && lon >= std::min(xi, xj) - kEps &&
        lon <= std::max(xi, xj) + kEps && lat >= std::min(yi, yj) - kEps &&
        lat <= std::max(yi, yj) + kEps)
      return true;
    bool intersects = (yi > lat) != (yj > lat) &&
                      lon < (xj - xi) * (lat - yi) / (yj - yi) + xi;
    if (intersects) inside = !inside;
  }
  return inside;
}

/// Distance from a point to a polygon boundary/interior (0 when inside),
/// in projected metres.
inline double point_polygon_distance_m(double lat, double lon,
                                       const std::vector<Coord>& polygon,
                                       const Projection& proj) {
  if (point_in_polygon(lat, lon, polygon)) return 0.0;
  auto [px, py] = proj.to_xy(lat, lon);
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = polygon.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    auto [ax, ay] = proj.to_xy(polygon[j].lat, polygon[j].lon);
    auto [bx, by] = proj.to_xy(polygon[i].lat, polygon[i].lon);
    double dx = bx - ax, dy = by - ay;
    double len2 = dx * dx + dy * dy;
    double t = len2 == 0.0 ? 0.0 : ((px - ax) * dx + (py - ay) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    best = std::min(best, std::hypot(px - (ax + t * dx), py - (ay + t * dy)));
  }
  return best;
}

}  // namespace geo
}  // namespace sgkit

#endif  // SGKIT_GEO_HPP
