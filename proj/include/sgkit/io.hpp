#ifndef SGKIT_IO_HPP
#define SGKIT_IO_HPP

#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgkit/common.hpp"
#include "sgkit/game_types.hpp"
#include "sgkit/graph.hpp"
#include "sgkit/instance.hpp"
#include "sgkit/schedules.hpp"

namespace sgkit {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Game JSON schema (documented in the README). Serialization is
// canonical: identical values produce identical bytes, and
// parse(dump(x)) == x exactly for doubles.

inline json graph_to_json(const DirectedGameGraph& g) {
  json nodes = json::array();
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    nodes.push_back({{"id", g.node_id(i)}, {"lat", g.coord(i).lat}, {"lon", g.coord(i).lon}});
  }
  json edges = json::array();
  for (const auto& [u, v] : g.edge_list()) edges.push_back({u, v});
  return {{"nodes", nodes},
          {"edges", edges},
          {"distance_metric",
           g.metric() == DistanceMetric::hop_count ? "hop_count" : "euclidean_on_coords"}};
}

inline DirectedGameGraph graph_from_json(const json& j) {
  std::vector<int> ids;
  std::vector<Coord> coords;
  for (const auto& n : j.at("nodes")) {
    ids.push_back(n.at("id").get<int>());
    coords.push_back({n.at("lat").get<double>(), n.at("lon").get<double>()});
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  DistanceMetric metric = DistanceMetric::hop_count;
  if (j.contains("distance_metric") && j.at("distance_metric") == "euclidean_on_coords")
    metric = DistanceMetric::euclidean_on_coords;
  return DirectedGameGraph(std::move(ids), std::move(coords), edges, metric);
}

inline json target_to_json(const TargetSpec& t) {
  return {{"node_id", t.node_id},
          {"value", t.value},
          {"u_d_uncovered", t.u_d_uncovered},
          {"u_d_covered", t.u_d_covered},
          {"u_a_covered", t.u_a_covered},
          {"u_a_uncovered", t.u_a_uncovered}};
}

/// Accepts the full six-field form or the short zero-sum form
/// {node_id, value}.
inline TargetSpec target_from_json(const json& j) {
  TargetSpec t;
  t.node_id = j.at("node_id").get<int>();
  t.value = j.at("value").get<double>();
  t.u_d_uncovered = j.value("u_d_uncovered", -t.value);
  t.u_d_covered = j.value("u_d_covered", 0.0);
  t.u_a_covered = j.value("u_a_covered", 0.0);
  t.u_a_uncovered = j.value("u_a_uncovered", t.value);
  return t;
}

inline json config_to_json(const GameConfig& c) {
  return {{"num_timesteps", c.num_timesteps},
          {"moving_attackers", c.moving_attackers},
          {"stationary_attackers", c.stationary_attackers},
          {"moving_defenders", c.moving_defenders},
          {"stationary_defenders", c.stationary_defenders},
          {"attacker_start_sets", c.attacker_start_sets},
          {"attacker_end_sets", c.attacker_end_sets},
          {"defender_start_sets", c.defender_start_sets},
          {"defender_end_sets", c.defender_end_sets},
          {"stationary_defender_placements", c.stationary_defender_placements},
          {"allow_wait", c.allow_wait},
          {"force_return", c.force_return},
          {"defender_step_cost", c.defender_step_cost},
          {"protocol",
           {{"capture_radius", c.protocol.capture_radius},
            {"defense_time_threshold", c.protocol.defense_time_threshold}}}};
}

inline GameConfig config_from_json(const json& j) {
  GameConfig c;
  c.num_timesteps = j.at("num_timesteps").get<int>();
  c.moving_attackers = j.value("moving_attackers", 0);
  c.stationary_attackers = j.value("stationary_attackers", 0);
  c.moving_defenders = j.value("moving_defenders", 0);
  c.stationary_defenders = j.value("stationary_defenders", 0);
  c.attacker_start_sets = j.value("attacker_start_sets", std::vector<std::vector<int>>{});
  c.attacker_end_sets = j.value("attacker_end_sets", std::vector<std::vector<int>>{});
  c.defender_start_sets = j.value("defender_start_sets", std::vector<std::vector<int>>{});
  c.defender_end_sets = j.value("defender_end_sets", std::vector<std::vector<int>>{});
  c.stationary_defender_placements =
      j.value("stationary_defender_placements", std::vector<std::vector<int>>{});
  c.allow_wait = j.value("allow_wait", true);
  c.force_return = j.value("force_return", false);
  c.defender_step_cost = j.value("defender_step_cost", 0.0);
  if (j.contains("protocol")) {
    c.protocol.capture_radius = j.at("protocol").value("capture_radius", 0.0);
    c.protocol.defense_time_threshold = j.at("protocol").value("defense_time_threshold", 1);
  }
  return c;
}

inline json bimatrix_to_json(const BimatrixGame& g) {
  return {{"defender", g.defender},
          {"attacker", g.attacker},
          {"row_labels", g.row_labels},
          {"col_labels", g.col_labels},
          {"zero_sum", g.zero_sum}};
}

inline BimatrixGame bimatrix_from_json(const json& j) {
  BimatrixGame g;
  g.defender = j.at("defender").get<std::vector<std::vector<double>>>();
  g.attacker = j.at("attacker").get<std::vector<std::vector<double>>>();
  g.row_labels = j.value("row_labels", std::vector<std::string>{});
  g.col_labels = j.value("col_labels", std::vector<std::string>{});
  g.zero_sum = j.value("zero_sum", false);
  return g;
}

inline json schedule_to_json(const Schedule& s) {
  return {{"targets", s.targets},
          {"movement_steps", s.movement_steps},
          {"movement_cost", s.movement_cost}};
}

inline Schedule schedule_from_json(const json& j) {
  Schedule s;
  s.targets = j.at("targets").get<std::vector<int>>();
  s.movement_steps = j.at("movement_steps").get<int>();
  s.movement_cost = j.at("movement_cost").get<double>();
  return s;
}

inline json sfg_to_json(const ScheduleFormGame& sfg) {
  json lists = json::array();
  for (const auto& list : sfg.defender_schedules) {
    json one = json::array();
    for (const auto& s : list) one.push_back(schedule_to_json(s));
    lists.push_back(std::move(one));
  }
  json targets = json::array();
  for (const auto& t : sfg.targets) targets.push_back(target_to_json(t));
  return {{"targets", targets},
          {"defender_schedules", lists},
          {"joint_actions", sfg.joint_actions},
          {"joint_costs", sfg.joint_costs},
          {"target_utilities", sfg.target_utility_matrix()}};
}

inline ScheduleFormGame sfg_from_json(const json& j) {
  ScheduleFormGame sfg;
  for (const auto& t : j.at("targets")) sfg.targets.push_back(target_from_json(t));
  for (const auto& list : j.at("defender_schedules")) {
    std::vector<Schedule> one;
    for (const auto& s : list) one.push_back(schedule_from_json(s));
    sfg.defender_schedules.push_back(std::move(one));
  }
  sfg.joint_actions = j.at("joint_actions").get<std::vector<std::vector<int>>>();
  sfg.joint_costs = j.at("joint_costs").get<std::vector<double>>();
  return sfg;
}

inline json instance_to_json(const GameInstance& inst) {
  json j{{"graph", graph_to_json(inst.graph)},
         {"config", config_to_json(inst.config)},
         {"defender_base_nodes", inst.defender_base_nodes},
         {"general_sum", inst.general_sum},
         {"schedule_form", inst.schedule_form},
         {"simple_schedules_only", inst.simple_schedules_only}};
  json targets = json::array();
  for (const auto& t : inst.targets) targets.push_back(target_to_json(t));
  j["targets"] = std::move(targets);
  if (inst.matrices) j["matrices"] = bimatrix_to_json(*inst.matrices);
  if (inst.sfg) j["schedule_form_game"] = sfg_to_json(*inst.sfg);
  return j;
}

inline GameInstance instance_from_json(const json& j) {
  GameInstance inst;
  inst.graph = graph_from_json(j.at("graph"));
  for (const auto& t : j.at("targets")) inst.targets.push_back(target_from_json(t));
  inst.config = config_from_json(j.at("config"));
  inst.defender_base_nodes =
      j.value("defender_base_nodes", std::vector<std::vector<int>>{});
  inst.general_sum = j.value("general_sum", false);
  inst.schedule_form = j.value("schedule_form", false);
  inst.simple_schedules_only = j.value("simple_schedules_only", false);
  if (j.contains("matrices")) inst.matrices = bimatrix_from_json(j.at("matrices"));
  if (j.contains("schedule_form_game")) inst.sfg = sfg_from_json(j.at("schedule_form_game"));
  return inst;
}

// ---------------------------------------------------------------------------
// CSV ingestion with line-numbered diagnostics.

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

inline double parse_double_field(const std::string& s, int line_no, const char* what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": bad " + what + " value '" +
                             s + "'");
  }
}

}  // namespace detail

/// Tracks CSV: header `animal_id,lat,lon,timestamp`.
inline TrackDataset load_tracks_csv(std::istream& in) {
  TrackDataset out;
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) throw std::runtime_error("tracks csv: empty input");
  ++line_no;
  if (detail::split_csv_line(line) !=
      std::vector<std::string>{"animal_id", "lat", "lon", "timestamp"})
    throw std::runtime_error("tracks csv: expected header animal_id,lat,lon,timestamp");
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto f = detail::split_csv_line(line);
    if (f.size() != 4)
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected 4 fields, got " +
                               std::to_string(f.size()));
    TrackRecord r;
    r.animal_id = f[0];
    r.lat = detail::parse_double_field(f[1], line_no, "lat");
    r.lon = detail::parse_double_field(f[2], line_no, "lon");
    r.timestamp = f[3];
    if (r.lat < -90.0 || r.lat > 90.0 || r.lon < -180.0 || r.lon > 180.0)
      throw std::runtime_error("line " + std::to_string(line_no) + ": lat/lon out of range");
    out.records.push_back(std::move(r));
  }
  return out;
}

inline TrackDataset load_tracks_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tracks csv: " + path);
  return load_tracks_csv(in);
}

/// Features CSV: header `id,type,lat,lon`; weights supplied separately.
inline FeatureDataset load_features_csv(std::istream& in) {
  FeatureDataset out;
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) throw std::runtime_error("features csv: empty input");
  ++line_no;
  if (detail::split_csv_line(line) != std::vector<std::string>{"id", "type", "lat", "lon"})
    throw std::runtime_error("features csv: expected header id,type,lat,lon");
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto f = detail::split_csv_line(line);
    if (f.size() != 4)
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected 4 fields, got " +
                               std::to_string(f.size()));
    FeatureRecord r;
    r.id = f[0];
    r.type = f[1];
    r.lat = detail::parse_double_field(f[2], line_no, "lat");
    r.lon = detail::parse_double_field(f[3], line_no, "lon");
    out.records.push_back(std::move(r));
  }
  return out;
}

inline FeatureDataset load_features_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open features csv: " + path);
  return load_features_csv(in);
}

/// Blocks: JSON array of {geoid, population, polygon: [[lat,lon],...]}.
inline PopulationBlocks blocks_from_json(const json& j) {
  PopulationBlocks out;
  for (const auto& b : j) {
    PopulationBlock block;
    block.geoid = b.at("geoid").get<std::string>();
    block.population = b.at("population").get<long>();
    if (block.population < 0) throw std::runtime_error("blocks: negative population");
    for (const auto& v : b.at("polygon"))
      block.polygon.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
    out.records.push_back(std::move(block));
  }
  return out;
}

inline std::map<std::string, double> weights_from_json(const json& j) {
  std::map<std::string, double> w;
  for (auto it = j.begin(); it != j.end(); ++it) {
    double v = it.value().get<double>();
    if (v <= 0.0) throw std::runtime_error("weights: weight for '" + it.key() + "' must be > 0");
    w[it.key()] = v;
  }
  return w;
}

// ---------------------------------------------------------------------------
// Gambit .nfg payoff format (classic header, payoffs with the first
// player's strategy varying fastest, both players' payoffs per cell).

inline void write_nfg(std::ostream& out, const BimatrixGame& g,
                      const std::string& title = "game") {
  for (const auto& row : g.defender)
    for (double v : row)
      if (!std::isfinite(v)) throw std::invalid_argument("write_nfg: non-finite payoff");
  for (const auto& row : g.attacker)
    for (double v : row)
      if (!std::isfinite(v)) throw std::invalid_argument("write_nfg: non-finite payoff");

  out << "NFG 1 R \"" << title << "\" { \"Defender\" \"Attacker\" } { " << g.rows() << " "
      << g.cols() << " }\n\n";
  bool first = true;
  for (std::size_t j = 0; j < g.cols(); ++j) {
    for (std::size_t i = 0; i < g.rows(); ++i) {
      if (!first) out << ' ';
      out << format_double(g.defender[i][j]) << ' ' << format_double(g.attacker[i][j]);
      first = false;
    }
  }
  out << '\n';
}

inline std::string nfg_to_string(const BimatrixGame& g, const std::string& title = "game") {
  std::ostringstream ss;
  write_nfg(ss, g, title);
  return ss.str();
}

namespace detail {

struct NfgTokenizer {
  std::istream& in;
  explicit NfgTokenizer(std::istream& s) : in(s) {}

  std::string next() {
    char c;
    while (in.get(c)) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c == '"') {
        std::string s;
        while (in.get(c) && c != '"') s.push_back(c);
        return "\"" + s + "\"";
      }
      if (c == '{' || c == '}') return std::string(1, c);
      std::string s(1, c);
      while (in.get(c)) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}' || c == '"') {
          in.unget();
          break;
        }
        s.push_back(c);
      }
      return s;
    }
    return "";
  }
};

}  // namespace detail

/// Parses the classic payoff-format .nfg; exact inverse of write_nfg.
inline BimatrixGame read_nfg(std::istream& in, std::string* title_out = nullptr) {
  detail::NfgTokenizer tok(in);
  auto expect = [&](const std::string& want) {
    std::string got = tok.next();
    if (got != want) throw std::runtime_error("nfg parse: expected '" + want + "', got '" + got + "'");
  };
  expect("NFG");
  expect("1");
  expect("R");
  std::string title = tok.next();
  if (title.size() < 2 || title.front() != '"')
    throw std::runtime_error("nfg parse: missing title string");
  if (title_out) *title_out = title.substr(1, title.size() - 2);
  expect("{");
  std::vector<std::string> players;
  for (std::string t = tok.next(); t != "}"; t = tok.next()) {
    if (t.empty()) throw std::runtime_error("nfg parse: unterminated player list");
    players.push_back(t);
  }
  if (players.size() != 2) throw std::runtime_error("nfg parse: expected two players");
  expect("{");
  std::vector<std::size_t> dims;
  for (std::string t = tok.next(); t != "}"; t = tok.next()) {
    if (t.empty()) throw std::runtime_error("nfg parse: unterminated dimension list");
    dims.push_back(std::stoul(t));
  }
  if (dims.size() != 2) throw std::runtime_error("nfg parse: expected two dimensions");

  const std::size_t n = dims[0], m = dims[1];
  BimatrixGame g;
  g.defender.assign(n, std::vector<double>(m, 0.0));
  g.attacker.assign(n, std::vector<double>(m, 0.0));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      std::string a = tok.next(), b = tok.next();
      if (a.empty() || b.empty()) throw std::runtime_error("nfg parse: truncated payoff list");
      g.defender[i][j] = std::stod(a);
      g.attacker[i][j] = std::stod(b);
    }
  bool zs = true;
  for (std::size_t i = 0; i < n && zs; ++i)
    for (std::size_t j = 0; j < m && zs; ++j)
      if (g.defender[i][j] != -g.attacker[i][j]) zs = false;
  g.zero_sum = zs;
  for (std::size_t i = 0; i < n; ++i) g.row_labels.push_back("d" + std::to_string(i));
  for (std::size_t j = 0; j < m; ++j) g.col_labels.push_back("a" + std::to_string(j));
  return g;
}

// ---------------------------------------------------------------------------
// CSV emission.

inline void write_gap_trace_csv(std::ostream& out, const std::vector<GapSample>& trace) {
  out << "iteration,time_s,gap\n";
  for (const auto& s : trace)
    out << s.iteration << ',' << format_double(s.time_s) << ',' << format_double(s.gap) << '\n';
}

struct SseRow {
  std::string instance;
  std::string form;
  double u_d = 0.0;
  double runtime_s = 0.0;
  double support = 0.0;
};

inline void write_sse_rows_csv(std::ostream& out, const std::vector<SseRow>& rows) {
  out << "instance,form,u_d,runtime_s,support\n";
  for (const auto& r : rows)
    out << r.instance << ',' << r.form << ',' << format_double(r.u_d) << ','
        << format_double(r.runtime_s) << ',' << format_double(r.support) << '\n';
}

}  // namespace sgkit

#endif  // SGKIT_IO_HPP
