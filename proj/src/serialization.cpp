// Copyright 2026 The d2dee Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "d2dee/serialization.hpp"

#include <fstream>
#include <functional>
#include <map>

#include "d2dee/rng.hpp"

namespace d2dee {
namespace {

using Setter = std::function<void(const Json&)>;

// Applies one setter per known key; anything else is a typo worth reporting.
void ReadObject(const Json& doc, const std::string& section,
                const std::map<std::string, Setter>& setters) {
  if (!doc.is_object()) throw ConfigError(section, "expected an object");
  for (const auto& [key, value] : doc.items()) {
    const std::string field = section.empty() ? key : section + "." + key;
    auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError(field, "unknown key");
    try {
      it->second(value);
    } catch (const Json::exception& e) {
      throw ConfigError(field, e.what());
    }
  }
}

template <typename T>
Setter Bind(T& target) {
  return [&target](const Json& v) { target = v.get<T>(); };
}

Json PointJson(const Point& p) { return Json::array({p.x, p.y}); }

Point PointFromJson(const Json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

Json PointsJson(const std::vector<Point>& points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(PointJson(p));
  return out;
}

std::vector<Point> PointsFromJson(const Json& j, std::size_t expected, const char* field) {
  if (!j.is_array() || j.size() != expected) throw ConfigError(field, "wrong length");
  std::vector<Point> out;
  for (const auto& p : j) out.push_back(PointFromJson(p));
  return out;
}

Json MetricsJson(const LinkMetrics& m, bool feasible) {
  return Json{{"ee", m.ee},
              {"rate", m.rate},
              {"power_total", m.power_total},
              {"sinr", m.sinr_per_channel},
              {"feasible", feasible}};
}

Json ResponseJson(const BestResponse& r) {
  return Json{{"powers", r.powers},          {"q_star", r.q_star},
              {"feasible", r.feasible},      {"converged", r.converged},
              {"residual", r.residual},      {"q_trace", r.q_trace},
              {"dual_iterations", r.dual_iterations},
              {"exact_fallbacks", r.exact_fallbacks}};
}

}  // namespace

Json ToJson(const SolverConfig& s) {
  return Json{{"delta", s.delta},
              {"l_max", s.l_max},
              {"dual_max_iters", s.dual_max_iters},
              {"dual_tol", s.dual_tol},
              {"step_c", s.step_c},
              {"primal_change_tol", s.primal_change_tol}};
}

Json ToJson(const ScenarioConfig& c) {
  return Json{{"cell_radius", c.cell_radius},
              {"d2d_max_distance", c.d2d_max_distance},
              {"num_d2d_pairs", c.num_d2d_pairs},
              {"num_cellular", c.num_cellular},
              {"p_d2d_max", c.p_d2d_max},
              {"p_cell_max", c.p_cell_max},
              {"p_cir", c.p_cir},
              {"noise_power", c.noise_power},
              {"pa_efficiency", c.pa_efficiency},
              {"qos_d2d", c.qos_d2d},
              {"qos_cell", c.qos_cell},
              {"seed", c.seed},
              {"solver", ToJson(c.solver)}};
}

Json ToJson(const GameConfig& g) {
  return Json{{"max_rounds", g.max_rounds},
              {"nash_power_tol", g.nash_power_tol},
              {"ordering", ToString(g.ordering)}};
}

SolverConfig SolverConfigFromJson(const Json& doc) {
  SolverConfig s;
  ReadObject(doc, "solver",
             {{"delta", Bind(s.delta)},
              {"l_max", Bind(s.l_max)},
              {"dual_max_iters", Bind(s.dual_max_iters)},
              {"dual_tol", Bind(s.dual_tol)},
              {"step_c", Bind(s.step_c)},
              {"primal_change_tol", Bind(s.primal_change_tol)}});
  return s;
}

ScenarioConfig ScenarioConfigFromJson(const Json& doc) {
  ScenarioConfig c;
  ReadObject(doc, "",
             {{"cell_radius", Bind(c.cell_radius)},
              {"d2d_max_distance", Bind(c.d2d_max_distance)},
              {"num_d2d_pairs", Bind(c.num_d2d_pairs)},
              {"num_cellular", Bind(c.num_cellular)},
              {"p_d2d_max", Bind(c.p_d2d_max)},
              {"p_cell_max", Bind(c.p_cell_max)},
              {"p_cir", Bind(c.p_cir)},
              {"noise_power", Bind(c.noise_power)},
              {"pa_efficiency", Bind(c.pa_efficiency)},
              {"qos_d2d", Bind(c.qos_d2d)},
              {"qos_cell", Bind(c.qos_cell)},
              {"seed", Bind(c.seed)},
              {"solver", [&c](const Json& v) { c.solver = SolverConfigFromJson(v); }}});
  return c;
}

GameConfig GameConfigFromJson(const Json& doc) {
  GameConfig g;
  ReadObject(doc, "game",
             {{"max_rounds", Bind(g.max_rounds)},
              {"nash_power_tol", Bind(g.nash_power_tol)},
              {"ordering", [&g](const Json& v) {
                 g.ordering = UpdateOrderFromString(v.get<std::string>());
               }}});
  return g;
}

Json ToJson(const Topology& topo) {
  const int n = topo.num_d2d();
  const int k_count = topo.num_cellular();
  Json direct = Json::array();
  Json d2d_bs = Json::array();
  Json d2d_d2d = Json::array();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    Json bs_row = Json::array();
    for (int k = 0; k < k_count; ++k) {
      row.push_back(topo.direct(i, k));
      bs_row.push_back(topo.d2d_to_bs(i, k));
    }
    direct.push_back(std::move(row));
    d2d_bs.push_back(std::move(bs_row));
  }
  for (int j = 0; j < n; ++j) {
    Json per_rx = Json::array();
    for (int i = 0; i < n; ++i) {
      Json per_channel = Json::array();
      for (int k = 0; k < k_count; ++k) per_channel.push_back(topo.d2d_to_d2d(j, i, k));
      per_rx.push_back(std::move(per_channel));
    }
    d2d_d2d.push_back(std::move(per_rx));
  }
  Json cell_d2d = Json::array();
  Json cell_bs = Json::array();
  for (int k = 0; k < k_count; ++k) {
    Json row = Json::array();
    for (int i = 0; i < n; ++i) row.push_back(topo.cell_to_d2d(k, i));
    cell_d2d.push_back(std::move(row));
    cell_bs.push_back(topo.cell_to_bs(k));
  }
  return Json{{"num_d2d", n},
              {"num_cellular", k_count},
              {"bs_position", PointJson(topo.bs_position)},
              {"cell_positions", PointsJson(topo.cell_positions)},
              {"d2d_tx_positions", PointsJson(topo.d2d_tx_positions)},
              {"d2d_rx_positions", PointsJson(topo.d2d_rx_positions)},
              {"g_direct", std::move(direct)},
              {"g_cell2d2d", std::move(cell_d2d)},
              {"g_d2d2d2d", std::move(d2d_d2d)},
              {"g_cell2bs", std::move(cell_bs)},
              {"g_d2d2bs", std::move(d2d_bs)}};
}

Topology TopologyFromJson(const Json& doc) {
  try {
    const int n = doc.at("num_d2d").get<int>();
    const int k_count = doc.at("num_cellular").get<int>();
    if (n < 0 || k_count < 1) throw ConfigError("topology", "invalid N/K");
    Topology topo(n, k_count);
    topo.bs_position = PointFromJson(doc.at("bs_position"));
    topo.cell_positions = PointsFromJson(doc.at("cell_positions"), k_count, "cell_positions");
    topo.d2d_tx_positions = PointsFromJson(doc.at("d2d_tx_positions"), n, "d2d_tx_positions");
    topo.d2d_rx_positions = PointsFromJson(doc.at("d2d_rx_positions"), n, "d2d_rx_positions");
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < k_count; ++k) {
        topo.direct(i, k) = doc.at("g_direct").at(i).at(k).get<double>();
        topo.d2d_to_bs(i, k) = doc.at("g_d2d2bs").at(i).at(k).get<double>();
        topo.cell_to_d2d(k, i) = doc.at("g_cell2d2d").at(k).at(i).get<double>();
        for (int j = 0; j < n; ++j) {
          topo.d2d_to_d2d(j, i, k) = doc.at("g_d2d2d2d").at(j).at(i).at(k).get<double>();
        }
      }
    }
    for (int k = 0; k < k_count; ++k) topo.cell_to_bs(k) = doc.at("g_cell2bs").at(k).get<double>();
    return topo;
  } catch (const Json::exception& e) {
    throw ConfigError("topology", e.what());
  }
}

Json ToJson(const PowerAllocation& alloc) {
  Json d2d = Json::array();
  for (int i = 0; i < alloc.num_d2d(); ++i) {
    const auto row = alloc.d2d_row(i);
    d2d.push_back(std::vector<double>(row.begin(), row.end()));
  }
  return Json{{"p_d2d", std::move(d2d)}, {"p_cell", alloc.cell_flat()}};
}

Json ToJson(const GameTrace& trace) {
  Json rounds = Json::array();
  for (const auto& r : trace.rounds) {
    Json d2d = Json::array();
    Json cell = Json::array();
    for (std::size_t i = 0; i < r.d2d.size(); ++i) d2d.push_back(MetricsJson(r.d2d[i], r.d2d_feasible[i]));
    for (std::size_t k = 0; k < r.cellular.size(); ++k) {
      cell.push_back(MetricsJson(r.cellular[k], r.cell_feasible[k]));
    }
    Json d2d_responses = Json::array();
    Json cell_responses = Json::array();
    for (const auto& resp : r.d2d_responses) d2d_responses.push_back(ResponseJson(resp));
    for (const auto& resp : r.cell_responses) cell_responses.push_back(ResponseJson(resp));
    rounds.push_back(Json{{"round", r.round},
                          {"max_power_change", r.max_power_change},
                          {"snapshot", ToJson(r.snapshot)},
                          {"d2d", std::move(d2d)},
                          {"cellular", std::move(cell)},
                          {"d2d_responses", std::move(d2d_responses)},
                          {"cell_responses", std::move(cell_responses)}});
  }
  Json converged = trace.converged_round ? Json(*trace.converged_round) : Json(nullptr);
  return Json{{"rule", trace.rule},
              {"ordering", ToString(trace.ordering)},
              {"converged_round", std::move(converged)},
              {"rounds", std::move(rounds)}};
}

Json ScenarioToJson(const ScenarioConfig& config, const Topology& topo) {
  return Json{{"format", kScenarioFormat},
              {"rng", std::string(Rng::kName)},
              {"config", ToJson(config)},
              {"topology", ToJson(topo)}};
}

Scenario ScenarioFromJson(const Json& doc) {
  if (!doc.contains("format") || doc.at("format") != kScenarioFormat) {
    throw ConfigError("format", std::string("expected ") + kScenarioFormat);
  }
  if (!doc.contains("config") || !doc.contains("topology")) {
    throw ConfigError("scenario", "missing config or topology section");
  }
  Scenario s;
  s.config = ScenarioConfigFromJson(doc.at("config"));
  s.topology = TopologyFromJson(doc.at("topology"));
  return s;
}

Json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError(path.string(), e.what());
  }
}

void WriteJsonFile(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace d2dee
