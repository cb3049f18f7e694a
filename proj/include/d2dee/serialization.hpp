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

// JSON documents for configs, scenarios and game traces. Doubles are written
// in shortest round-trip form, so load(save(x)) == x bit for bit.

#ifndef D2DEE_SERIALIZATION_HPP
#define D2DEE_SERIALIZATION_HPP

#include <filesystem>
#include <string>

#include "json.hpp"

#include "d2dee/config.hpp"
#include "d2dee/game.hpp"
#include "d2dee/topology.hpp"

namespace d2dee {

using Json = nlohmann::ordered_json;

inline constexpr const char* kScenarioFormat = "d2dee-scenario/1";

Json ToJson(const SolverConfig& solver);
Json ToJson(const ScenarioConfig& config);
Json ToJson(const GameConfig& game);
Json ToJson(const Topology& topo);
Json ToJson(const PowerAllocation& alloc);
Json ToJson(const GameTrace& trace);

// Missing keys keep their defaults; unknown keys raise ConfigError.
SolverConfig SolverConfigFromJson(const Json& doc);
ScenarioConfig ScenarioConfigFromJson(const Json& doc);
GameConfig GameConfigFromJson(const Json& doc);
Topology TopologyFromJson(const Json& doc);

struct Scenario {
  ScenarioConfig config;
  Topology topology;
};

// {"format", "rng", "config", "topology"}.
Json ScenarioToJson(const ScenarioConfig& config, const Topology& topo);
Scenario ScenarioFromJson(const Json& doc);

Json ReadJsonFile(const std::filesystem::path& path);
void WriteJsonFile(const std::filesystem::path& path, const Json& doc);

}  // namespace d2dee

#endif  // D2DEE_SERIALIZATION_HPP
