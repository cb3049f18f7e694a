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

#include "d2dee/game.hpp"

#include <algorithm>
#include <limits>

namespace d2dee {
namespace {

double Mean(const std::vector<LinkMetrics>& links) {
  if (links.empty()) return 0.0;
  double total = 0.0;
  for (const auto& m : links) total += m.ee;
  return total / static_cast<double>(links.size());
}

void ApplyD2D(PowerAllocation& alloc, int i, const BestResponse& response) {
  auto row = alloc.d2d_row(i);
  std::copy(response.powers.begin(), response.powers.end(), row.begin());
}

void FillMetrics(RoundRecord& record, const Topology& topo, const ScenarioConfig& config) {
  record.d2d.clear();
  record.cellular.clear();
  for (int i = 0; i < topo.num_d2d(); ++i) {
    record.d2d.push_back(MetricsD2D(i, record.snapshot, topo, config));
  }
  for (int k = 0; k < topo.num_cellular(); ++k) {
    record.cellular.push_back(MetricsCellular(k, record.snapshot, topo, config));
  }
}

}  // namespace

double RoundRecord::mean_d2d_ee() const { return Mean(d2d); }
double RoundRecord::mean_cell_ee() const { return Mean(cellular); }

GameTrace RunGame(const Topology& topo, const ScenarioConfig& config, const GameConfig& game,
                  ResponseRule& rule) {
  game.Validate();
  const int n = topo.num_d2d();
  const int k_count = topo.num_cellular();

  GameTrace trace;
  trace.rule = rule.name();
  trace.ordering = game.ordering;

  PowerAllocation profile(n, k_count);
  std::vector<bool> d2d_ok(n, true);
  std::vector<bool> cell_ok(k_count, true);

  {
    RoundRecord record;
    record.round = 0;
    for (int k = 0; k < k_count; ++k) {
      BestResponse r = rule.RespondCellular(k, profile, topo, config);
      cell_ok[k] = r.feasible;
      record.cell_responses.push_back(std::move(r));
    }
    // Channels are orthogonal, so the round-0 responses do not interact.
    for (int k = 0; k < k_count; ++k) profile.cell(k) = record.cell_responses[k].powers[0];
    record.snapshot = profile;
    record.d2d_feasible = d2d_ok;
    record.cell_feasible = cell_ok;
    FillMetrics(record, topo, config);
    trace.rounds.push_back(std::move(record));
  }

  auto update_cellular = [&](RoundRecord& record) {
    for (int k = 0; k < k_count; ++k) {
      BestResponse r = rule.RespondCellular(k, profile, topo, config);
      profile.cell(k) = r.powers[0];
      cell_ok[k] = r.feasible;
      record.cell_responses.push_back(std::move(r));
    }
  };
  auto update_d2d = [&](RoundRecord& record) {
    for (int i = 0; i < n; ++i) {
      BestResponse r = rule.RespondD2D(i, profile, topo, config);
      ApplyD2D(profile, i, r);
      d2d_ok[i] = r.feasible;
      record.d2d_responses.push_back(std::move(r));
    }
  };

  for (int round = 1; round <= game.max_rounds; ++round) {
    RoundRecord record;
    record.round = round;
    if (game.ordering == UpdateOrder::kCellularFirst) {
      update_cellular(record);
      update_d2d(record);
    } else {
      update_d2d(record);
      update_cellular(record);
    }
    record.snapshot = profile;
    record.d2d_feasible = d2d_ok;
    record.cell_feasible = cell_ok;
    record.max_power_change = MaxAbsDifference(profile, trace.rounds.back().snapshot);
    FillMetrics(record, topo, config);
    const bool settled = record.max_power_change < game.nash_power_tol;
    trace.rounds.push_back(std::move(record));
    if (settled) {
      trace.converged_round = round;
      break;
    }
  }
  return trace;
}

double RelativeImprovement(double current, double best) {
  if (current > 0.0) return (best - current) / current;
  return best > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

NashAudit CheckNash(const PowerAllocation& alloc, const Topology& topo,
                    const ScenarioConfig& config, double tol_ee, ResponseRule& rule) {
  NashAudit audit;
  for (int i = 0; i < topo.num_d2d(); ++i) {
    PowerAllocation deviated = alloc;
    ApplyD2D(deviated, i, rule.RespondD2D(i, alloc, topo, config));
    const double gain = RelativeImprovement(EeD2D(i, alloc, topo, config),
                                            EeD2D(i, deviated, topo, config));
    audit.d2d_improvement.push_back(gain);
    audit.max_improvement = std::max(audit.max_improvement, gain);
  }
  for (int k = 0; k < topo.num_cellular(); ++k) {
    PowerAllocation deviated = alloc;
    deviated.cell(k) = rule.RespondCellular(k, alloc, topo, config).powers[0];
    const double gain = RelativeImprovement(EeCellular(k, alloc, topo, config),
                                            EeCellular(k, deviated, topo, config));
    audit.cell_improvement.push_back(gain);
    audit.max_improvement = std::max(audit.max_improvement, gain);
  }
  audit.passes = audit.max_improvement <= tol_ee;
  return audit;
}

}  // namespace d2dee
