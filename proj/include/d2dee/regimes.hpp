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

// Dominance regimes of the network EE and their simplified forms.

#ifndef D2DEE_REGIMES_HPP
#define D2DEE_REGIMES_HPP

#include <array>
#include <string>

#include "d2dee/config.hpp"
#include "d2dee/link_model.hpp"
#include "d2dee/topology.hpp"

namespace d2dee {

// Listed in classification precedence order.
enum class RegimeTag {
  kCircuitDominated,
  kTransmissionDominated,
  kNoiseDominated,
  kInterferenceDominated,
  kCellularDominated,
  kD2DDominated,
  kNone,
};

inline constexpr std::array<RegimeTag, 6> kRegimePrecedence = {
    RegimeTag::kCircuitDominated,      RegimeTag::kTransmissionDominated,
    RegimeTag::kNoiseDominated,        RegimeTag::kInterferenceDominated,
    RegimeTag::kCellularDominated,     RegimeTag::kD2DDominated,
};

std::string ToString(RegimeTag tag);

// Ratio that must be exceeded for "a >> b".
inline constexpr double kDominanceThreshold = 100.0;

struct Regime {
  RegimeTag tag = RegimeTag::kNone;
  // Ratio of the matched condition; for kNone the largest ratio among all
  // conditions (how close the profile came to any regime).
  double dominance_ratio = 0.0;
};

// Defining ratio of one condition, e.g. p_cir / max transmit power for the
// circuit-dominated case.
double DominanceRatio(RegimeTag tag, const Topology& topo, const PowerAllocation& alloc,
                      const ScenarioConfig& config);

Regime ClassifyRegime(const Topology& topo, const PowerAllocation& alloc,
                      const ScenarioConfig& config, double threshold = kDominanceThreshold);

// Network EE with the simplification of `tag` applied. kNone gives the exact value.
double RegimeApproxEe(const Topology& topo, const PowerAllocation& alloc,
                      const ScenarioConfig& config, RegimeTag tag);

struct SingleLinkOptimum {
  double power = 0.0;  // W
  double ee = 0.0;     // bit/Hz/J
};

// Maximizes log2(1 + p g / (I + N0)) / (p / eta + circuit_power) over
// [0, p_max] by bisection on the sign of the derivative (the ratio is
// quasiconcave, so the derivative changes sign once).
SingleLinkOptimum BisectionSingleLinkEe(double gain, double interference, double noise_power,
                                        double pa_efficiency, double circuit_power, double p_max);

}  // namespace d2dee

#endif  // D2DEE_REGIMES_HPP
