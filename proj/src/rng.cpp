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

#include "d2dee/rng.hpp"

#include <cmath>
#include <numbers>

namespace d2dee {

std::complex<double> Rng::ComplexGaussian() {
  // Each component is N(0, 1/2).
  const double u1 = UniformOpenZero();
  const double u2 = Uniform();
  const double radius = std::sqrt(-std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

double Rng::Exponential() { return -std::log(UniformOpenZero()); }

}  // namespace d2dee
