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

#ifndef D2DEE_RNG_HPP
#define D2DEE_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace d2dee {

// Random stream used everywhere a draw is needed.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. The standard distributions are not (their algorithms are
// implementation-defined), so the variate transforms below are spelled out
// here and are part of the scenario file-format contract.
class Rng {
 public:
  static constexpr std::string_view kName = "mt19937_64/v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 bits of resolution.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1]; safe to pass to log().
  double UniformOpenZero() { return 1.0 - Uniform(); }

  // Circularly-symmetric complex Gaussian with E|h|^2 = 1 (Box-Muller).
  std::complex<double> ComplexGaussian();

  // Exp(1) variate by inversion.
  double Exponential();

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; bijective 64-bit mixer.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Seed of the stream owned by Monte Carlo run `index`:
// Mix64(master ^ Mix64(index)). Independent of evaluation order.
constexpr std::uint64_t ChildSeed(std::uint64_t master, std::uint64_t index) {
  return Mix64(master ^ Mix64(index));
}

}  // namespace d2dee

#endif  // D2DEE_RNG_HPP
