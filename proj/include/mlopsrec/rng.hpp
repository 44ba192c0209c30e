// Copyright 2026 The mlopsrec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace mlopsrec {

// Seeded generator with a machine-independent output sequence.
//
// std::mt19937_64's output is fixed by the standard, but the std::
// distributions are not, so bounded integers, unit doubles, shuffles and
// weighted draws are derived here from the raw 64-bit words:
//   UniformBelow(n): rejection sampling on the top of the 64-bit range,
//                    then modulo n.
//   Uniform01():     top 53 bits scaled by 2^-53.
//   Shuffle:         Fisher-Yates from the last index down.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t UniformBelow(std::uint64_t n);

  // Uniform double in [0, 1).
  double Uniform01();

  bool Bernoulli(double p) { return Uniform01() < p; }

  // Index i drawn with probability weights[i] / sum(weights). At least one
  // weight must be positive.
  std::size_t Weighted(std::span<const double> weights);

  template <typename T>
  void Shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(UniformBelow(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mlopsrec
