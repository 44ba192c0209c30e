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

#include "mlopsrec/rng.hpp"

#include <limits>
#include <numeric>

#include "mlopsrec/common.hpp"

namespace mlopsrec {

std::uint64_t Rng::UniformBelow(std::uint64_t n) {
  if (n == 0) {
    throw Error(ErrorKind::kInvalidArgument, "UniformBelow(0)");
  }
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  // Largest multiple of n that fits; draws at or above it are rejected.
  const std::uint64_t limit = kMax - (kMax % n + 1) % n;
  std::uint64_t x = Next();
  while (x > limit) x = Next();
  return x % n;
}

double Rng::Uniform01() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

std::size_t Rng::Weighted(std::span<const double> weights) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                "weighted draw needs at least one positive weight");
  }
  const double target = Uniform01() * total;
  double running = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    running += weights[i];
    last_positive = i;
    if (target < running) return i;
  }
  // Rounding can leave target == total.
  return last_positive;
}

}  // namespace mlopsrec
