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

#include <array>
#include <map>
#include <string>

#include "mlopsrec/common.hpp"

namespace mlopsrec {

using LabelCounts = std::map<std::string, std::size_t>;

// How many of `total` voters must name a label for it to be emitted.
enum class Threshold {
  kAtLeastHalf,   // 2 * count >= total (tree leaves)
  kMoreThanHalf,  // 2 * count > total (forest votes, KNN, majority rules)
};

// Per-field label frequencies over a group of records (or voters).
struct LabelTally {
  std::size_t total = 0;
  std::array<LabelCounts, kNumOutputFields> fields;

  void Add(const OutputLabels& labels);

  const LabelCounts& operator[](OutputField f) const {
    return fields[static_cast<std::size_t>(f)];
  }

  friend bool operator==(const LabelTally&, const LabelTally&) = default;
};

// Most frequent label; ties go to the lexicographically smallest. Empty
// counts give an empty string.
std::string ModalLabel(const LabelCounts& counts);

// Labels meeting the threshold. When none does, the single most frequent
// label (lexicographic tie-break), so a non-empty tally never reads out
// empty.
LabelSet ThresholdLabels(const LabelCounts& counts, std::size_t total,
                         Threshold threshold);

// Set-valued fields through ThresholdLabels, project_type as the singleton
// modal value.
OutputLabels ReadOut(const LabelTally& tally, Threshold threshold);

}  // namespace mlopsrec
