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

#include "mlopsrec/tally.hpp"

namespace mlopsrec {

void LabelTally::Add(const OutputLabels& labels) {
  ++total;
  for (std::size_t f = 0; f < kNumOutputFields; ++f) {
    for (const auto& label : labels.fields[f]) ++fields[f][label];
  }
}

std::string ModalLabel(const LabelCounts& counts) {
  // std::map iterates in lexicographic order, so a strict '>' keeps the
  // smallest label among equal counts.
  const std::string* best = nullptr;
  std::size_t best_count = 0;
  for (const auto& [label, count] : counts) {
    if (best == nullptr || count > best_count) {
      best = &label;
      best_count = count;
    }
  }
  return best ? *best : std::string();
}

LabelSet ThresholdLabels(const LabelCounts& counts, std::size_t total,
                         Threshold threshold) {
  LabelSet out;
  for (const auto& [label, count] : counts) {
    const bool keep = threshold == Threshold::kAtLeastHalf
                          ? 2 * count >= total
                          : 2 * count > total;
    if (keep && count > 0) out.insert(label);
  }
  if (out.empty() && !counts.empty()) out.insert(ModalLabel(counts));
  return out;
}

OutputLabels ReadOut(const LabelTally& tally, Threshold threshold) {
  OutputLabels out;
  for (OutputField f : kAllOutputFields) {
    if (f == OutputField::kProjectType) {
      if (!tally[f].empty()) out[f] = {ModalLabel(tally[f])};
    } else {
      out[f] = ThresholdLabels(tally[f], tally.total, threshold);
    }
  }
  return out;
}

}  // namespace mlopsrec
