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

// Reference implementations used only by tests. They are written from the
// definitions directly and share no code with the library's tally, tree or
// metric routines.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mlopsrec/common.hpp"
#include "mlopsrec/dataset.hpp"

namespace mlopsrec::oracle {

// Labels named by at least half (strict = more than half) of n voters;
// otherwise the most frequent label, smallest name first on ties.
inline LabelSet Majority(const std::vector<LabelSet>& votes, bool strict) {
  std::map<std::string, int> count;
  for (const auto& v : votes) {
    for (const auto& label : v) ++count[label];
  }
  const int n = static_cast<int>(votes.size());
  LabelSet kept;
  for (const auto& [label, c] : count) {
    if (strict ? 2 * c > n : 2 * c >= n) kept.insert(label);
  }
  if (!kept.empty() || count.empty()) return kept;
  std::string best;
  int best_count = -1;
  for (const auto& [label, c] : count) {
    if (c > best_count) {
      best = label;
      best_count = c;
    }
  }
  return {best};
}

// Most common single value, smallest name first on ties.
inline std::string Mode(const std::vector<std::string>& values) {
  std::map<std::string, int> count;
  for (const auto& v : values) ++count[v];
  std::string best;
  int best_count = -1;
  for (const auto& [v, c] : count) {
    if (c > best_count) {
      best = v;
      best_count = c;
    }
  }
  return best;
}

// Field-wise readout of a fully grown tree for every observed input pair:
// group the records by pair and read each group out directly.
inline std::map<Context, OutputLabels> GroupByReadout(
    const std::vector<FeatureView>& views) {
  std::map<Context, std::vector<const OutputLabels*>> groups;
  for (const auto& v : views) groups[v.inputs].push_back(&v.outputs);
  std::map<Context, OutputLabels> out;
  for (const auto& [ctx, members] : groups) {
    OutputLabels o;
    for (OutputField f : {OutputField::kPreprocessingTools,
                          OutputField::kModelTools,
                          OutputField::kEvaluationMetrics}) {
      std::vector<LabelSet> votes;
      for (const auto* m : members) votes.push_back((*m)[f]);
      o[f] = Majority(votes, /*strict=*/false);
    }
    std::vector<std::string> types;
    for (const auto* m : members) {
      for (const auto& t : m->project_type()) types.push_back(t);
    }
    o.project_type() = {Mode(types)};
    out[ctx] = o;
  }
  return out;
}

struct Counts {
  long long tp = 0, fp = 0, fn = 0;
};

// Micro counts by walking every label of every field of every record.
inline Counts MicroCounts(const std::vector<OutputLabels>& gold,
                          const std::vector<OutputLabels>& pred) {
  Counts c;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    for (std::size_t f = 0; f < kNumOutputFields; ++f) {
      const auto& g = gold[i].fields[f];
      const auto& p = pred[i].fields[f];
      for (const auto& label : p) (g.count(label) ? c.tp : c.fp) += 1;
      for (const auto& label : g) c.fn += p.count(label) ? 0 : 1;
    }
  }
  return c;
}

inline double HarmonicMean(double p, double r) {
  return p + r == 0.0 ? 0.0 : 1.0 / ((1.0 / p + 1.0 / r) / 2.0);
}

// Small random datasets over a reduced label alphabet, so groups collide and
// thresholds and tie-breaks are exercised.
inline std::vector<FeatureView> RandomViews(std::mt19937_64& gen,
                                            std::size_t n) {
  static const std::vector<std::string> kPool = {"a", "b", "c", "d", "e"};
  static const std::vector<std::string> kTypes = {"classification",
                                                  "regression", "clustering"};
  std::uniform_int_distribution<int> nature(0, 2), type(0, 3), bit(0, 2);
  std::uniform_int_distribution<std::size_t> pick(0, kPool.size() - 1),
      pick_type(0, kTypes.size() - 1);
  std::vector<FeatureView> views;
  for (std::size_t i = 0; i < n; ++i) {
    FeatureView v;
    v.inputs = {kAllNatures[static_cast<std::size_t>(nature(gen))],
                kAllTypes[static_cast<std::size_t>(type(gen))]};
    for (OutputField f : {OutputField::kPreprocessingTools,
                          OutputField::kModelTools,
                          OutputField::kEvaluationMetrics}) {
      for (const auto& label : kPool) {
        if (bit(gen) == 0) v.outputs[f].insert(label);
      }
      if (v.outputs[f].empty()) v.outputs[f].insert(kPool[pick(gen)]);
    }
    v.outputs.project_type() = {kTypes[pick_type(gen)]};
    views.push_back(std::move(v));
  }
  return views;
}

}  // namespace mlopsrec::oracle
