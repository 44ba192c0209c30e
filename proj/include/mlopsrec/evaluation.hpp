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
#include <vector>

#include "mlopsrec/common.hpp"

namespace mlopsrec {

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  ConfusionCounts& operator+=(const ConfusionCounts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

// tp = |gold ∩ pred|, fp = |pred \ gold|, fn = |gold \ pred|.
ConfusionCounts ScoreLabels(const LabelSet& gold, const LabelSet& predicted);

struct ScoreBreakdown {
  ConfusionCounts total;
  std::array<ConfusionCounts, kNumOutputFields> per_field;
};

// Micro counts pooled over every (record, field, label) triple. Throws
// kInvalidArgument when gold and predicted differ in length.
ScoreBreakdown ScorePredictionsDetailed(const std::vector<OutputLabels>& gold,
                                        const std::vector<OutputLabels>& predicted);
ConfusionCounts ScorePredictions(const std::vector<OutputLabels>& gold,
                                 const std::vector<OutputLabels>& predicted);

// A ratio whose denominator may be zero. 0/0 is reported as 0 with
// degenerate set, never dropped.
struct Metric {
  double value = 0.0;
  bool degenerate = false;
};

Metric Precision(const ConfusionCounts& c);  // tp / (tp + fp)
Metric Recall(const ConfusionCounts& c);     // tp / (tp + fn)

// Harmonic mean 2pr / (p + r); 0 when p + r = 0. Throws kInvalidArgument
// outside [0, 1].
double FMeasure(double precision, double recall);

struct FieldScore {
  ConfusionCounts counts;
  Metric precision;
  Metric recall;
  double f_measure = 0.0;
};

FieldScore MakeFieldScore(const ConfusionCounts& counts);

struct EvaluationReport {
  std::string approach;
  std::size_t records = 0;
  // Records the approach could not answer (a rule set with no applicable
  // rule); scored as empty predictions.
  std::size_t unanswered = 0;
  FieldScore overall;
  std::array<FieldScore, kNumOutputFields> per_field;

  double precision() const { return overall.precision.value; }
  double recall() const { return overall.recall.value; }
  double f_measure() const { return overall.f_measure; }
};

EvaluationReport MakeReport(std::string approach,
                            const std::vector<OutputLabels>& gold,
                            const std::vector<OutputLabels>& predicted,
                            std::size_t unanswered = 0);

// A report built straight from published precision/recall values, with no
// counts behind it.
EvaluationReport ReportFromMetrics(std::string approach, double precision,
                                   double recall);

struct Comparison {
  std::vector<EvaluationReport> ranked;  // by F descending, then name

  const EvaluationReport& best() const { return ranked.front(); }
};

// Throws kInvalidArgument on empty input.
Comparison CompareApproaches(std::vector<EvaluationReport> reports);

// Fixed-width table: Approach, Precision, Recall, F-Measure (six decimals),
// followed by the best approach line.
std::string RenderTable(const Comparison& comparison);

// Machine-readable report; metadata entries are copied to the top level.
std::string ComparisonJson(const Comparison& comparison,
                           const std::map<std::string, std::string>& metadata = {});

// One row per approach: approach,precision,recall,f_measure.
std::string BarsCsv(const Comparison& comparison);

}  // namespace mlopsrec
