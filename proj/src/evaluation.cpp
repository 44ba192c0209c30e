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

#include "mlopsrec/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json_util.hpp"

namespace mlopsrec {
namespace {

using json_util::json;

Metric Ratio(std::size_t num, std::size_t den) {
  if (den == 0) return {0.0, true};
  return {static_cast<double>(num) / static_cast<double>(den), false};
}

std::string Fixed6(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

json FieldScoreJson(const FieldScore& s) {
  json out;
  out["tp"] = s.counts.tp;
  out["fp"] = s.counts.fp;
  out["fn"] = s.counts.fn;
  out["precision"] = s.precision.value;
  out["recall"] = s.recall.value;
  out["f_measure"] = s.f_measure;
  out["precision_degenerate"] = s.precision.degenerate;
  out["recall_degenerate"] = s.recall.degenerate;
  return out;
}

}  // namespace

ConfusionCounts ScoreLabels(const LabelSet& gold, const LabelSet& predicted) {
  ConfusionCounts c;
  for (const auto& label : predicted) {
    if (gold.count(label)) {
      ++c.tp;
    } else {
      ++c.fp;
    }
  }
  c.fn = gold.size() - c.tp;
  return c;
}

ScoreBreakdown ScorePredictionsDetailed(const std::vector<OutputLabels>& gold,
                                        const std::vector<OutputLabels>& predicted) {
  if (gold.size() != predicted.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "gold has " + std::to_string(gold.size()) +
                    " records but predictions have " +
                    std::to_string(predicted.size()));
  }
  ScoreBreakdown out;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    for (std::size_t f = 0; f < kNumOutputFields; ++f) {
      const ConfusionCounts c =
          ScoreLabels(gold[i].fields[f], predicted[i].fields[f]);
      out.per_field[f] += c;
      out.total += c;
    }
  }
  return out;
}

ConfusionCounts ScorePredictions(const std::vector<OutputLabels>& gold,
                                 const std::vector<OutputLabels>& predicted) {
  return ScorePredictionsDetailed(gold, predicted).total;
}

Metric Precision(const ConfusionCounts& c) { return Ratio(c.tp, c.tp + c.fp); }

Metric Recall(const ConfusionCounts& c) { return Ratio(c.tp, c.tp + c.fn); }

double FMeasure(double precision, double recall) {
  if (!(precision >= 0.0 && precision <= 1.0 && recall >= 0.0 && recall <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                "precision and recall must lie in [0, 1]");
  }
  const double sum = precision + recall;
  if (sum == 0.0) return 0.0;
  return 2.0 * precision * recall / sum;
}

FieldScore MakeFieldScore(const ConfusionCounts& counts) {
  FieldScore s;
  s.counts = counts;
  s.precision = Precision(counts);
  s.recall = Recall(counts);
  s.f_measure = FMeasure(s.precision.value, s.recall.value);
  return s;
}

EvaluationReport MakeReport(std::string approach,
                            const std::vector<OutputLabels>& gold,
                            const std::vector<OutputLabels>& predicted,
                            std::size_t unanswered) {
  const ScoreBreakdown scores = ScorePredictionsDetailed(gold, predicted);
  EvaluationReport report;
  report.approach = std::move(approach);
  report.records = gold.size();
  report.unanswered = unanswered;
  report.overall = MakeFieldScore(scores.total);
  for (std::size_t f = 0; f < kNumOutputFields; ++f) {
    report.per_field[f] = MakeFieldScore(scores.per_field[f]);
  }
  return report;
}

EvaluationReport ReportFromMetrics(std::string approach, double precision,
                                   double recall) {
  EvaluationReport report;
  report.approach = std::move(approach);
  report.overall.precision = {precision, false};
  report.overall.recall = {recall, false};
  report.overall.f_measure = FMeasure(precision, recall);
  return report;
}

Comparison CompareApproaches(std::vector<EvaluationReport> reports) {
  if (reports.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no reports to compare");
  }
  std::stable_sort(reports.begin(), reports.end(),
                   [](const EvaluationReport& a, const EvaluationReport& b) {
                     if (a.f_measure() != b.f_measure()) {
                       return a.f_measure() > b.f_measure();
                     }
                     return a.approach < b.approach;
                   });
  return Comparison{std::move(reports)};
}

std::string RenderTable(const Comparison& comparison) {
  std::size_t width = std::string_view("Approach").size();
  for (const auto& r : comparison.ranked) width = std::max(width, r.approach.size());

  std::ostringstream out;
  const auto pad = [&](const std::string& s) {
    return s + std::string(width - s.size() + 2, ' ');
  };
  out << pad("Approach") << "Precision  Recall     F-Measure\n";
  for (const auto& r : comparison.ranked) {
    out << pad(r.approach) << Fixed6(r.precision()) << "   "
        << Fixed6(r.recall()) << "   " << Fixed6(r.f_measure());
    if (r.overall.precision.degenerate || r.overall.recall.degenerate) {
      out << "  (degenerate)";
    }
    out << '\n';
  }
  out << "best approach by F-measure: " << comparison.best().approach << '\n';
  return out.str();
}

std::string ComparisonJson(const Comparison& comparison,
                           const std::map<std::string, std::string>& metadata) {
  json doc;
  for (const auto& [key, value] : metadata) doc[key] = value;
  json list = json::array();
  for (const auto& r : comparison.ranked) {
    json entry = FieldScoreJson(r.overall);
    entry["approach"] = r.approach;
    entry["records"] = r.records;
    entry["unanswered"] = r.unanswered;
    json fields;
    for (OutputField f : kAllOutputFields) {
      fields[std::string(ToString(f))] =
          FieldScoreJson(r.per_field[static_cast<std::size_t>(f)]);
    }
    entry["per_field"] = std::move(fields);
    list.push_back(std::move(entry));
  }
  doc["approaches"] = std::move(list);
  doc["best"] = comparison.best().approach;
  return json_util::Dump(doc);
}

std::string BarsCsv(const Comparison& comparison) {
  std::ostringstream out;
  out << "approach,precision,recall,f_measure\n";
  for (const auto& r : comparison.ranked) {
    out << r.approach << ',' << Fixed6(r.precision()) << ','
        << Fixed6(r.recall()) << ',' << Fixed6(r.f_measure()) << '\n';
  }
  return out.str();
}

}  // namespace mlopsrec
