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

#include <random>

#include "doctest.h"
#include "json.hpp"
#include "mlopsrec/evaluation.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace mlopsrec;
using testing::CatchError;

namespace {

OutputLabels Only(OutputField f, LabelSet labels) {
  OutputLabels o;
  o[f] = std::move(labels);
  return o;
}

// Published precision, recall and F-measure per approach.
struct PublishedRow {
  const char* approach;
  double precision, recall, f_measure;
};
constexpr PublishedRow kPublished[] = {
    {"decision_trees", 0.683871, 0.582418, 0.629080},
    {"random_forest", 0.705521, 0.631868, 0.666667},
    {"knn", 0.674556, 0.626374, 0.649573},
    {"rule_based", 0.498423, 0.868132, 0.633267},
};

}  // namespace

TEST_SUITE("evaluation") {
  TEST_CASE("hand-counted micro counts") {
    const auto f = OutputField::kModelTools;
    const ConfusionCounts c = ScorePredictions({Only(f, {"a", "b"}), Only(f, {"c"})},
                                               {Only(f, {"a"}), Only(f, {"c", "d"})});
    CHECK(c == ConfusionCounts{2, 1, 1});
  }

  TEST_CASE("identity and empty predictions") {
    std::mt19937_64 gen(3);
    std::vector<OutputLabels> gold;
    for (const auto& v : oracle::RandomViews(gen, 20)) gold.push_back(v.outputs);
    const ConfusionCounts same = ScorePredictions(gold, gold);
    CHECK(same.fp == 0);
    CHECK(same.fn == 0);
    const ConfusionCounts none = ScorePredictions(gold, std::vector<OutputLabels>(gold.size()));
    CHECK(none.tp == 0);
    CHECK(static_cast<long long>(none.fn) == oracle::MicroCounts(gold, gold).tp);
    CHECK(CatchError([&] { ScorePredictions(gold, {}); })->kind ==
          ErrorKind::kInvalidArgument);
  }

  TEST_CASE("precision and recall conventions") {
    CHECK(Precision({2, 1, 0}).value == doctest::Approx(2.0 / 3.0));
    CHECK(Precision({4, 0, 9}).value == 1.0);
    CHECK(Precision({0, 0, 3}).value == 0.0);
    CHECK(Precision({0, 0, 3}).degenerate);
    CHECK(Recall({2, 0, 3}).value == doctest::Approx(0.4));
    CHECK(Recall({5, 2, 0}).value == 1.0);
    CHECK(Recall({0, 4, 0}).degenerate);
    CHECK_FALSE(Recall({1, 4, 0}).degenerate);
  }

  TEST_CASE("F-measure reproduces the published column") {
    for (const auto& row : kPublished) {
      CAPTURE(row.approach);
      CHECK(std::abs(FMeasure(row.precision, row.recall) - row.f_measure) < 1e-4);
      CHECK(std::abs(FMeasure(row.precision, row.recall) -
                     oracle::HarmonicMean(row.precision, row.recall)) < 1e-12);
    }
    CHECK(FMeasure(0.3, 0.3) == doctest::Approx(0.3));
    CHECK(FMeasure(0.0, 0.0) == 0.0);
    CHECK(CatchError([] { FMeasure(1.2, 0.5); }));
    CHECK(CatchError([] { FMeasure(0.5, -0.1); }));
  }

  TEST_CASE("F-measure lies between precision and recall") {
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> u(1e-6, 1.0);
    for (int i = 0; i < 1000; ++i) {
      const double p = u(gen), r = u(gen);
      const double f = FMeasure(p, r);
      CHECK(f >= std::min(p, r) - 1e-12);
      CHECK(f <= std::max(p, r) + 1e-12);
    }
  }

  TEST_CASE("published rows rank random_forest > knn > rule_based > decision_trees") {
    std::vector<EvaluationReport> reports;
    for (const auto& row : kPublished) {
      reports.push_back(ReportFromMetrics(row.approach, row.precision, row.recall));
    }
    const Comparison c = CompareApproaches(reports);
    REQUIRE(c.ranked.size() == 4);
    CHECK(c.ranked[0].approach == "random_forest");
    CHECK(c.ranked[1].approach == "knn");
    CHECK(c.ranked[2].approach == "rule_based");
    CHECK(c.ranked[3].approach == "decision_trees");
    CHECK(c.best().f_measure() == doctest::Approx(0.666667).epsilon(1e-5));
  }

  TEST_CASE("singleton and tied comparisons") {
    CHECK(CompareApproaches({ReportFromMetrics("knn", 0.5, 0.5)}).best().approach == "knn");
    const Comparison tie = CompareApproaches(
        {ReportFromMetrics("zeta", 0.5, 0.5), ReportFromMetrics("alpha", 0.5, 0.5)});
    CHECK(tie.best().approach == "alpha");
    CHECK(CatchError([] { CompareApproaches({}); }));
  }

  TEST_CASE("conservation and duplication invariance") {
    std::mt19937_64 gen(77);
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = 1 + gen() % 20;
      std::vector<OutputLabels> gold, pred;
      for (const auto& v : oracle::RandomViews(gen, n)) gold.push_back(v.outputs);
      for (const auto& v : oracle::RandomViews(gen, n)) pred.push_back(v.outputs);
      const ConfusionCounts c = ScorePredictions(gold, pred);
      const oracle::Counts o = oracle::MicroCounts(gold, pred);
      CHECK(static_cast<long long>(c.tp) == o.tp);
      CHECK(static_cast<long long>(c.fp) == o.fp);
      CHECK(static_cast<long long>(c.fn) == o.fn);
      auto gold2 = gold, pred2 = pred;
      gold2.insert(gold2.end(), gold.begin(), gold.end());
      pred2.insert(pred2.end(), pred.begin(), pred.end());
      const ConfusionCounts d = ScorePredictions(gold2, pred2);
      CHECK(Precision(d).value == Precision(c).value);
      CHECK(Recall(d).value == Recall(c).value);
    }
  }

  TEST_CASE("per-field breakdown sums to the total") {
    std::mt19937_64 gen(9);
    std::vector<OutputLabels> gold, pred;
    for (const auto& v : oracle::RandomViews(gen, 10)) gold.push_back(v.outputs);
    for (const auto& v : oracle::RandomViews(gen, 10)) pred.push_back(v.outputs);
    const ScoreBreakdown b = ScorePredictionsDetailed(gold, pred);
    ConfusionCounts sum;
    for (const auto& f : b.per_field) sum += f;
    CHECK(sum == b.total);
  }

  TEST_CASE("renderings") {
    const Comparison c = CompareApproaches(
        {ReportFromMetrics("random_forest", 0.705521, 0.631868),
         ReportFromMetrics("rule_based", 0.498423, 0.868132)});
    const std::string table = RenderTable(c);
    CHECK(testing::Contains(table, "0.705521"));
    CHECK(testing::Contains(table, "best approach by F-measure: random_forest"));
    const auto doc = nlohmann::json::parse(ComparisonJson(c, {{"seed", "7"}}));
    CHECK(doc.at("seed") == "7");
    const std::string bars = BarsCsv(c);
    CHECK(bars.rfind("approach,precision,recall,f_measure\n", 0) == 0);
    CHECK(std::count(bars.begin(), bars.end(), '\n') == 3);
  }
}
