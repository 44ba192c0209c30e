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
#include "mlopsrec/catalogue.hpp"
#include "test_support.hpp"

using namespace mlopsrec;
using testing::CatchError;
using testing::Contains;

namespace {

const char* kZenml = R"({"version": 1, "tools": [
  {"name": "ZenML", "phases": ["pipeline_orchestration", "deployment"],
   "integrates_with": ["scikit-learn", "Keras", "TensorFlow"]}]})";

ToolEntry Tool(std::string name, LabelSet edges) {
  return {std::move(name), {Phase::kDeployment}, std::move(edges)};
}

RuleSet ImageRule() {
  Rule r;
  r.id = "unstructured.image";
  r.condition = {DataNature::kUnstructured, DataType::kImage};
  r.outputs.preprocessing_tools() = {"opencv"};
  r.outputs.model_tools() = {"tensorflow"};
  r.outputs.project_type() = {"classification"};
  r.outputs.evaluation_metrics() = {"accuracy"};
  RuleSet rules;
  rules.rules = {r};
  return rules;
}

}  // namespace

TEST_SUITE("catalogue") {
  TEST_CASE("zenml entry loads with three normalized edges") {
    const ToolCatalogue c = LoadCatalogue(kZenml);
    REQUIRE(c.tools.size() == 1);
    CHECK(c.tools[0].name == "zenml");
    CHECK(c.tools[0].integrates_with == LabelSet{"keras", "scikit-learn", "tensorflow"});
    CHECK(c.warnings.empty());
    CHECK(LoadCatalogue(SerializeCatalogue(c)).tools == c.tools);
  }

  TEST_CASE("duplicate names, empty phases and blank files") {
    const auto dup = CatchError([] {
      LoadCatalogue(R"({"version": 1, "tools": [
        {"name": "mlflow", "phases": ["deployment"], "integrates_with": []},
        {"name": "MLflow", "phases": ["monitoring"], "integrates_with": []}]})");
    });
    REQUIRE(dup);
    CHECK(dup->kind == ErrorKind::kDuplicateId);
    CHECK(Contains(dup->message, "mlflow"));
    const auto phases = CatchError([] {
      LoadCatalogue(R"({"version": 1, "tools": [{"name": "x", "phases": [], "integrates_with": []}]})");
    });
    REQUIRE(phases);
    CHECK(phases->kind == ErrorKind::kValidation);
    CHECK(CatchError([] {
            LoadCatalogue(R"({"version": 1, "tools": [{"name": "x", "phases": ["cooking"]}]})");
          }));
    const ToolCatalogue empty = LoadCatalogue("  \n");
    CHECK(empty.tools.empty());
    CHECK(!empty.warnings.empty());
  }

  TEST_CASE("matching by integration edge") {
    OutputLabels predicted;
    predicted.model_tools() = {"tensorflow"};
    const auto matches = MatchMlopsTools(predicted, LoadCatalogue(kZenml));
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].tool.name == "zenml");
    CHECK(matches[0].matched_via == LabelSet{"tensorflow"});
  }

  TEST_CASE("disjoint predictions are reported as uncovered") {
    OutputLabels predicted;
    predicted.preprocessing_tools() = {"ffmpeg"};
    predicted.model_tools() = {"mediapipe"};
    const auto matches = MatchMlopsTools(predicted, LoadCatalogue(kZenml));
    CHECK(matches.empty());
    CHECK(UncoveredTools(predicted, matches) == LabelSet{"ffmpeg", "mediapipe"});
  }

  TEST_CASE("more matched tools rank first, then name") {
    ToolCatalogue c;
    c.tools = {Tool("a-one", {"keras"}), Tool("z-two", {"keras", "pandas"}),
               Tool("b-one", {"pandas"})};
    OutputLabels predicted;
    predicted.preprocessing_tools() = {"pandas"};
    predicted.model_tools() = {"keras"};
    const auto matches = MatchMlopsTools(predicted, c);
    REQUIRE(matches.size() == 3);
    CHECK(matches[0].tool.name == "z-two");
    CHECK(matches[1].tool.name == "a-one");
    CHECK(matches[2].tool.name == "b-one");
  }

  TEST_CASE("recommend assembles predictions and annotated tools") {
    const Predictor rules = ImageRule();
    const ToolCatalogue c = LoadCatalogue(kZenml);
    const Recommendation rec = Recommend("unstructured", "image", rules, c);
    CHECK(rec.approach == Approach::kRuleBased);
    REQUIRE(rec.mlops_tools.size() == 1);
    CHECK(rec.mlops_tools[0].tool.name == "zenml");
    CHECK(rec.mlops_tools[0].tool.phases.count(Phase::kDeployment) == 1);
    CHECK(rec.uncovered == LabelSet{"opencv"});
    CHECK(Contains(RenderRecommendation(rec), "zenml"));
    CHECK(Contains(RenderRecommendation(rec), "deployment"));
    const auto doc = nlohmann::json::parse(RecommendationJson(rec));
    CHECK(doc.at("approach") == "rule_based");
    CHECK(Recommend("unstructured", "image", rules, c) == rec);
  }

  TEST_CASE("invalid inputs fail before prediction; empty catalogue warns") {
    const Predictor rules = ImageRule();
    const auto err = CatchError([&] {
      Recommend("liquid", "image", rules, LoadCatalogue(kZenml));
    });
    REQUIRE(err);
    CHECK(err->kind == ErrorKind::kUnknownCategory);
    CHECK(CatchError([&] {
            Recommend("structured", "video", rules, LoadCatalogue(kZenml));
          })->kind == ErrorKind::kNoMatch);
    const Recommendation rec = Recommend("unstructured", "image", rules, ToolCatalogue{});
    CHECK(rec.mlops_tools.empty());
    CHECK(!rec.warnings.empty());
    CHECK(rec.predicted.model_tools() == LabelSet{"tensorflow"});
  }

  TEST_CASE("adding an entry never removes a recommendation") {
    std::mt19937_64 gen(6);
    const std::vector<std::string> pool = {"a", "b", "c", "d", "e", "f"};
    for (int i = 0; i < 100; ++i) {
      ToolCatalogue c;
      for (int t = 0; t < 4; ++t) {
        LabelSet edges;
        for (const auto& p : pool) {
          if (gen() % 3 == 0) edges.insert(p);
        }
        c.tools.push_back(Tool("tool" + std::to_string(t), edges));
      }
      OutputLabels predicted;
      predicted.model_tools() = {pool[gen() % pool.size()], pool[gen() % pool.size()]};
      const auto before = MatchMlopsTools(predicted, c);
      c.tools.push_back(Tool("extra", {pool[gen() % pool.size()]}));
      const auto after = MatchMlopsTools(predicted, c);
      for (const auto& m : before) {
        CHECK(std::find(after.begin(), after.end(), m) != after.end());
      }
    }
  }

  TEST_CASE("shipped catalogue is valid and carries the zenml example") {
    const ToolCatalogue c = LoadCatalogueFile(std::string(MLOPSREC_DATA_DIR) + "/catalogue.json");
    const auto it = std::find_if(c.tools.begin(), c.tools.end(),
                                 [](const ToolEntry& t) { return t.name == "zenml"; });
    REQUIRE(it != c.tools.end());
    for (const char* edge : {"scikit-learn", "keras", "tensorflow"}) {
      CHECK(it->integrates_with.count(edge) == 1);
    }
  }
}
