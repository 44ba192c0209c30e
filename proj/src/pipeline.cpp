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

#include "mlopsrec/pipeline.hpp"

namespace mlopsrec {
namespace {

std::vector<FeatureView> Select(const std::vector<FeatureView>& views,
                                const std::vector<std::size_t>& indices) {
  std::vector<FeatureView> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(views[i]);
  return out;
}

}  // namespace

PreparedData PrepareData(const std::vector<ProjectRecord>& records,
                         const TrainingConfig& config) {
  PreparedData data;
  data.views = ProjectFeatures(FilterAi(records));
  if (data.views.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no AI projects after filtering");
  }
  data.split = SplitTrainTest(data.views.size(), config.ratio, config.seed);
  data.train = Select(data.views, data.split.train);
  data.test = Select(data.views, data.split.test);
  return data;
}

Predictor TrainApproach(Approach approach, const std::vector<FeatureView>& train,
                        const TrainingConfig& config) {
  if (train.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "empty training set");
  }
  if (approach == Approach::kRuleBased) {
    RuleSet rules = ExtractRules(train, config.strategy);
    rules.provenance += ", seed " + std::to_string(config.seed) + ", split " +
                        ToString(config.ratio);
    return rules;
  }

  const Vocabulary vocab =
      config.full_vocabulary ? Vocabulary::Full() : BuildVocabulary(train);
  const TrainingMatrix data = BuildTrainingMatrix(train, vocab);
  const TreeParams tree{config.max_depth, config.min_leaf_size};

  TrainedModel model;
  model.seed = config.seed;
  switch (approach) {
    case Approach::kDecisionTree:
      model.model = FitTree(data, tree);
      break;
    case Approach::kRandomForest: {
      ForestParams params;
      params.n_trees = config.n_trees;
      params.seed = config.seed;
      params.tree = tree;
      model.model = FitForest(data, params, config.threads);
      break;
    }
    case Approach::kKnn:
      model.model = FitKnn(data, config.k);
      break;
    case Approach::kRuleBased:
      break;
  }
  const EvaluationReport check = EvaluatePredictor(model, train);
  model.self_check = {{"train_precision", check.precision()},
                      {"train_recall", check.recall()},
                      {"train_f_measure", check.f_measure()}};
  return model;
}

EvaluationReport EvaluatePredictor(const Predictor& predictor,
                                   const std::vector<FeatureView>& views) {
  std::vector<OutputLabels> gold;
  std::vector<OutputLabels> predicted;
  gold.reserve(views.size());
  predicted.reserve(views.size());
  std::size_t unanswered = 0;
  for (const auto& view : views) {
    gold.push_back(view.outputs);
    try {
      predicted.push_back(Predict(predictor, view.inputs));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kNoMatch &&
          e.kind() != ErrorKind::kUnknownCategory) {
        throw;
      }
      predicted.emplace_back();
      ++unanswered;
    }
  }
  return MakeReport(std::string(ToString(ApproachOf(predictor))), gold,
                    predicted, unanswered);
}

}  // namespace mlopsrec
