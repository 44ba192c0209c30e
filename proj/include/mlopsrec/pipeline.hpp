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
#include <optional>
#include <string>
#include <vector>

#include "mlopsrec/classifiers.hpp"
#include "mlopsrec/dataset.hpp"
#include "mlopsrec/encoding.hpp"
#include "mlopsrec/evaluation.hpp"
#include "mlopsrec/predictor.hpp"
#include "mlopsrec/rules.hpp"

namespace mlopsrec {

// Hyperparameters and seeding shared by training and evaluation. All
// randomness derives from `seed`.
struct TrainingConfig {
  std::uint64_t seed = 0;
  Ratio ratio{8, 10};
  ExtractionStrategy strategy = ExtractionStrategy::kUnion;
  std::size_t k = 5;
  std::size_t n_trees = 100;
  std::optional<std::size_t> max_depth;
  std::size_t min_leaf_size = 1;
  // Encode against every category of the closed domains rather than only
  // the ones seen in training.
  bool full_vocabulary = true;
  unsigned threads = 0;
};

struct PreparedData {
  std::vector<FeatureView> views;  // AI records only, in input order
  SplitResult split;
  std::vector<FeatureView> train;
  std::vector<FeatureView> test;
};

// FilterAi, ProjectFeatures and SplitTrainTest. Throws kInvalidArgument
// "no AI projects after filtering" when nothing survives the filter.
PreparedData PrepareData(const std::vector<ProjectRecord>& records,
                         const TrainingConfig& config);

// Rule extraction for kRuleBased, otherwise a fitted model with its
// training-split self check filled in.
Predictor TrainApproach(Approach approach, const std::vector<FeatureView>& train,
                        const TrainingConfig& config);

// Predicts every view and scores against its outputs. Views the predictor
// cannot answer (no applicable rule, or a category outside a model's
// vocabulary) count as empty predictions and are tallied in `unanswered`.
EvaluationReport EvaluatePredictor(const Predictor& predictor,
                                   const std::vector<FeatureView>& views);

}  // namespace mlopsrec
