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

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mlopsrec/common.hpp"
#include "mlopsrec/dataset.hpp"
#include "mlopsrec/encoding.hpp"
#include "mlopsrec/tally.hpp"

namespace mlopsrec {

// Encoded inputs and gold outputs of the training records.
struct TrainingMatrix {
  Vocabulary vocab;
  std::vector<FeatureVector> vectors;
  std::vector<OutputLabels> labels;
};

TrainingMatrix BuildTrainingMatrix(const std::vector<FeatureView>& views,
                                   const Vocabulary& vocab);

// Throws kInvalidArgument when empty, misaligned or of the wrong width.
void ValidateTrainingMatrix(const TrainingMatrix& data);

// Gini impurity 1 - sum(p_i^2) of a class-count histogram; 0 when empty.
double GiniImpurity(const std::vector<std::size_t>& class_counts);

// Impurity of one output field over a group of records. Each record's whole
// label set for the field is one class, so a node is pure in a field exactly
// when its records agree on that field.
double FieldImpurity(const std::vector<const OutputLabels*>& group,
                     OutputField field);

// Mean of FieldImpurity over the four output fields.
double MeanImpurity(const std::vector<const OutputLabels*>& group);

struct TreeParams {
  std::optional<std::size_t> max_depth;  // unlimited when empty
  std::size_t min_leaf_size = 1;

  friend bool operator==(const TreeParams&, const TreeParams&) = default;
};

struct TreeNode {
  // Split feature, or empty for a leaf.
  std::optional<InputFeature> feature;
  // Child node index per block-local category; -1 where no training record
  // reached that category (prediction stops at this node).
  std::vector<int> children;
  // Label frequencies over the training records that reached this node.
  LabelTally tally;

  bool is_leaf() const { return !feature.has_value(); }
  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

class DecisionTreeModel {
 public:
  DecisionTreeModel() = default;
  DecisionTreeModel(Vocabulary vocab, TreeParams params,
                    std::vector<InputFeature> features,
                    std::vector<TreeNode> nodes);

  const Vocabulary& vocab() const { return vocab_; }
  const TreeParams& params() const { return params_; }
  // Features this tree may split on (all of them unless grown in a forest).
  const std::vector<InputFeature>& features() const { return features_; }
  const std::vector<TreeNode>& nodes() const { return nodes_; }  // [0] is root

  std::size_t LeafCount() const;
  std::size_t Depth() const;

  // The node a vector is routed to.
  const TreeNode& Route(const FeatureVector& v) const;

  friend bool operator==(const DecisionTreeModel&, const DecisionTreeModel&) = default;

 private:
  Vocabulary vocab_;
  TreeParams params_;
  std::vector<InputFeature> features_;
  std::vector<TreeNode> nodes_;
};

// Recursive multiway splitting on the feature that minimizes the
// size-weighted MeanImpurity of the children (ties: nature before type).
// A node becomes a leaf when it is pure in every field, at max_depth, when
// no remaining feature takes two values, or when every candidate split
// leaves a child below min_leaf_size. Each feature is split at most once
// per path.
DecisionTreeModel FitTree(const TrainingMatrix& data, const TreeParams& params);

// Routes v to a node and reads its tally out: set-valued fields keep labels
// with frequency >= 1/2 (most frequent label as fallback), project_type is
// the modal value. Ties break lexicographically.
OutputLabels PredictTree(const DecisionTreeModel& model, const FeatureVector& v);

struct ForestParams {
  std::size_t n_trees = 100;
  std::uint64_t seed = 0;
  bool bootstrap = true;
  // Features drawn per tree; ceil(sqrt(2)) = 2 when empty.
  std::optional<std::size_t> max_features;
  TreeParams tree;

  friend bool operator==(const ForestParams&, const ForestParams&) = default;
};

class RandomForestModel {
 public:
  RandomForestModel() = default;
  RandomForestModel(Vocabulary vocab, ForestParams params,
                    std::vector<DecisionTreeModel> trees);

  const Vocabulary& vocab() const { return vocab_; }
  const ForestParams& params() const { return params_; }
  const std::vector<DecisionTreeModel>& trees() const { return trees_; }

  friend bool operator==(const RandomForestModel&, const RandomForestModel&) = default;

 private:
  Vocabulary vocab_;
  ForestParams params_;
  std::vector<DecisionTreeModel> trees_;
};

// Tree t draws from Rng(seed + t): first its feature subset (shuffle the two
// features, keep the first max_features), then, when bootstrapping, n
// training indices with replacement. Trees are grown on up to `threads`
// worker threads (0 = hardware concurrency); the result does not depend on
// the thread count.
RandomForestModel FitForest(const TrainingMatrix& data,
                            const ForestParams& params, unsigned threads = 0);

// Label kept iff more than half of the trees predict it (most-voted label as
// fallback); project_type by plurality. Ties break lexicographically.
OutputLabels PredictForest(const RandomForestModel& model,
                           const FeatureVector& v);

class KnnModel {
 public:
  KnnModel() = default;
  KnnModel(Vocabulary vocab, std::size_t requested_k,
           std::vector<FeatureVector> vectors, std::vector<OutputLabels> labels);

  const Vocabulary& vocab() const { return vocab_; }
  std::size_t requested_k() const { return requested_k_; }
  // min(requested_k, store size).
  std::size_t k() const { return std::min(requested_k_, vectors_.size()); }
  bool k_clamped() const { return requested_k_ > vectors_.size(); }
  const std::vector<FeatureVector>& vectors() const { return vectors_; }
  const std::vector<OutputLabels>& labels() const { return labels_; }

  friend bool operator==(const KnnModel&, const KnnModel&) = default;

 private:
  Vocabulary vocab_;
  std::size_t requested_k_ = 5;
  std::vector<FeatureVector> vectors_;
  std::vector<OutputLabels> labels_;
};

KnnModel FitKnn(const TrainingMatrix& data, std::size_t k);

struct KnnPrediction {
  OutputLabels labels;
  std::vector<std::size_t> neighbors;  // store indices, nearest first
  bool k_clamped = false;
};

// The k nearest stored vectors by Hamming distance, ties broken by store
// order. A label is kept iff more than half of the neighbors carry it
// (most frequent label as fallback); project_type is the modal value.
KnnPrediction PredictKnnDetailed(const KnnModel& model, const FeatureVector& v);
OutputLabels PredictKnn(const KnnModel& model, const FeatureVector& v);

enum class Approach { kRuleBased, kDecisionTree, kRandomForest, kKnn };
inline constexpr std::array<Approach, 4> kAllApproaches = {
    Approach::kRuleBased, Approach::kDecisionTree, Approach::kRandomForest,
    Approach::kKnn};

std::string_view ToString(Approach a);  // "rule_based", "decision_tree", ...
Approach ParseApproach(std::string_view text);

inline constexpr int kModelFormatVersion = 1;

// A fitted classifier plus what is needed to reproduce and audit it.
struct TrainedModel {
  std::variant<DecisionTreeModel, RandomForestModel, KnnModel> model;
  std::uint64_t seed = 0;
  // Quick metrics on the training split, written by the trainer.
  std::map<std::string, double> self_check;

  Approach approach() const;
  const Vocabulary& vocab() const;

  OutputLabels Predict(const FeatureVector& v) const;
  OutputLabels Predict(const Context& inputs) const;

  friend bool operator==(const TrainedModel&, const TrainedModel&) = default;
};

// JSON with format_version, approach, seed, vocabulary, hyperparameters and
// the full tree structures or KNN store. Output is byte-stable.
std::string SerializeModel(const TrainedModel& model);
TrainedModel LoadModel(std::string_view json_text);
TrainedModel LoadModelFile(const std::string& path);

}  // namespace mlopsrec
