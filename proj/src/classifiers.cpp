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

#include "mlopsrec/classifiers.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "mlopsrec/rng.hpp"

namespace mlopsrec {
namespace {

constexpr std::array<InputFeature, kNumInputFeatures> kAllInputFeatures = {
    InputFeature::kNature, InputFeature::kType};

bool PureInEveryField(const std::vector<const OutputLabels*>& group) {
  for (const OutputLabels* labels : group) {
    if (!(*labels == *group.front())) return false;
  }
  return true;
}

class TreeGrower {
 public:
  TreeGrower(const TrainingMatrix& data, const TreeParams& params,
             std::vector<InputFeature> features)
      : data_(data), params_(params), features_(std::move(features)) {
    categories_.reserve(data.vectors.size());
    for (const auto& v : data.vectors) {
      categories_.push_back(
          {DecodeBlock(v, data.vocab, InputFeature::kNature),
           DecodeBlock(v, data.vocab, InputFeature::kType)});
    }
  }

  DecisionTreeModel Grow() {
    std::vector<std::size_t> all(data_.vectors.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    GrowNode(all, 0, {});
    return DecisionTreeModel(data_.vocab, params_, features_, std::move(nodes_));
  }

 private:
  using Partition = std::vector<std::vector<std::size_t>>;

  Partition PartitionBy(const std::vector<std::size_t>& rows,
                        InputFeature f) const {
    Partition parts(data_.vocab.block_size(f));
    for (std::size_t row : rows) {
      parts[categories_[row][static_cast<std::size_t>(f)]].push_back(row);
    }
    return parts;
  }

  std::vector<const OutputLabels*> Group(const std::vector<std::size_t>& rows) const {
    std::vector<const OutputLabels*> group;
    group.reserve(rows.size());
    for (std::size_t row : rows) group.push_back(&data_.labels[row]);
    return group;
  }

  // Returns the node index.
  int GrowNode(const std::vector<std::size_t>& rows, std::size_t depth,
               std::array<bool, kNumInputFeatures> used) {
    const int index = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    for (std::size_t row : rows) nodes_[index].tally.Add(data_.labels[row]);

    const auto group = Group(rows);
    if (PureInEveryField(group)) return index;
    if (params_.max_depth && depth >= *params_.max_depth) return index;

    std::optional<InputFeature> best;
    double best_score = 0.0;
    Partition best_parts;
    for (InputFeature f : features_) {
      if (used[static_cast<std::size_t>(f)]) continue;
      Partition parts = PartitionBy(rows, f);
      std::size_t non_empty = 0;
      bool too_small = false;
      double score = 0.0;
      for (const auto& part : parts) {
        if (part.empty()) continue;
        ++non_empty;
        too_small = too_small || part.size() < params_.min_leaf_size;
        score += static_cast<double>(part.size()) /
                 static_cast<double>(rows.size()) * MeanImpurity(Group(part));
      }
      if (non_empty < 2 || too_small) continue;
      if (!best || score < best_score) {
        best = f;
        best_score = score;
        best_parts = std::move(parts);
      }
    }
    if (!best) return index;

    used[static_cast<std::size_t>(*best)] = true;
    std::vector<int> children(best_parts.size(), -1);
    for (std::size_t c = 0; c < best_parts.size(); ++c) {
      if (!best_parts[c].empty()) {
        children[c] = GrowNode(best_parts[c], depth + 1, used);
      }
    }
    nodes_[index].feature = best;
    nodes_[index].children = std::move(children);
    return index;
  }

  const TrainingMatrix& data_;
  const TreeParams& params_;
  std::vector<InputFeature> features_;
  std::vector<std::array<std::size_t, kNumInputFeatures>> categories_;
  std::vector<TreeNode> nodes_;
};

void CheckWidth(const FeatureVector& v, const Vocabulary& vocab) {
  if (v.size() != vocab.width()) {
    throw Error(ErrorKind::kInvalidArgument,
                "feature vector width " + std::to_string(v.size()) +
                    " does not match model vocabulary width " +
                    std::to_string(vocab.width()));
  }
}

DecisionTreeModel FitForestTree(const TrainingMatrix& data,
                                const ForestParams& params, std::size_t t) {
  Rng rng(params.seed + t);

  std::vector<InputFeature> features(kAllInputFeatures.begin(),
                                     kAllInputFeatures.end());
  rng.Shuffle(features);
  const auto default_features = static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(kNumInputFeatures))));
  const std::size_t keep =
      std::clamp<std::size_t>(params.max_features.value_or(default_features), 1,
                              kNumInputFeatures);
  features.resize(keep);
  std::sort(features.begin(), features.end());

  if (!params.bootstrap) return TreeGrower(data, params.tree, features).Grow();

  TrainingMatrix sample;
  sample.vocab = data.vocab;
  const std::size_t n = data.vectors.size();
  sample.vectors.reserve(n);
  sample.labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = static_cast<std::size_t>(rng.UniformBelow(n));
    sample.vectors.push_back(data.vectors[row]);
    sample.labels.push_back(data.labels[row]);
  }
  return TreeGrower(sample, params.tree, features).Grow();
}

}  // namespace

TrainingMatrix BuildTrainingMatrix(const std::vector<FeatureView>& views,
                                   const Vocabulary& vocab) {
  TrainingMatrix data;
  data.vocab = vocab;
  data.vectors.reserve(views.size());
  data.labels.reserve(views.size());
  for (const auto& view : views) {
    data.vectors.push_back(Encode(view.inputs, vocab));
    data.labels.push_back(view.outputs);
  }
  return data;
}

void ValidateTrainingMatrix(const TrainingMatrix& data) {
  if (data.vectors.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "training data is empty");
  }
  if (data.vectors.size() != data.labels.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "training data has " + std::to_string(data.vectors.size()) +
                    " vectors but " + std::to_string(data.labels.size()) +
                    " label rows");
  }
  for (const auto& v : data.vectors) Decode(v, data.vocab);
}

double GiniImpurity(const std::vector<std::size_t>& class_counts) {
  const std::size_t total =
      std::accumulate(class_counts.begin(), class_counts.end(), std::size_t{0});
  if (total == 0) return 0.0;
  double sum_sq = 0.0;
  for (std::size_t c : class_counts) {
    const double p = static_cast<double>(c) / static_cast<double>(total);
    sum_sq += p * p;
  }
  return 1.0 - sum_sq;
}

double FieldImpurity(const std::vector<const OutputLabels*>& group,
                     OutputField field) {
  std::map<LabelSet, std::size_t> classes;
  for (const OutputLabels* labels : group) ++classes[(*labels)[field]];
  std::vector<std::size_t> counts;
  counts.reserve(classes.size());
  for (const auto& [_, count] : classes) counts.push_back(count);
  return GiniImpurity(counts);
}

double MeanImpurity(const std::vector<const OutputLabels*>& group) {
  double sum = 0.0;
  for (OutputField f : kAllOutputFields) sum += FieldImpurity(group, f);
  return sum / static_cast<double>(kNumOutputFields);
}

DecisionTreeModel::DecisionTreeModel(Vocabulary vocab, TreeParams params,
                                     std::vector<InputFeature> features,
                                     std::vector<TreeNode> nodes)
    : vocab_(std::move(vocab)),
      params_(params),
      features_(std::move(features)),
      nodes_(std::move(nodes)) {}

std::size_t DecisionTreeModel::LeafCount() const {
  return static_cast<std::size_t>(std::count_if(
      nodes_.begin(), nodes_.end(), [](const TreeNode& n) { return n.is_leaf(); }));
}

std::size_t DecisionTreeModel::Depth() const {
  // Children always have larger indices than their parent.
  std::vector<std::size_t> depth(nodes_.size(), 0);
  std::size_t deepest = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (int child : nodes_[i].children) {
      if (child < 0) continue;
      depth[static_cast<std::size_t>(child)] = depth[i] + 1;
      deepest = std::max(deepest, depth[i] + 1);
    }
  }
  return deepest;
}

const TreeNode& DecisionTreeModel::Route(const FeatureVector& v) const {
  CheckWidth(v, vocab_);
  Decode(v, vocab_);
  if (nodes_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "decision tree has no nodes");
  }
  const TreeNode* node = &nodes_.front();
  while (!node->is_leaf()) {
    const std::size_t category = DecodeBlock(v, vocab_, *node->feature);
    const int child = node->children.at(category);
    if (child < 0) break;
    node = &nodes_.at(static_cast<std::size_t>(child));
  }
  return *node;
}

DecisionTreeModel FitTree(const TrainingMatrix& data, const TreeParams& params) {
  ValidateTrainingMatrix(data);
  return TreeGrower(data, params, {kAllInputFeatures.begin(), kAllInputFeatures.end()})
      .Grow();
}

OutputLabels PredictTree(const DecisionTreeModel& model, const FeatureVector& v) {
  return ReadOut(model.Route(v).tally, Threshold::kAtLeastHalf);
}

RandomForestModel::RandomForestModel(Vocabulary vocab, ForestParams params,
                                     std::vector<DecisionTreeModel> trees)
    : vocab_(std::move(vocab)), params_(params), trees_(std::move(trees)) {}

RandomForestModel FitForest(const TrainingMatrix& data,
                            const ForestParams& params, unsigned threads) {
  ValidateTrainingMatrix(data);
  if (params.n_trees == 0) {
    throw Error(ErrorKind::kInvalidArgument, "n_trees must be at least 1");
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, params.n_trees));

  std::vector<DecisionTreeModel> trees(params.n_trees);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto work = [&] {
    for (std::size_t t = next++; t < params.n_trees; t = next++) {
      try {
        trees[t] = FitForestTree(data, params, t);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return RandomForestModel(data.vocab, params, std::move(trees));
}

OutputLabels PredictForest(const RandomForestModel& model,
                           const FeatureVector& v) {
  CheckWidth(v, model.vocab());
  LabelTally votes;
  for (const auto& tree : model.trees()) votes.Add(PredictTree(tree, v));
  return ReadOut(votes, Threshold::kMoreThanHalf);
}

KnnModel::KnnModel(Vocabulary vocab, std::size_t requested_k,
                   std::vector<FeatureVector> vectors,
                   std::vector<OutputLabels> labels)
    : vocab_(std::move(vocab)),
      requested_k_(requested_k),
      vectors_(std::move(vectors)),
      labels_(std::move(labels)) {}

KnnModel FitKnn(const TrainingMatrix& data, std::size_t k) {
  ValidateTrainingMatrix(data);
  if (k == 0) throw Error(ErrorKind::kInvalidArgument, "k must be at least 1");
  return KnnModel(data.vocab, k, data.vectors, data.labels);
}

KnnPrediction PredictKnnDetailed(const KnnModel& model, const FeatureVector& v) {
  CheckWidth(v, model.vocab());
  const auto& store = model.vectors();
  if (store.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "KNN store is empty");
  }
  std::vector<std::pair<std::size_t, std::size_t>> ranked;  // (distance, index)
  ranked.reserve(store.size());
  for (std::size_t i = 0; i < store.size(); ++i) {
    ranked.emplace_back(HammingDistance(store[i], v), i);
  }
  const std::size_t k = model.k();
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(k),
                    ranked.end());

  KnnPrediction out;
  out.k_clamped = model.k_clamped();
  LabelTally tally;
  for (std::size_t i = 0; i < k; ++i) {
    out.neighbors.push_back(ranked[i].second);
    tally.Add(model.labels()[ranked[i].second]);
  }
  out.labels = ReadOut(tally, Threshold::kMoreThanHalf);
  return out;
}

OutputLabels PredictKnn(const KnnModel& model, const FeatureVector& v) {
  return PredictKnnDetailed(model, v).labels;
}

std::string_view ToString(Approach a) {
  switch (a) {
    case Approach::kRuleBased: return "rule_based";
    case Approach::kDecisionTree: return "decision_tree";
    case Approach::kRandomForest: return "random_forest";
    case Approach::kKnn: return "knn";
  }
  return "";
}

Approach ParseApproach(std::string_view text) {
  std::string key = NormalizeLabel(text);
  std::replace(key.begin(), key.end(), '-', '_');
  for (Approach a : kAllApproaches) {
    if (ToString(a) == key) return a;
  }
  throw Error(ErrorKind::kInvalidArgument,
              "unknown approach '" + key +
                  "', allowed: rule_based|decision_tree|random_forest|knn");
}

Approach TrainedModel::approach() const {
  switch (model.index()) {
    case 0: return Approach::kDecisionTree;
    case 1: return Approach::kRandomForest;
    default: return Approach::kKnn;
  }
}

const Vocabulary& TrainedModel::vocab() const {
  return std::visit([](const auto& m) -> const Vocabulary& { return m.vocab(); },
                    model);
}

OutputLabels TrainedModel::Predict(const FeatureVector& v) const {
  return std::visit(
      [&](const auto& m) -> OutputLabels {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, DecisionTreeModel>) {
          return PredictTree(m, v);
        } else if constexpr (std::is_same_v<T, RandomForestModel>) {
          return PredictForest(m, v);
        } else {
          return PredictKnn(m, v);
        }
      },
      model);
}

OutputLabels TrainedModel::Predict(const Context& inputs) const {
  return Predict(Encode(inputs, vocab()));
}

}  // namespace mlopsrec
