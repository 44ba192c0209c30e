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

#include <fstream>
#include <sstream>

#include "json_util.hpp"
#include "mlopsrec/classifiers.hpp"

namespace mlopsrec {
namespace {

using json_util::json;

json VocabularyJson(const Vocabulary& vocab) {
  json natures = json::array();
  for (DataNature n : vocab.natures()) natures.push_back(std::string(ToString(n)));
  json types = json::array();
  for (DataType t : vocab.types()) types.push_back(std::string(ToString(t)));
  json out;
  out["data_nature"] = std::move(natures);
  out["data_type"] = std::move(types);
  return out;
}

Vocabulary VocabularyFromJson(const json& obj) {
  std::vector<DataNature> natures;
  std::vector<DataType> types;
  for (const auto& n : json_util::Member(obj, "data_nature", "vocabulary")) {
    natures.push_back(ParseDataNature(json_util::String(n, "vocabulary.data_nature")));
  }
  for (const auto& t : json_util::Member(obj, "data_type", "vocabulary")) {
    types.push_back(ParseDataType(json_util::String(t, "vocabulary.data_type")));
  }
  Vocabulary vocab(natures, types);
  // Index order is part of the encoding; a reordered list is not the same
  // vocabulary.
  if (vocab.natures() != natures || vocab.types() != types) {
    throw Error(ErrorKind::kValidation,
                "vocabulary: categories must be unique and sorted by name");
  }
  return vocab;
}

json OptionalSize(const std::optional<std::size_t>& value) {
  return value ? json(*value) : json(nullptr);
}

std::optional<std::size_t> OptionalSizeFromJson(const json& value) {
  if (value.is_null()) return std::nullopt;
  return value.get<std::size_t>();
}

json TreeParamsJson(const TreeParams& p) {
  json out;
  out["max_depth"] = OptionalSize(p.max_depth);
  out["min_leaf_size"] = p.min_leaf_size;
  return out;
}

TreeParams TreeParamsFromJson(const json& obj) {
  TreeParams p;
  p.max_depth = OptionalSizeFromJson(json_util::Member(obj, "max_depth", "tree params"));
  p.min_leaf_size = json_util::Member(obj, "min_leaf_size", "tree params").get<std::size_t>();
  return p;
}

json TallyJson(const LabelTally& tally) {
  json out;
  out["total"] = tally.total;
  for (OutputField f : kAllOutputFields) {
    json counts = json::object();
    for (const auto& [label, count] : tally[f]) counts[label] = count;
    out[std::string(ToString(f))] = std::move(counts);
  }
  return out;
}

LabelTally TallyFromJson(const json& obj) {
  LabelTally tally;
  tally.total = json_util::Member(obj, "total", "tally").get<std::size_t>();
  for (OutputField f : kAllOutputFields) {
    const json& counts = json_util::Member(obj, ToString(f), "tally");
    for (const auto& [label, count] : counts.items()) {
      tally.fields[static_cast<std::size_t>(f)][label] = count.get<std::size_t>();
    }
  }
  return tally;
}

json FeatureJson(InputFeature f) { return std::string(ToString(f)); }

InputFeature FeatureFromJson(const json& value) {
  const std::string name = json_util::String(value, "feature");
  if (name == ToString(InputFeature::kNature)) return InputFeature::kNature;
  if (name == ToString(InputFeature::kType)) return InputFeature::kType;
  throw Error(ErrorKind::kValidation, "unknown split feature '" + name + "'");
}

json TreeJson(const DecisionTreeModel& tree) {
  json features = json::array();
  for (InputFeature f : tree.features()) features.push_back(FeatureJson(f));
  json nodes = json::array();
  for (const TreeNode& node : tree.nodes()) {
    json n;
    n["feature"] = node.feature ? FeatureJson(*node.feature) : json(nullptr);
    n["children"] = node.children;
    n["tally"] = TallyJson(node.tally);
    nodes.push_back(std::move(n));
  }
  json out;
  out["features"] = std::move(features);
  out["nodes"] = std::move(nodes);
  return out;
}

DecisionTreeModel TreeFromJson(const json& obj, const Vocabulary& vocab,
                               const TreeParams& params) {
  std::vector<InputFeature> features;
  for (const auto& f : json_util::Member(obj, "features", "tree")) {
    features.push_back(FeatureFromJson(f));
  }
  std::vector<TreeNode> nodes;
  const json& list = json_util::Member(obj, "nodes", "tree");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& n = list[i];
    TreeNode node;
    const json& feature = json_util::Member(n, "feature", "tree node");
    if (!feature.is_null()) node.feature = FeatureFromJson(feature);
    node.children = json_util::Member(n, "children", "tree node").get<std::vector<int>>();
    node.tally = TallyFromJson(json_util::Member(n, "tally", "tree node"));
    if (node.feature && node.children.size() != vocab.block_size(*node.feature)) {
      throw Error(ErrorKind::kValidation,
                  "tree node " + std::to_string(i) + ": child count mismatch");
    }
    for (int child : node.children) {
      if (child >= 0 && (static_cast<std::size_t>(child) <= i ||
                         static_cast<std::size_t>(child) >= list.size())) {
        throw Error(ErrorKind::kValidation,
                    "tree node " + std::to_string(i) + ": bad child index");
      }
    }
    nodes.push_back(std::move(node));
  }
  if (nodes.empty()) throw Error(ErrorKind::kValidation, "tree has no nodes");
  return DecisionTreeModel(vocab, params, std::move(features), std::move(nodes));
}

FeatureVector BitsFromString(const std::string& text) {
  std::vector<std::uint8_t> bits;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::kValidation, "KNN store: bad bit string '" + text + "'");
    }
    bits.push_back(c == '1');
  }
  return FeatureVector(std::move(bits));
}

}  // namespace

std::string SerializeModel(const TrainedModel& model) {
  json doc;
  doc["format_version"] = kModelFormatVersion;
  doc["approach"] = std::string(ToString(model.approach()));
  doc["seed"] = model.seed;
  doc["vocabulary"] = VocabularyJson(model.vocab());
  json self_check = json::object();
  for (const auto& [key, value] : model.self_check) self_check[key] = value;
  doc["self_check"] = std::move(self_check);

  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, DecisionTreeModel>) {
          doc["hyperparameters"] = TreeParamsJson(m.params());
          doc["tree"] = TreeJson(m);
        } else if constexpr (std::is_same_v<T, RandomForestModel>) {
          const ForestParams& p = m.params();
          json h;
          h["n_trees"] = p.n_trees;
          h["seed"] = p.seed;
          h["bootstrap"] = p.bootstrap;
          h["max_features"] = OptionalSize(p.max_features);
          h["tree"] = TreeParamsJson(p.tree);
          doc["hyperparameters"] = std::move(h);
          json trees = json::array();
          for (const auto& tree : m.trees()) trees.push_back(TreeJson(tree));
          doc["trees"] = std::move(trees);
        } else {
          json h;
          h["k"] = m.requested_k();
          doc["hyperparameters"] = std::move(h);
          json store = json::array();
          for (std::size_t i = 0; i < m.vectors().size(); ++i) {
            json entry;
            entry["bits"] = m.vectors()[i].ToString();
            entry["labels"] = json_util::ToJson(m.labels()[i]);
            store.push_back(std::move(entry));
          }
          doc["store"] = std::move(store);
        }
      },
      model.model);
  return json_util::Dump(doc);
}

TrainedModel LoadModel(std::string_view json_text) {
  const json doc = json_util::ParseDocument(json_text, "model file");
  TrainedModel out;
  try {
    const json& version = json_util::Member(doc, "format_version", "model file");
    if (!version.is_number_integer() || version.get<int>() != kModelFormatVersion) {
      throw Error(ErrorKind::kValidation,
                  "model file: unsupported format_version " + version.dump());
    }
    const Approach approach = ParseApproach(
        json_util::String(json_util::Member(doc, "approach", "model file"), "approach"));
    out.seed = json_util::Member(doc, "seed", "model file").get<std::uint64_t>();
    const Vocabulary vocab =
        VocabularyFromJson(json_util::Member(doc, "vocabulary", "model file"));
    if (doc.contains("self_check")) {
      for (const auto& [key, value] : doc["self_check"].items()) {
        out.self_check[key] = value.get<double>();
      }
    }
    const json& h = json_util::Member(doc, "hyperparameters", "model file");
    switch (approach) {
      case Approach::kDecisionTree: {
        const TreeParams params = TreeParamsFromJson(h);
        out.model = TreeFromJson(json_util::Member(doc, "tree", "model file"), vocab, params);
        break;
      }
      case Approach::kRandomForest: {
        ForestParams p;
        p.n_trees = json_util::Member(h, "n_trees", "hyperparameters").get<std::size_t>();
        p.seed = json_util::Member(h, "seed", "hyperparameters").get<std::uint64_t>();
        p.bootstrap = json_util::Member(h, "bootstrap", "hyperparameters").get<bool>();
        p.max_features = OptionalSizeFromJson(
            json_util::Member(h, "max_features", "hyperparameters"));
        p.tree = TreeParamsFromJson(json_util::Member(h, "tree", "hyperparameters"));
        std::vector<DecisionTreeModel> trees;
        for (const auto& t : json_util::Member(doc, "trees", "model file")) {
          trees.push_back(TreeFromJson(t, vocab, p.tree));
        }
        if (trees.size() != p.n_trees) {
          throw Error(ErrorKind::kValidation, "model file: tree count != n_trees");
        }
        out.model = RandomForestModel(vocab, p, std::move(trees));
        break;
      }
      case Approach::kKnn: {
        const auto k = json_util::Member(h, "k", "hyperparameters").get<std::size_t>();
        if (k == 0) throw Error(ErrorKind::kValidation, "model file: k must be >= 1");
        std::vector<FeatureVector> vectors;
        std::vector<OutputLabels> labels;
        for (const auto& entry : json_util::Member(doc, "store", "model file")) {
          FeatureVector v = BitsFromString(
              json_util::String(json_util::Member(entry, "bits", "store"), "store.bits"));
          Decode(v, vocab);
          vectors.push_back(std::move(v));
          labels.push_back(json_util::OutputsFromJson(
              json_util::Member(entry, "labels", "store"), "store.labels", false));
        }
        if (vectors.empty()) {
          throw Error(ErrorKind::kValidation, "model file: KNN store is empty");
        }
        out.model = KnnModel(vocab, k, std::move(vectors), std::move(labels));
        break;
      }
      case Approach::kRuleBased:
        throw Error(ErrorKind::kValidation,
                    "model file: rule_based is stored as a rule file, not a model");
    }
  } catch (const json_util::json::exception& e) {
    throw Error(ErrorKind::kValidation, std::string("model file: ") + e.what());
  }
  return out;
}

TrainedModel LoadModelFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open model file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return LoadModel(buffer.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

}  // namespace mlopsrec
