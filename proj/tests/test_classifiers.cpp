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
#include "mlopsrec/classifiers.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace mlopsrec;
using testing::CatchError;

namespace {

OutputLabels Labels(LabelSet pre, LabelSet model = {"m"}, std::string type = "classification",
                    LabelSet metrics = {"accuracy"}) {
  OutputLabels o;
  o.preprocessing_tools() = std::move(pre);
  o.model_tools() = std::move(model);
  o.project_type() = {std::move(type)};
  o.evaluation_metrics() = std::move(metrics);
  return o;
}

FeatureView View(Context c, OutputLabels o) { return {c, std::move(o)}; }

const Context kImg{DataNature::kUnstructured, DataType::kImage};
const Context kNum{DataNature::kStructured, DataType::kNumerical};

TrainingMatrix Matrix(const std::vector<FeatureView>& views) {
  return BuildTrainingMatrix(views, Vocabulary::Full());
}

// A one-node tree whose leaf holds exactly these label sets.
DecisionTreeModel LeafTree(const std::vector<OutputLabels>& members) {
  TreeNode leaf;
  for (const auto& m : members) leaf.tally.Add(m);
  return DecisionTreeModel(Vocabulary::Full(), {},
                           {InputFeature::kNature, InputFeature::kType}, {leaf});
}

}  // namespace

TEST_SUITE("classifiers") {
  TEST_CASE("Gini of pure and even groups") {
    CHECK(GiniImpurity({5}) == 0.0);
    CHECK(GiniImpurity({3, 3}) == doctest::Approx(0.5));
    CHECK(GiniImpurity({}) == 0.0);
    const OutputLabels a = Labels({"a"}), b = Labels({"b"});
    CHECK(FieldImpurity({&a, &b}, OutputField::kPreprocessingTools) == doctest::Approx(0.5));
    CHECK(FieldImpurity({&a, &b}, OutputField::kModelTools) == 0.0);
    CHECK(MeanImpurity({&a, &b}) == doctest::Approx(0.125));
  }

  TEST_CASE("single record tree is one leaf reproducing it") {
    const OutputLabels o = Labels({"pandas", "numpy"}, {"xgboost"}, "regression", {"rmse"});
    const auto data = Matrix({View(kNum, o)});
    const DecisionTreeModel tree = FitTree(data, {});
    CHECK(tree.nodes().size() == 1);
    CHECK(PredictTree(tree, data.vectors[0]) == o);
  }

  TEST_CASE("leaf threshold keeps labels named by at least half") {
    const auto data = Matrix({View(kImg, Labels({"pandas"})), View(kImg, Labels({"pandas"})),
                              View(kImg, Labels({"pandas", "numpy"})),
                              View(kImg, Labels({"opencv"}))});
    const DecisionTreeModel tree = FitTree(data, {});
    CHECK(tree.LeafCount() == 1);
    CHECK(PredictTree(tree, data.vectors[0]).preprocessing_tools() == LabelSet{"pandas"});
  }

  TEST_CASE("leaf fallback and tie-break") {
    const auto data = Matrix({View(kImg, Labels({"b"})), View(kImg, Labels({"a"}))});
    const auto tree = FitTree(data, {});
    // 1 of 2 meets the >= 1/2 threshold, so both are kept in a tree leaf.
    CHECK(PredictTree(tree, data.vectors[0]).preprocessing_tools() == LabelSet{"a", "b"});
    const auto three = Matrix({View(kImg, Labels({"b"})), View(kImg, Labels({"a"})),
                               View(kImg, Labels({"c"}))});
    CHECK(PredictTree(FitTree(three, {}), three.vectors[0]).preprocessing_tools() ==
          LabelSet{"a"});
    CHECK(PredictTree(tree, data.vectors[0]) == PredictTree(tree, data.vectors[0]));
  }

  TEST_CASE("one shared input pair reads out the field-wise majority") {
    std::mt19937_64 gen(8);
    auto views = oracle::RandomViews(gen, 15);
    for (auto& v : views) v.inputs = kImg;
    const auto tree = FitTree(Matrix(views), {});
    CHECK(tree.Depth() == 0);
    CHECK(PredictTree(tree, Encode(kImg, Vocabulary::Full())) ==
          oracle::GroupByReadout(views).at(kImg));
  }

  TEST_CASE("twelve distinct pairs give twelve leaves") {
    std::vector<FeatureView> views;
    int i = 0;
    for (DataNature n : kAllNatures) {
      for (DataType t : kAllTypes) {
        views.push_back(View({n, t}, Labels({"tool" + std::to_string(i++)})));
      }
    }
    const auto data = Matrix(views);
    const auto tree = FitTree(data, {});
    CHECK(tree.LeafCount() == 12);
    for (std::size_t r = 0; r < views.size(); ++r) {
      CHECK(PredictTree(tree, data.vectors[r]) == views[r].outputs);
    }
  }

  TEST_CASE("fully grown tree matches the group-by oracle") {
    std::mt19937_64 gen(21);
    for (int trial = 0; trial < 60; ++trial) {
      const auto views = oracle::RandomViews(gen, 1 + gen() % 60);
      const auto tree = FitTree(Matrix(views), {});
      for (const auto& [ctx, expected] : oracle::GroupByReadout(views)) {
        CHECK(PredictTree(tree, Encode(ctx, Vocabulary::Full())) == expected);
      }
      // Structural invariants: leaf tallies sum to the record count, no
      // feature repeats along a path.
      std::size_t leaf_total = 0;
      for (const auto& node : tree.nodes()) {
        if (node.is_leaf()) leaf_total += node.tally.total;
      }
      CHECK(leaf_total == views.size());
      CHECK(tree.Depth() <= 2);
    }
  }

  TEST_CASE("depth and leaf-size limits") {
    std::mt19937_64 gen(5);
    const auto views = oracle::RandomViews(gen, 60);
    const auto data = Matrix(views);
    CHECK(FitTree(data, {.max_depth = 0}).nodes().size() == 1);
    CHECK(FitTree(data, {.max_depth = 1}).Depth() <= 1);
    const auto coarse = FitTree(data, {.min_leaf_size = 20});
    for (const auto& node : coarse.nodes()) {
      if (node.is_leaf()) CHECK(node.tally.total >= 20);
    }
    CHECK(CatchError([] { FitTree(TrainingMatrix{}, {}); })->kind ==
          ErrorKind::kInvalidArgument);
  }

  TEST_CASE("unseen category stops at the parent") {
    const auto data = Matrix({View(kImg, Labels({"a"})), View(kNum, Labels({"b"}))});
    const auto tree = FitTree(data, {});
    const auto p = PredictTree(tree, Encode({DataNature::kSemiStructured, DataType::kVideo},
                                            Vocabulary::Full()));
    CHECK(p.preprocessing_tools() == LabelSet{"a", "b"});
  }

  TEST_CASE("width mismatch is an error") {
    const auto tree = FitTree(Matrix({View(kImg, Labels({"a"}))}), {});
    CHECK(CatchError([&] { PredictTree(tree, FeatureVector({1, 0, 1})); }));
  }

  TEST_CASE("forest votes need a strict majority") {
    const RandomForestModel three(
        Vocabulary::Full(), {.n_trees = 3},
        {LeafTree({Labels({"a", "b"})}), LeafTree({Labels({"a"})}), LeafTree({Labels({"a", "c"})})});
    const FeatureVector v = Encode(kImg, Vocabulary::Full());
    CHECK(PredictForest(three, v).preprocessing_tools() == LabelSet{"a"});
    const RandomForestModel two(Vocabulary::Full(), {.n_trees = 2},
                                {LeafTree({Labels({"b"})}), LeafTree({Labels({"a"})})});
    CHECK(PredictForest(two, v).preprocessing_tools() == LabelSet{"a"});
    const RandomForestModel same(Vocabulary::Full(), {.n_trees = 2},
                                 {LeafTree({Labels({"a", "b"})}), LeafTree({Labels({"a", "b"})})});
    CHECK(PredictForest(same, v) == PredictTree(LeafTree({Labels({"a", "b"})}), v));
  }

  TEST_CASE("one unbootstrapped tree behaves as a plain tree") {
    std::mt19937_64 gen(12);
    const auto views = oracle::RandomViews(gen, 40);
    const auto data = Matrix(views);
    const auto forest = FitForest(data, {.n_trees = 1, .seed = 4, .bootstrap = false});
    REQUIRE(forest.trees().size() == 1);
    const auto tree = FitTree(data, {});
    for (const auto& v : data.vectors) {
      // A one-tree vote keeps labels of count 1 > 1/2, as the tree did.
      CHECK(PredictForest(forest, v).model_tools() == PredictTree(tree, v).model_tools());
      CHECK(forest.trees()[0].nodes() == tree.nodes());
    }
  }

  TEST_CASE("forest is deterministic and thread-count independent") {
    std::mt19937_64 gen(13);
    const auto data = Matrix(oracle::RandomViews(gen, 50));
    const auto a = FitForest(data, {.n_trees = 25, .seed = 3}, 1);
    const auto b = FitForest(data, {.n_trees = 25, .seed = 3}, 4);
    CHECK(a == b);
    CHECK(a.trees().size() == 25);
    for (DataNature n : kAllNatures) {
      for (DataType t : kAllTypes) {
        const auto v = Encode({n, t}, Vocabulary::Full());
        CHECK(PredictForest(a, v) == PredictForest(b, v));
      }
    }
    CHECK(CatchError([&] { FitForest(data, {.n_trees = 0}); }));
  }

  TEST_CASE("repeated record forest predicts it for any seed") {
    const OutputLabels o = Labels({"pandas"}, {"scikit-learn", "xgboost"}, "regression");
    const auto data = Matrix(std::vector<FeatureView>(6, View(kNum, o)));
    for (std::uint64_t seed : {0u, 1u, 99u}) {
      CHECK(PredictForest(FitForest(data, {.n_trees = 10, .seed = seed}), data.vectors[0]) == o);
    }
  }

  TEST_CASE("KNN nearest duplicate, distances and votes") {
    const Vocabulary vocab = Vocabulary::Full();
    const OutputLabels o = Labels({"pandas"}, {"xgboost"});
    const auto data = Matrix({View(kNum, o), View(kImg, Labels({"opencv"}))});
    const KnnModel one = FitKnn(data, 1);
    CHECK(PredictKnn(one, Encode(kNum, vocab)) == o);
    CHECK(HammingDistance(Encode(kNum, vocab),
                          Encode({DataNature::kStructured, DataType::kVideo}, vocab)) == 2);

    const auto votes = Matrix({View(kImg, Labels({"x"}, {"t"})), View(kImg, Labels({"x"}, {"t"})),
                               View(kImg, Labels({"x"}, {"p"}))});
    const KnnModel three = FitKnn(votes, 3);
    CHECK(PredictKnn(three, Encode(kImg, vocab)).model_tools() == LabelSet{"t"});
  }

  TEST_CASE("KNN clamps k and breaks distance ties by store order") {
    const auto data = Matrix({View(kImg, Labels({"a"})), View(kNum, Labels({"b"}))});
    const KnnModel model = FitKnn(data, 5);
    CHECK(model.k() == 2);
    CHECK(model.k_clamped());
    const auto detailed = PredictKnnDetailed(model, Encode(kImg, Vocabulary::Full()));
    CHECK(detailed.k_clamped);
    CHECK(detailed.neighbors == std::vector<std::size_t>{0, 1});
    const auto tie = PredictKnnDetailed(
        FitKnn(data, 1), Encode({DataNature::kUnstructured, DataType::kNumerical}, Vocabulary::Full()));
    CHECK(tie.neighbors == std::vector<std::size_t>{0});
    CHECK(CatchError([&] { FitKnn(data, 0); }));
  }

  TEST_CASE("model files round-trip byte for byte") {
    std::mt19937_64 gen(31);
    const auto data = Matrix(oracle::RandomViews(gen, 40));
    std::vector<TrainedModel> models = {
        {FitTree(data, {.max_depth = 3}), 1, {{"train_f_measure", 0.5}}},
        {FitForest(data, {.n_trees = 7, .seed = 2}), 2, {}},
        {FitKnn(data, 3), 3, {}}};
    for (const auto& m : models) {
      const std::string text = SerializeModel(m);
      const TrainedModel back = LoadModel(text);
      CHECK(back == m);
      CHECK(SerializeModel(back) == text);
      for (const auto& v : data.vectors) CHECK(back.Predict(v) == m.Predict(v));
    }
  }

  TEST_CASE("corrupt model files are rejected") {
    CHECK(CatchError([] { LoadModel("{}"); })->kind == ErrorKind::kValidation);
    CHECK(CatchError([] { LoadModel("{"); })->kind == ErrorKind::kParse);
    CHECK(ParseApproach("random-forest") == Approach::kRandomForest);
    CHECK(CatchError([] { ParseApproach("svm"); }));
  }
}
