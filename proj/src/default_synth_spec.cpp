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

#include "mlopsrec/dataset.hpp"

namespace mlopsrec {
namespace {

// Label pools per data type. Each field has two or three frequent labels
// (inclusion probability above one half) and a tail of rare ones, so a
// project usually names several tools and no two projects agree exactly.
struct TypeProfile {
  std::map<std::string, double> preprocessing_tools;
  std::map<std::string, double> model_tools;
  std::map<std::string, double> evaluation_metrics;
  std::map<std::string, double> project_type;
  std::map<std::string, double> technique;
};

TypeProfile ProfileFor(DataType type) {
  switch (type) {
    case DataType::kNumerical:
      return {{{"pandas", 0.9}, {"numpy", 0.7}, {"scikit-learn", 0.3},
               {"scipy", 0.12}, {"polars", 0.06}},
              {{"scikit-learn", 0.85}, {"xgboost", 0.55}, {"lightgbm", 0.15},
               {"statsmodels", 0.08}},
              {{"accuracy", 0.75}, {"rmse", 0.55}, {"f1-score", 0.2},
               {"mae", 0.1}},
              {{"regression", 0.55}, {"classification", 0.4},
               {"clustering", 0.05}},
              {{"random forest", 0.4}, {"linear regression", 0.3},
               {"gradient boosting", 0.3}}};
    case DataType::kTextual:
      return {{{"nltk", 0.85}, {"pandas", 0.6}, {"spacy", 0.3},
               {"regex", 0.1}, {"gensim", 0.06}},
              {{"tensorflow", 0.7}, {"pytorch", 0.55}, {"transformers", 0.2},
               {"scikit-learn", 0.1}},
              {{"accuracy", 0.85}, {"f1-score", 0.6}, {"bleu", 0.12},
               {"perplexity", 0.05}},
              {{"classification", 0.75}, {"text generation", 0.2},
               {"clustering", 0.05}},
              {{"lstm", 0.4}, {"transformer", 0.4}, {"naive bayes", 0.2}}};
    case DataType::kImage:
      return {{{"opencv", 0.85}, {"numpy", 0.65}, {"pillow", 0.25},
               {"albumentations", 0.1}, {"scikit-image", 0.06}},
              {{"tensorflow", 0.7}, {"keras", 0.6}, {"pytorch", 0.25},
               {"fastai", 0.05}},
              {{"accuracy", 0.85}, {"precision", 0.55}, {"iou", 0.15},
               {"map", 0.08}},
              {{"classification", 0.65}, {"object detection", 0.3},
               {"segmentation", 0.05}},
              {{"cnn", 0.7}, {"yolo", 0.2}, {"u-net", 0.1}}};
    case DataType::kVideo:
      return {{{"opencv", 0.9}, {"ffmpeg", 0.55}, {"numpy", 0.3},
               {"moviepy", 0.1}},
              {{"pytorch", 0.75}, {"tensorflow", 0.55}, {"mediapipe", 0.15},
               {"keras", 0.08}},
              {{"accuracy", 0.8}, {"map", 0.55}, {"f1-score", 0.15},
               {"mota", 0.06}},
              {{"object detection", 0.5}, {"classification", 0.4},
               {"tracking", 0.1}},
              {{"cnn", 0.4}, {"3d cnn", 0.3}, {"yolo", 0.3}}};
  }
  return {};
}

// How common each context is; structured numerical and unstructured
// image/text projects dominate student and repository projects.
double ContextWeight(Context c) {
  switch (c.type) {
    case DataType::kNumerical:
      return c.nature == DataNature::kStructured ? 6.0 : 1.5;
    case DataType::kTextual:
      return c.nature == DataNature::kUnstructured ? 4.0 : 1.5;
    case DataType::kImage:
      return c.nature == DataNature::kUnstructured ? 4.0 : 1.0;
    case DataType::kVideo:
      return c.nature == DataNature::kUnstructured ? 2.0 : 0.5;
  }
  return 1.0;
}

}  // namespace

SynthSpec DefaultSynthSpec() {
  SynthSpec spec;
  for (DataNature nature : kAllNatures) {
    for (DataType type : kAllTypes) {
      TypeProfile p = ProfileFor(type);
      // Data nature shifts which preprocessing tools show up.
      if (nature == DataNature::kSemiStructured) {
        p.preprocessing_tools["json"] = 0.55;
        p.preprocessing_tools["beautifulsoup"] = 0.15;
      } else if (nature == DataNature::kStructured) {
        p.preprocessing_tools["pandas"] = 0.9;
      }
      SynthContextSpec c;
      c.context = {nature, type};
      c.weight = ContextWeight(c.context);
      c.preprocessing_tools = std::move(p.preprocessing_tools);
      c.model_tools = std::move(p.model_tools);
      c.evaluation_metrics = std::move(p.evaluation_metrics);
      c.project_type = std::move(p.project_type);
      c.technique = std::move(p.technique);
      spec.contexts.push_back(std::move(c));
    }
  }
  return spec;
}

}  // namespace mlopsrec
