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

#include "mlopsrec/predictor.hpp"

namespace mlopsrec {

Approach ApproachOf(const Predictor& predictor) {
  if (const auto* model = std::get_if<TrainedModel>(&predictor)) {
    return model->approach();
  }
  return Approach::kRuleBased;
}

OutputLabels Predict(const Predictor& predictor, const Context& inputs) {
  if (const auto* model = std::get_if<TrainedModel>(&predictor)) {
    return model->Predict(inputs);
  }
  return PredictRuleBased(inputs, std::get<RuleSet>(predictor));
}

}  // namespace mlopsrec
