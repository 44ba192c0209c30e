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

#include <variant>

#include "mlopsrec/classifiers.hpp"
#include "mlopsrec/rules.hpp"

namespace mlopsrec {

// Any of the four approaches, ready to answer a query.
using Predictor = std::variant<RuleSet, TrainedModel>;

Approach ApproachOf(const Predictor& predictor);

// Throws kNoMatch (rules) or kUnknownCategory (models) when the inputs
// cannot be answered.
OutputLabels Predict(const Predictor& predictor, const Context& inputs);

}  // namespace mlopsrec
