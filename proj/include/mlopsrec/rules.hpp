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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlopsrec/common.hpp"
#include "mlopsrec/dataset.hpp"

namespace mlopsrec {

// Condition over the two inputs; an empty optional is the '*' wildcard.
struct RuleCondition {
  std::optional<DataNature> nature;
  std::optional<DataType> type;

  bool Matches(const Context& c) const {
    return (!nature || *nature == c.nature) && (!type || *type == c.type);
  }
  // Number of non-wildcard components: 2 beats 1.
  int Specificity() const { return int{nature.has_value()} + int{type.has_value()}; }

  friend bool operator==(const RuleCondition&, const RuleCondition&) = default;
};

struct Rule {
  std::string id;
  RuleCondition condition;
  OutputLabels outputs;

  friend bool operator==(const Rule&, const Rule&) = default;
};

inline constexpr int kRuleFormatVersion = 1;

struct RuleSet {
  int version = kRuleFormatVersion;
  std::string provenance;
  std::vector<Rule> rules;

  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

// Checks id uniqueness (kDuplicateId), a non-wildcard condition component
// and four non-empty outputs (kValidation).
void ValidateRuleSet(const RuleSet& rules);

// Rule file:
//   {"version": 1, "provenance": "...",
//    "rules": [{"id": "...", "condition": {"nature": "...", "type": "..."},
//               "outputs": {"preprocessing_tools": [...], "model_tools": [...],
//                           "project_type": "..." or [...],
//                           "evaluation_metrics": [...]}}]}
// "*" is the wildcard. Syntax errors report line and column, schema errors
// the path of the offending field.
RuleSet LoadRules(std::string_view json_text);
RuleSet LoadRulesFile(const std::string& path);
std::string SerializeRules(const RuleSet& rules);

enum class ExtractionStrategy {
  // Every label seen in the group, project types included.
  kUnion,
  // Labels named by more than half of the group (most frequent label when
  // none is); project_type is the modal value.
  kMajority,
};

ExtractionStrategy ParseExtractionStrategy(std::string_view text);
std::string_view ToString(ExtractionStrategy s);

// One exact-condition rule per distinct input pair, in (nature, type) enum
// order. Rule ids are "<nature>.<type>".
RuleSet ExtractRules(const std::vector<FeatureView>& views,
                     ExtractionStrategy strategy);

// The most specific rule whose condition covers inputs; the earliest in
// file order among equals. Throws kNoMatch.
const Rule& MatchRule(const Context& inputs, const RuleSet& rules);

OutputLabels PredictRuleBased(const Context& inputs, const RuleSet& rules);

}  // namespace mlopsrec
