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

#include <array>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mlopsrec/common.hpp"
#include "mlopsrec/predictor.hpp"

namespace mlopsrec {

enum class Phase {
  kDataVersioning,
  kPipelineOrchestration,
  kExperimentTracking,
  kModelRegistry,
  kDeployment,
  kMonitoring,
};
inline constexpr std::array<Phase, 6> kAllPhases = {
    Phase::kDataVersioning,  Phase::kPipelineOrchestration,
    Phase::kExperimentTracking, Phase::kModelRegistry,
    Phase::kDeployment,      Phase::kMonitoring};

std::string_view ToString(Phase p);
Phase ParsePhase(std::string_view text);

struct ToolEntry {
  std::string name;
  std::set<Phase> phases;
  // Development tools (preprocessing or model construction) this MLOps tool
  // integrates with, normalized like labels.
  LabelSet integrates_with;

  friend bool operator==(const ToolEntry&, const ToolEntry&) = default;
};

inline constexpr int kCatalogueFormatVersion = 1;

struct ToolCatalogue {
  int version = kCatalogueFormatVersion;
  std::vector<ToolEntry> tools;
  std::vector<std::string> warnings;
};

// {"version": 1, "tools": [{"name": "...", "phases": [...],
//                           "integrates_with": [...]}]}
// Blank input loads as an empty catalogue with a warning. Duplicate names
// raise kDuplicateId; missing or empty phases raise kValidation.
ToolCatalogue LoadCatalogue(std::string_view json_text);
ToolCatalogue LoadCatalogueFile(const std::string& path);
std::string SerializeCatalogue(const ToolCatalogue& catalogue);

struct ToolMatch {
  ToolEntry tool;
  // integrates_with ∩ predicted development tools; never empty.
  LabelSet matched_via;

  friend bool operator==(const ToolMatch&, const ToolMatch&) = default;
};

// Entries integrating with at least one predicted preprocessing or model
// tool, by number of matched tools (descending) and then name.
std::vector<ToolMatch> MatchMlopsTools(const OutputLabels& predicted,
                                       const ToolCatalogue& catalogue);

// Predicted development tools no matched entry integrates with.
LabelSet UncoveredTools(const OutputLabels& predicted,
                        const std::vector<ToolMatch>& matches);

struct Recommendation {
  Context inputs;
  Approach approach = Approach::kRuleBased;
  OutputLabels predicted;
  std::vector<ToolMatch> mlops_tools;
  LabelSet uncovered;
  std::vector<std::string> warnings;

  friend bool operator==(const Recommendation&, const Recommendation&) = default;
};

Recommendation Recommend(const Context& inputs, const Predictor& predictor,
                         const ToolCatalogue& catalogue);

// Parses and validates the raw inputs before predicting anything.
Recommendation Recommend(std::string_view nature, std::string_view type,
                         const Predictor& predictor,
                         const ToolCatalogue& catalogue);

std::string RenderRecommendation(const Recommendation& rec);
std::string RecommendationJson(const Recommendation& rec);

}  // namespace mlopsrec
