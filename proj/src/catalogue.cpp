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

#include "mlopsrec/catalogue.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json_util.hpp"

namespace mlopsrec {
namespace {

using json_util::json;

bool IsBlank(std::string_view text) {
  return std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

json LabelsJson(const LabelSet& labels) { return json_util::ToJson(labels); }

json PhasesJson(const std::set<Phase>& phases) {
  json out = json::array();
  for (Phase p : phases) out.push_back(std::string(ToString(p)));
  return out;
}

json ToolJson(const ToolEntry& tool) {
  json out;
  out["name"] = tool.name;
  out["phases"] = PhasesJson(tool.phases);
  out["integrates_with"] = LabelsJson(tool.integrates_with);
  return out;
}

}  // namespace

std::string_view ToString(Phase p) {
  switch (p) {
    case Phase::kDataVersioning: return "data_versioning";
    case Phase::kPipelineOrchestration: return "pipeline_orchestration";
    case Phase::kExperimentTracking: return "experiment_tracking";
    case Phase::kModelRegistry: return "model_registry";
    case Phase::kDeployment: return "deployment";
    case Phase::kMonitoring: return "monitoring";
  }
  return "";
}

Phase ParsePhase(std::string_view text) {
  std::string key = NormalizeLabel(text);
  std::replace(key.begin(), key.end(), '-', '_');
  std::replace(key.begin(), key.end(), ' ', '_');
  for (Phase p : kAllPhases) {
    if (ToString(p) == key) return p;
  }
  std::string allowed;
  for (Phase p : kAllPhases) {
    if (!allowed.empty()) allowed += '|';
    allowed += ToString(p);
  }
  throw Error(ErrorKind::kValidation,
              "unknown phase '" + key + "', allowed: " + allowed);
}

ToolCatalogue LoadCatalogue(std::string_view json_text) {
  ToolCatalogue catalogue;
  if (IsBlank(json_text)) {
    catalogue.warnings.push_back("catalogue is empty");
    return catalogue;
  }
  const json doc = json_util::ParseDocument(json_text, "catalogue");
  const json& version = json_util::Member(doc, "version", "catalogue");
  if (!version.is_number_integer() ||
      version.get<int>() != kCatalogueFormatVersion) {
    throw Error(ErrorKind::kValidation,
                "catalogue.version: unsupported version " + version.dump());
  }
  const json& tools = json_util::Member(doc, "tools", "catalogue");
  if (!tools.is_array()) {
    throw Error(ErrorKind::kValidation, "tools: expected an array");
  }
  std::set<std::string> names;
  for (std::size_t i = 0; i < tools.size(); ++i) {
    const std::string where = "tools[" + std::to_string(i) + "]";
    const json& t = tools[i];
    ToolEntry entry;
    entry.name = NormalizeLabel(
        json_util::String(json_util::Member(t, "name", where), where + ".name"));
    if (entry.name.empty()) {
      throw Error(ErrorKind::kValidation, where + ".name: must not be empty");
    }
    if (!names.insert(entry.name).second) {
      throw Error(ErrorKind::kDuplicateId,
                  where + ".name: duplicate tool name '" + entry.name + "'");
    }
    const json& phases = json_util::Member(t, "phases", where);
    if (!phases.is_array()) {
      throw Error(ErrorKind::kValidation, where + ".phases: expected an array");
    }
    for (std::size_t p = 0; p < phases.size(); ++p) {
      const std::string path = where + ".phases[" + std::to_string(p) + "]";
      try {
        entry.phases.insert(ParsePhase(json_util::String(phases[p], path)));
      } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what());
      }
    }
    if (entry.phases.empty()) {
      throw Error(ErrorKind::kValidation, where + ".phases: must not be empty");
    }
    entry.integrates_with = json_util::Labels(
        json_util::Member(t, "integrates_with", where), where + ".integrates_with");
    catalogue.tools.push_back(std::move(entry));
  }
  if (catalogue.tools.empty()) catalogue.warnings.push_back("catalogue is empty");
  return catalogue;
}

ToolCatalogue LoadCatalogueFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open catalogue '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return LoadCatalogue(buffer.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::string SerializeCatalogue(const ToolCatalogue& catalogue) {
  json doc;
  doc["version"] = catalogue.version;
  json tools = json::array();
  for (const auto& tool : catalogue.tools) tools.push_back(ToolJson(tool));
  doc["tools"] = std::move(tools);
  return json_util::Dump(doc);
}

std::vector<ToolMatch> MatchMlopsTools(const OutputLabels& predicted,
                                       const ToolCatalogue& catalogue) {
  const LabelSet tools = predicted.DevelopmentTools();
  std::vector<ToolMatch> matches;
  for (const ToolEntry& entry : catalogue.tools) {
    LabelSet via;
    std::set_intersection(entry.integrates_with.begin(),
                          entry.integrates_with.end(), tools.begin(),
                          tools.end(), std::inserter(via, via.end()));
    if (!via.empty()) matches.push_back({entry, std::move(via)});
  }
  std::stable_sort(matches.begin(), matches.end(),
                   [](const ToolMatch& a, const ToolMatch& b) {
                     if (a.matched_via.size() != b.matched_via.size()) {
                       return a.matched_via.size() > b.matched_via.size();
                     }
                     return a.tool.name < b.tool.name;
                   });
  return matches;
}

LabelSet UncoveredTools(const OutputLabels& predicted,
                        const std::vector<ToolMatch>& matches) {
  LabelSet uncovered = predicted.DevelopmentTools();
  for (const auto& m : matches) {
    for (const auto& tool : m.matched_via) uncovered.erase(tool);
  }
  return uncovered;
}

Recommendation Recommend(const Context& inputs, const Predictor& predictor,
                         const ToolCatalogue& catalogue) {
  Recommendation rec;
  rec.inputs = inputs;
  rec.approach = ApproachOf(predictor);
  rec.predicted = Predict(predictor, inputs);
  rec.mlops_tools = MatchMlopsTools(rec.predicted, catalogue);
  rec.uncovered = UncoveredTools(rec.predicted, rec.mlops_tools);
  if (catalogue.tools.empty()) {
    rec.warnings.push_back(
        "catalogue is empty; no MLOps tools can be recommended");
  } else if (rec.mlops_tools.empty()) {
    rec.warnings.push_back(
        "no catalogue entry integrates with the predicted tools");
  }
  return rec;
}

Recommendation Recommend(std::string_view nature, std::string_view type,
                         const Predictor& predictor,
                         const ToolCatalogue& catalogue) {
  const Context inputs{ParseDataNature(nature), ParseDataType(type)};
  return Recommend(inputs, predictor, catalogue);
}

std::string RenderRecommendation(const Recommendation& rec) {
  std::ostringstream out;
  out << "inputs: data_nature=" << ToString(rec.inputs.nature)
      << " data_type=" << ToString(rec.inputs.type) << '\n';
  out << "approach: " << ToString(rec.approach) << '\n';
  out << "predicted:\n";
  for (OutputField f : kAllOutputFields) {
    out << "  " << ToString(f) << ": " << JoinLabels(rec.predicted[f]) << '\n';
  }
  out << "mlops tools:\n";
  if (rec.mlops_tools.empty()) out << "  (none)\n";
  for (const auto& m : rec.mlops_tools) {
    out << "  " << m.tool.name << "  phases: ";
    bool first = true;
    for (Phase p : m.tool.phases) {
      out << (first ? "" : ", ") << ToString(p);
      first = false;
    }
    out << "  via: " << JoinLabels(m.matched_via) << '\n';
  }
  if (!rec.uncovered.empty()) {
    out << "uncovered tools: " << JoinLabels(rec.uncovered) << '\n';
  }
  for (const auto& w : rec.warnings) out << "warning: " << w << '\n';
  return out.str();
}

std::string RecommendationJson(const Recommendation& rec) {
  json doc;
  doc["inputs"] = {{"data_nature", std::string(ToString(rec.inputs.nature))},
                   {"data_type", std::string(ToString(rec.inputs.type))}};
  doc["approach"] = std::string(ToString(rec.approach));
  doc["predicted"] = json_util::ToJson(rec.predicted);
  json tools = json::array();
  for (const auto& m : rec.mlops_tools) {
    json t = ToolJson(m.tool);
    t["matched_via"] = LabelsJson(m.matched_via);
    tools.push_back(std::move(t));
  }
  doc["mlops_tools"] = std::move(tools);
  doc["uncovered"] = LabelsJson(rec.uncovered);
  doc["warnings"] = rec.warnings;
  return json_util::Dump(doc);
}

}  // namespace mlopsrec
