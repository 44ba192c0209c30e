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

#include "mlopsrec/rules.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json_util.hpp"
#include "mlopsrec/tally.hpp"

namespace mlopsrec {
namespace {

using json_util::json;

template <typename Enum, typename Parse>
std::optional<Enum> ConditionPart(const json& value, const std::string& where,
                                  Parse parse) {
  const std::string text = NormalizeLabel(json_util::String(value, where));
  if (text == "*") return std::nullopt;
  try {
    return parse(text);
  } catch (const Error& e) {
    throw Error(ErrorKind::kValidation, where + ": " + e.what());
  }
}

json ConditionJson(const RuleCondition& c) {
  json out;
  out["nature"] = c.nature ? std::string(ToString(*c.nature)) : "*";
  out["type"] = c.type ? std::string(ToString(*c.type)) : "*";
  return out;
}

}  // namespace

void ValidateRuleSet(const RuleSet& rules) {
  std::set<std::string> ids;
  for (std::size_t i = 0; i < rules.rules.size(); ++i) {
    const Rule& rule = rules.rules[i];
    const std::string where = "rules[" + std::to_string(i) + "]";
    if (rule.id.empty()) {
      throw Error(ErrorKind::kValidation, where + ".id: must not be empty");
    }
    if (!ids.insert(rule.id).second) {
      throw Error(ErrorKind::kDuplicateId,
                  where + ".id: duplicate rule id '" + rule.id + "'");
    }
    if (rule.condition.Specificity() == 0) {
      throw Error(ErrorKind::kValidation,
                  where + ".condition: nature and type cannot both be '*'");
    }
    for (OutputField f : kAllOutputFields) {
      if (rule.outputs[f].empty()) {
        throw Error(ErrorKind::kValidation, where + ".outputs." +
                                                std::string(ToString(f)) +
                                                ": must not be empty");
      }
    }
  }
}

RuleSet LoadRules(std::string_view json_text) {
  const json doc = json_util::ParseDocument(json_text, "rule file");
  RuleSet set;
  const json& version = json_util::Member(doc, "version", "rule file");
  if (!version.is_number_integer() || version.get<int>() != kRuleFormatVersion) {
    throw Error(ErrorKind::kValidation,
                "rule file.version: unsupported version " + version.dump());
  }
  set.version = version.get<int>();
  if (doc.contains("provenance")) {
    set.provenance = json_util::String(doc["provenance"], "provenance");
  }
  const json& rules = json_util::Member(doc, "rules", "rule file");
  if (!rules.is_array()) {
    throw Error(ErrorKind::kValidation, "rules: expected an array");
  }
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const std::string where = "rules[" + std::to_string(i) + "]";
    const json& r = rules[i];
    Rule rule;
    rule.id = json_util::String(json_util::Member(r, "id", where), where + ".id");
    const json& cond = json_util::Member(r, "condition", where);
    rule.condition.nature = ConditionPart<DataNature>(
        json_util::Member(cond, "nature", where + ".condition"),
        where + ".condition.nature", ParseDataNature);
    rule.condition.type = ConditionPart<DataType>(
        json_util::Member(cond, "type", where + ".condition"),
        where + ".condition.type", ParseDataType);
    rule.outputs = json_util::OutputsFromJson(
        json_util::Member(r, "outputs", where), where + ".outputs", false);
    set.rules.push_back(std::move(rule));
  }
  ValidateRuleSet(set);
  return set;
}

RuleSet LoadRulesFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open rule file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return LoadRules(buffer.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::string SerializeRules(const RuleSet& rules) {
  json doc;
  doc["version"] = rules.version;
  doc["provenance"] = rules.provenance;
  json list = json::array();
  for (const Rule& rule : rules.rules) {
    json r;
    r["id"] = rule.id;
    r["condition"] = ConditionJson(rule.condition);
    r["outputs"] = json_util::ToJson(rule.outputs);
    list.push_back(std::move(r));
  }
  doc["rules"] = std::move(list);
  return json_util::Dump(doc);
}

ExtractionStrategy ParseExtractionStrategy(std::string_view text) {
  const std::string key = NormalizeLabel(text);
  if (key == "union") return ExtractionStrategy::kUnion;
  if (key == "majority") return ExtractionStrategy::kMajority;
  throw Error(ErrorKind::kInvalidArgument,
              "unknown strategy '" + key + "', allowed: union|majority");
}

std::string_view ToString(ExtractionStrategy s) {
  return s == ExtractionStrategy::kUnion ? "union" : "majority";
}

RuleSet ExtractRules(const std::vector<FeatureView>& views,
                     ExtractionStrategy strategy) {
  if (views.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "cannot extract rules from zero records");
  }
  std::map<Context, LabelTally> groups;
  for (const auto& v : views) groups[v.inputs].Add(v.outputs);

  RuleSet set;
  set.provenance = "extracted from " + std::to_string(views.size()) +
                   " records with the " + std::string(ToString(strategy)) +
                   " strategy";
  for (const auto& [context, tally] : groups) {
    Rule rule;
    rule.id = std::string(ToString(context.nature)) + "." +
              std::string(ToString(context.type));
    rule.condition = {context.nature, context.type};
    if (strategy == ExtractionStrategy::kUnion) {
      for (OutputField f : kAllOutputFields) {
        for (const auto& [label, _] : tally[f]) rule.outputs[f].insert(label);
      }
    } else {
      rule.outputs = ReadOut(tally, Threshold::kMoreThanHalf);
    }
    set.rules.push_back(std::move(rule));
  }
  return set;
}

const Rule& MatchRule(const Context& inputs, const RuleSet& rules) {
  const Rule* best = nullptr;
  for (const Rule& rule : rules.rules) {
    if (!rule.condition.Matches(inputs)) continue;
    if (best == nullptr ||
        rule.condition.Specificity() > best->condition.Specificity()) {
      best = &rule;
    }
  }
  if (best == nullptr) {
    throw Error(ErrorKind::kNoMatch,
                "no applicable rule for " + ToString(inputs));
  }
  return *best;
}

OutputLabels PredictRuleBased(const Context& inputs, const RuleSet& rules) {
  return MatchRule(inputs, rules).outputs;
}

}  // namespace mlopsrec
