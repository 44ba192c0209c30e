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

#include "json_util.hpp"

namespace mlopsrec::json_util {

json ParseDocument(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is the 1-based offset of the failing character.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::kParse, std::string(what) + ": syntax error at line " +
                                       std::to_string(line) + ", column " +
                                       std::to_string(column));
  }
}

const json& Member(const json& obj, std::string_view key,
                   const std::string& where) {
  if (!obj.is_object()) {
    throw Error(ErrorKind::kValidation, where + ": expected an object");
  }
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(ErrorKind::kValidation,
                where + ": missing '" + std::string(key) + "'");
  }
  return *it;
}

std::string String(const json& value, const std::string& where) {
  if (!value.is_string()) {
    throw Error(ErrorKind::kValidation, where + ": expected a string");
  }
  return value.get<std::string>();
}

LabelSet Labels(const json& value, const std::string& where) {
  if (value.is_string()) return SplitLabels(value.get<std::string>());
  if (!value.is_array()) {
    throw Error(ErrorKind::kValidation,
                where + ": expected an array of strings");
  }
  LabelSet labels;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string label = NormalizeLabel(
        String(value[i], where + "[" + std::to_string(i) + "]"));
    if (!label.empty()) labels.insert(label);
  }
  return labels;
}

json ToJson(const LabelSet& labels) {
  json out = json::array();
  for (const auto& label : labels) out.push_back(label);
  return out;
}

json ToJson(const OutputLabels& labels) {
  json out = json::object();
  for (OutputField f : kAllOutputFields) {
    out[std::string(ToString(f))] = ToJson(labels[f]);
  }
  return out;
}

OutputLabels OutputsFromJson(const json& obj, const std::string& where,
                             bool require_non_empty) {
  OutputLabels out;
  for (OutputField f : kAllOutputFields) {
    const std::string key(ToString(f));
    const std::string path = where + "." + key;
    const json& value = Member(obj, key, where);
    if (f == OutputField::kProjectType && value.is_string()) {
      const std::string type = NormalizeLabel(value.get<std::string>());
      if (!type.empty()) out[f] = {type};
    } else {
      out[f] = Labels(value, path);
    }
    if (require_non_empty && out[f].empty()) {
      throw Error(ErrorKind::kValidation, path + ": must not be empty");
    }
  }
  return out;
}

std::string Dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace mlopsrec::json_util
