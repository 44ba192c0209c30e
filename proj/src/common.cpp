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

#include "mlopsrec/common.hpp"

#include <algorithm>
#include <cctype>

namespace mlopsrec {
namespace {

std::string_view Trim(std::string_view s) {
  const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && is_space(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Normalized enum spelling: trimmed, lower case, '-' and ' ' as '_'.
std::string EnumKey(std::string_view text) {
  std::string key = NormalizeLabel(text);
  std::replace_if(
      key.begin(), key.end(), [](char c) { return c == '-' || c == ' '; },
      '_');
  return key;
}

template <typename Enum, std::size_t N>
Enum ParseEnum(std::string_view text, std::string_view field,
               const std::array<Enum, N>& domain) {
  const std::string key = EnumKey(text);
  for (Enum value : domain) {
    if (ToString(value) == key) return value;
  }
  std::string allowed;
  for (Enum value : domain) {
    if (!allowed.empty()) allowed += '|';
    allowed += ToString(value);
  }
  throw Error(ErrorKind::kUnknownCategory,
              "unknown " + std::string(field) + " '" + std::string(Trim(text)) +
                  "', allowed: " + allowed);
}

constexpr std::array<ProjectCategory, 2> kAllCategories = {
    ProjectCategory::kAi, ProjectCategory::kNonAi};

}  // namespace

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kUnknownCategory: return "unknown_category";
    case ErrorKind::kNoMatch: return "no_match";
    case ErrorKind::kDuplicateId: return "duplicate_id";
    case ErrorKind::kInvalidArgument: return "invalid_argument";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

std::string_view ToString(ProjectCategory c) {
  return c == ProjectCategory::kAi ? "ai" : "non_ai";
}

std::string_view ToString(DataNature n) {
  switch (n) {
    case DataNature::kStructured: return "structured";
    case DataNature::kUnstructured: return "unstructured";
    case DataNature::kSemiStructured: return "semi_structured";
  }
  return "";
}

std::string_view ToString(DataType t) {
  switch (t) {
    case DataType::kNumerical: return "numerical";
    case DataType::kTextual: return "textual";
    case DataType::kImage: return "image";
    case DataType::kVideo: return "video";
  }
  return "";
}

ProjectCategory ParseProjectCategory(std::string_view text) {
  return ParseEnum(text, "project_category", kAllCategories);
}

DataNature ParseDataNature(std::string_view text) {
  return ParseEnum(text, "data_nature", kAllNatures);
}

DataType ParseDataType(std::string_view text) {
  return ParseEnum(text, "data_type", kAllTypes);
}

std::string AllowedNatures() {
  std::string out;
  for (DataNature n : kAllNatures) {
    if (!out.empty()) out += '|';
    out += ToString(n);
  }
  return out;
}

std::string AllowedTypes() {
  std::string out;
  for (DataType t : kAllTypes) {
    if (!out.empty()) out += '|';
    out += ToString(t);
  }
  return out;
}

std::string ToString(const Context& context) {
  return std::string(ToString(context.nature)) + "/" +
         std::string(ToString(context.type));
}

std::string_view ToString(OutputField field) {
  switch (field) {
    case OutputField::kPreprocessingTools: return "preprocessing_tools";
    case OutputField::kModelTools: return "model_tools";
    case OutputField::kProjectType: return "project_type";
    case OutputField::kEvaluationMetrics: return "evaluation_metrics";
  }
  return "";
}

OutputField ParseOutputField(std::string_view text) {
  return ParseEnum(text, "output field", kAllOutputFields);
}

LabelSet OutputLabels::DevelopmentTools() const {
  LabelSet tools = preprocessing_tools();
  tools.insert(model_tools().begin(), model_tools().end());
  return tools;
}

std::string NormalizeLabel(std::string_view text) {
  std::string out(Trim(text));
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

LabelSet SplitLabels(std::string_view cell) {
  LabelSet labels;
  std::size_t start = 0;
  while (start <= cell.size()) {
    std::size_t end = cell.find_first_of(",;", start);
    if (end == std::string_view::npos) end = cell.size();
    std::string piece = NormalizeLabel(cell.substr(start, end - start));
    if (!piece.empty()) labels.insert(std::move(piece));
    start = end + 1;
  }
  return labels;
}

std::string JoinLabels(const LabelSet& labels) {
  std::string out;
  for (const auto& label : labels) {
    if (!out.empty()) out += "; ";
    out += label;
  }
  return out;
}

}  // namespace mlopsrec
