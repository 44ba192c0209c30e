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
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mlopsrec {

enum class ErrorKind {
  kParse,            // malformed input text (CSV, JSON)
  kValidation,       // well-formed input that violates a schema invariant
  kUnknownCategory,  // a categorical value outside the known domain
  kNoMatch,          // no rule covers the query
  kDuplicateId,      // duplicate rule id or catalogue tool name
  kInvalidArgument,  // caller-supplied parameter out of range
  kIo,
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

enum class ProjectCategory { kAi, kNonAi };

enum class DataNature { kStructured, kUnstructured, kSemiStructured };
inline constexpr std::array<DataNature, 3> kAllNatures = {
    DataNature::kStructured, DataNature::kUnstructured,
    DataNature::kSemiStructured};

enum class DataType { kNumerical, kTextual, kImage, kVideo };
inline constexpr std::array<DataType, 4> kAllTypes = {
    DataType::kNumerical, DataType::kTextual, DataType::kImage,
    DataType::kVideo};

std::string_view ToString(ProjectCategory c);
std::string_view ToString(DataNature n);
std::string_view ToString(DataType t);

// Parsers accept the canonical spelling plus '-' or ' ' in place of '_',
// in any letter case, surrounded by whitespace. Unknown values raise
// kUnknownCategory with the allowed list in the message.
ProjectCategory ParseProjectCategory(std::string_view text);
DataNature ParseDataNature(std::string_view text);
DataType ParseDataType(std::string_view text);

// "numerical|textual|image|video"
std::string AllowedNatures();
std::string AllowedTypes();

// The two input features of a project.
struct Context {
  DataNature nature = DataNature::kStructured;
  DataType type = DataType::kNumerical;

  friend auto operator<=>(const Context&, const Context&) = default;
};

std::string ToString(const Context& context);

using LabelSet = std::set<std::string>;

enum class OutputField {
  kPreprocessingTools = 0,
  kModelTools = 1,
  kProjectType = 2,
  kEvaluationMetrics = 3,
};
inline constexpr std::size_t kNumOutputFields = 4;
inline constexpr std::array<OutputField, kNumOutputFields> kAllOutputFields = {
    OutputField::kPreprocessingTools, OutputField::kModelTools,
    OutputField::kProjectType, OutputField::kEvaluationMetrics};

std::string_view ToString(OutputField field);
OutputField ParseOutputField(std::string_view text);

// The four predicted outputs. project_type is a set as well: training
// records carry a single project type, classifiers emit a singleton, and
// union-extracted rules may carry several.
struct OutputLabels {
  std::array<LabelSet, kNumOutputFields> fields;

  LabelSet& operator[](OutputField f) {
    return fields[static_cast<std::size_t>(f)];
  }
  const LabelSet& operator[](OutputField f) const {
    return fields[static_cast<std::size_t>(f)];
  }

  LabelSet& preprocessing_tools() { return (*this)[OutputField::kPreprocessingTools]; }
  LabelSet& model_tools() { return (*this)[OutputField::kModelTools]; }
  LabelSet& project_type() { return (*this)[OutputField::kProjectType]; }
  LabelSet& evaluation_metrics() { return (*this)[OutputField::kEvaluationMetrics]; }
  const LabelSet& preprocessing_tools() const { return (*this)[OutputField::kPreprocessingTools]; }
  const LabelSet& model_tools() const { return (*this)[OutputField::kModelTools]; }
  const LabelSet& project_type() const { return (*this)[OutputField::kProjectType]; }
  const LabelSet& evaluation_metrics() const { return (*this)[OutputField::kEvaluationMetrics]; }

  // preprocessing_tools ∪ model_tools, the tools the catalogue matches on.
  LabelSet DevelopmentTools() const;

  friend bool operator==(const OutputLabels&, const OutputLabels&) = default;
};

// Trim ASCII whitespace and fold to lower case.
std::string NormalizeLabel(std::string_view text);

// Split a multi-valued cell on ',' and ';', normalizing every piece and
// dropping empty ones.
LabelSet SplitLabels(std::string_view cell);

// Join with "; ", the canonical multi-valued cell spelling.
std::string JoinLabels(const LabelSet& labels);

}  // namespace mlopsrec
