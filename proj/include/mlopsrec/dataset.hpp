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

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mlopsrec/common.hpp"

namespace mlopsrec {

// One machine-learning project as answered on the ten-question collection
// form. Only the two inputs and four outputs feed the pipeline; the rest are
// carried for provenance.
struct ProjectRecord {
  std::string name;
  std::string description;
  ProjectCategory project_category = ProjectCategory::kAi;
  DataNature data_nature = DataNature::kStructured;
  DataType data_type = DataType::kNumerical;
  LabelSet preprocessing_tools;
  std::string project_type;
  std::string technique;
  LabelSet evaluation_metrics;
  LabelSet model_tools;

  friend bool operator==(const ProjectRecord&, const ProjectRecord&) = default;
};

// Column order of the CSV header and key set of JSON objects.
inline constexpr std::array<std::string_view, 10> kRecordFields = {
    "name",          "description",        "project_category",
    "data_nature",   "data_type",          "preprocessing_tools",
    "project_type",  "technique",          "evaluation_metrics",
    "model_tools"};

struct FeatureView {
  Context inputs;
  OutputLabels outputs;

  friend bool operator==(const FeatureView&, const FeatureView&) = default;
};

enum class RecordFormat { kCsv, kJson };

RecordFormat ParseRecordFormat(std::string_view text);

// Parses records, applying normalization. Errors name the 1-based data row
// (or array element) and the offending field.
std::vector<ProjectRecord> ParseRecords(std::istream& in, RecordFormat format);
std::vector<ProjectRecord> ParseRecords(std::string_view text,
                                        RecordFormat format);
std::vector<ProjectRecord> LoadRecords(const std::string& path);

std::string SerializeRecords(const std::vector<ProjectRecord>& records,
                             RecordFormat format);

// Format from the file extension: ".json" is JSON, anything else CSV.
RecordFormat FormatForPath(std::string_view path);

std::vector<ProjectRecord> FilterAi(const std::vector<ProjectRecord>& records);

FeatureView ProjectFeatures(const ProjectRecord& record);
std::vector<FeatureView> ProjectFeatures(
    const std::vector<ProjectRecord>& records);

// Generator specification: how often each (nature, type) context occurs and,
// per context, the label distributions.
//
// Set-valued fields list per-label inclusion probabilities; each label is
// drawn independently, and if none is drawn a single label is chosen with
// probability proportional to those same values. project_type and technique
// are categorical weights.
struct SynthContextSpec {
  Context context;
  double weight = 1.0;
  std::map<std::string, double> preprocessing_tools;
  std::map<std::string, double> model_tools;
  std::map<std::string, double> evaluation_metrics;
  std::map<std::string, double> project_type;
  std::map<std::string, double> technique;
};

struct SynthSpec {
  std::vector<SynthContextSpec> contexts;
};

// Throws kValidation describing the first problem found.
void ValidateSynthSpec(const SynthSpec& spec);

SynthSpec ParseSynthSpec(std::string_view json_text);
std::string SerializeSynthSpec(const SynthSpec& spec);

// The noisy multi-tool generator shipped as data/synth_spec.json: all twelve
// contexts, two or three frequent tools per field plus several rare ones.
SynthSpec DefaultSynthSpec();

// n AI records drawn from spec; identical output for identical arguments.
std::vector<ProjectRecord> SynthDataset(const SynthSpec& spec, std::size_t n,
                                        std::uint64_t seed);

}  // namespace mlopsrec
