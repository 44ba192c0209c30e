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

#include "mlopsrec/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "mlopsrec/rng.hpp"

namespace mlopsrec {
namespace {

using nlohmann::json;

struct CsvRow {
  std::vector<std::string> cells;
  std::size_t line = 0;  // 1-based line where the row starts
};

// RFC 4180 reader: quoted cells may hold separators, doubled quotes and
// newlines. Blank lines are skipped.
std::vector<CsvRow> ReadCsv(std::string_view text) {
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string cell;
  bool in_quotes = false;
  bool cell_was_quoted = false;
  std::size_t line = 1;
  row.line = 1;

  const auto end_cell = [&] {
    row.cells.push_back(std::move(cell));
    cell.clear();
    cell_was_quoted = false;
  };
  const auto end_row = [&] {
    end_cell();
    const bool blank = row.cells.size() == 1 && row.cells[0].empty();
    if (!blank) rows.push_back(std::move(row));
    row = CsvRow{};
    row.line = line;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        cell += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!cell.empty() || cell_was_quoted) {
          throw Error(ErrorKind::kParse,
                      "line " + std::to_string(line) +
                          ": stray quote inside unquoted cell");
        }
        in_quotes = true;
        cell_was_quoted = true;
        break;
      case ',':
        end_cell();
        break;
      case '\r':
        break;
      case '\n':
        ++line;
        end_row();
        break;
      default:
        cell += c;
    }
  }
  if (in_quotes) {
    throw Error(ErrorKind::kParse, "line " + std::to_string(row.line) +
                                       ": unterminated quoted cell");
  }
  if (!cell.empty() || !row.cells.empty() || cell_was_quoted) end_row();
  return rows;
}

std::string QuoteCsv(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Raw text of the ten fields of one row, in kRecordFields order.
using RawRecord = std::array<std::string, kRecordFields.size()>;

ProjectRecord BuildRecord(const RawRecord& raw, std::size_t row) {
  std::size_t field_index = 0;
  const auto fail = [&](ErrorKind kind, const std::string& what) -> Error {
    return Error(kind, "row " + std::to_string(row) + ", field " +
                           std::string(kRecordFields[field_index]) + ": " +
                           what);
  };
  const auto required = [&](std::size_t index) -> const std::string& {
    field_index = index;
    if (NormalizeLabel(raw[index]).empty()) {
      throw fail(ErrorKind::kValidation, "missing value");
    }
    return raw[index];
  };

  ProjectRecord record;
  try {
    record.name = NormalizeLabel(raw[0]);
    record.description = NormalizeLabel(raw[1]);
    record.project_category = ParseProjectCategory(required(2));
    record.data_nature = ParseDataNature(required(3));
    record.data_type = ParseDataType(required(4));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kUnknownCategory) throw;
    throw fail(e.kind(), e.what());
  }

  const bool ai = record.project_category == ProjectCategory::kAi;
  const auto labels = [&](std::size_t index) {
    field_index = index;
    LabelSet set = SplitLabels(raw[index]);
    if (ai && set.empty()) {
      throw fail(ErrorKind::kValidation,
                 "must name at least one value for an ai project");
    }
    return set;
  };
  record.preprocessing_tools = labels(5);
  field_index = 6;
  record.project_type = NormalizeLabel(raw[6]);
  if (ai && record.project_type.empty()) {
    throw fail(ErrorKind::kValidation, "missing value");
  }
  record.technique = NormalizeLabel(raw[7]);
  record.evaluation_metrics = labels(8);
  record.model_tools = labels(9);
  return record;
}

std::vector<ProjectRecord> ParseCsv(std::string_view text) {
  std::vector<CsvRow> rows = ReadCsv(text);
  if (rows.empty()) {
    throw Error(ErrorKind::kParse, "CSV input has no header row");
  }

  // Column position of each record field.
  std::array<std::size_t, kRecordFields.size()> column{};
  const auto& header = rows.front().cells;
  if (header.size() != kRecordFields.size()) {
    throw Error(ErrorKind::kParse,
                "CSV header has " + std::to_string(header.size()) +
                    " columns, expected " +
                    std::to_string(kRecordFields.size()));
  }
  std::vector<bool> seen(kRecordFields.size(), false);
  for (std::size_t c = 0; c < header.size(); ++c) {
    const std::string key = NormalizeLabel(header[c]);
    const auto it = std::find(kRecordFields.begin(), kRecordFields.end(), key);
    if (it == kRecordFields.end()) {
      throw Error(ErrorKind::kParse, "CSV header: unknown column '" + key + "'");
    }
    const auto f = static_cast<std::size_t>(it - kRecordFields.begin());
    if (seen[f]) {
      throw Error(ErrorKind::kParse, "CSV header: duplicate column '" + key + "'");
    }
    seen[f] = true;
    column[f] = c;
  }

  std::vector<ProjectRecord> records;
  records.reserve(rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& cells = rows[r].cells;
    if (cells.size() != kRecordFields.size()) {
      throw Error(ErrorKind::kParse,
                  "row " + std::to_string(r) + " (line " +
                      std::to_string(rows[r].line) + "): expected " +
                      std::to_string(kRecordFields.size()) + " cells, got " +
                      std::to_string(cells.size()));
    }
    RawRecord raw;
    for (std::size_t f = 0; f < raw.size(); ++f) raw[f] = cells[column[f]];
    records.push_back(BuildRecord(raw, r));
  }
  return records;
}

std::string JsonCell(const json& value, std::size_t row, std::string_view key) {
  if (value.is_null()) return {};
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array()) {
    std::string joined;
    for (const auto& item : value) {
      if (!item.is_string()) {
        throw Error(ErrorKind::kParse, "row " + std::to_string(row) +
                                           ", field " + std::string(key) +
                                           ": array items must be strings");
      }
      if (!joined.empty()) joined += ';';
      joined += item.get<std::string>();
    }
    return joined;
  }
  throw Error(ErrorKind::kParse, "row " + std::to_string(row) + ", field " +
                                     std::string(key) +
                                     ": expected a string or array of strings");
}

std::vector<ProjectRecord> ParseJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string("JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw Error(ErrorKind::kParse, "JSON records must be an array of objects");
  }
  std::vector<ProjectRecord> records;
  records.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::size_t row = i + 1;
    const json& obj = doc[i];
    if (!obj.is_object()) {
      throw Error(ErrorKind::kParse,
                  "row " + std::to_string(row) + ": expected an object");
    }
    for (const auto& [key, _] : obj.items()) {
      if (std::find(kRecordFields.begin(), kRecordFields.end(), key) ==
          kRecordFields.end()) {
        throw Error(ErrorKind::kParse, "row " + std::to_string(row) +
                                           ": unknown key '" + key + "'");
      }
    }
    RawRecord raw;
    for (std::size_t f = 0; f < raw.size(); ++f) {
      const std::string key(kRecordFields[f]);
      if (obj.contains(key)) raw[f] = JsonCell(obj.at(key), row, key);
    }
    records.push_back(BuildRecord(raw, row));
  }
  return records;
}

RawRecord ToRaw(const ProjectRecord& r) {
  return {r.name,
          r.description,
          std::string(ToString(r.project_category)),
          std::string(ToString(r.data_nature)),
          std::string(ToString(r.data_type)),
          JoinLabels(r.preprocessing_tools),
          r.project_type,
          r.technique,
          JoinLabels(r.evaluation_metrics),
          JoinLabels(r.model_tools)};
}

// Labels in a set-valued field may not contain the split characters, or they
// would not survive a round trip.
void CheckSerializable(const ProjectRecord& r, std::size_t row) {
  for (const LabelSet* set :
       {&r.preprocessing_tools, &r.evaluation_metrics, &r.model_tools}) {
    for (const auto& label : *set) {
      if (label.find_first_of(",;") != std::string::npos) {
        throw Error(ErrorKind::kValidation,
                    "row " + std::to_string(row) + ": label '" + label +
                        "' contains a list separator");
      }
    }
  }
}

json SynthFieldJson(const std::map<std::string, double>& weights) {
  json out = json::object();
  for (const auto& [label, w] : weights) out[label] = w;
  return out;
}

std::map<std::string, double> SynthFieldFromJson(const json& obj,
                                                  const std::string& where) {
  std::map<std::string, double> out;
  if (obj.is_null()) return out;
  if (!obj.is_object()) {
    throw Error(ErrorKind::kParse, where + ": expected an object of weights");
  }
  for (const auto& [label, w] : obj.items()) {
    if (!w.is_number()) {
      throw Error(ErrorKind::kParse, where + "." + label + ": expected a number");
    }
    out[NormalizeLabel(label)] = w.get<double>();
  }
  return out;
}

void CheckWeights(const std::map<std::string, double>& weights,
                  const std::string& where, bool probabilities,
                  bool allow_empty) {
  if (weights.empty()) {
    if (allow_empty) return;
    throw Error(ErrorKind::kValidation, where + ": no labels");
  }
  bool any_positive = false;
  for (const auto& [label, w] : weights) {
    if (label.empty()) {
      throw Error(ErrorKind::kValidation, where + ": empty label");
    }
    if (label.find_first_of(",;") != std::string::npos) {
      throw Error(ErrorKind::kValidation,
                  where + ": label '" + label + "' contains a list separator");
    }
    if (!std::isfinite(w) || w < 0.0 || (probabilities && w > 1.0)) {
      throw Error(ErrorKind::kValidation,
                  where + "." + label + ": weight out of range");
    }
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) {
    throw Error(ErrorKind::kValidation, where + ": needs a positive weight");
  }
}

LabelSet DrawLabelSet(const std::map<std::string, double>& probabilities,
                      Rng& rng) {
  LabelSet drawn;
  std::vector<double> weights;
  weights.reserve(probabilities.size());
  for (const auto& [label, p] : probabilities) {
    if (rng.Bernoulli(p)) drawn.insert(label);
    weights.push_back(p);
  }
  if (drawn.empty()) {
    auto it = probabilities.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(rng.Weighted(weights)));
    drawn.insert(it->first);
  }
  return drawn;
}

std::string DrawCategorical(const std::map<std::string, double>& weights,
                            Rng& rng) {
  std::vector<double> w;
  w.reserve(weights.size());
  for (const auto& [_, value] : weights) w.push_back(value);
  auto it = weights.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(rng.Weighted(w)));
  return it->first;
}

}  // namespace

RecordFormat ParseRecordFormat(std::string_view text) {
  const std::string key = NormalizeLabel(text);
  if (key == "csv") return RecordFormat::kCsv;
  if (key == "json") return RecordFormat::kJson;
  throw Error(ErrorKind::kInvalidArgument,
              "unknown record format '" + key + "', allowed: csv|json");
}

RecordFormat FormatForPath(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot != std::string_view::npos &&
      NormalizeLabel(path.substr(dot)) == ".json") {
    return RecordFormat::kJson;
  }
  return RecordFormat::kCsv;
}

std::vector<ProjectRecord> ParseRecords(std::string_view text,
                                        RecordFormat format) {
  return format == RecordFormat::kCsv ? ParseCsv(text) : ParseJson(text);
}

std::vector<ProjectRecord> ParseRecords(std::istream& in, RecordFormat format) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseRecords(buffer.str(), format);
}

std::vector<ProjectRecord> LoadRecords(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open dataset '" + path + "'");
  try {
    return ParseRecords(in, FormatForPath(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::string SerializeRecords(const std::vector<ProjectRecord>& records,
                             RecordFormat format) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    CheckSerializable(records[i], i + 1);
  }
  if (format == RecordFormat::kJson) {
    json doc = json::array();
    for (const auto& record : records) {
      const RawRecord raw = ToRaw(record);
      json obj = json::object();
      for (std::size_t f = 0; f < raw.size(); ++f) {
        obj[std::string(kRecordFields[f])] = raw[f];
      }
      doc.push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
  }

  std::string out;
  for (std::size_t f = 0; f < kRecordFields.size(); ++f) {
    if (f) out += ',';
    out += kRecordFields[f];
  }
  out += '\n';
  for (const auto& record : records) {
    const RawRecord raw = ToRaw(record);
    for (std::size_t f = 0; f < raw.size(); ++f) {
      if (f) out += ',';
      out += QuoteCsv(raw[f]);
    }
    out += '\n';
  }
  return out;
}

std::vector<ProjectRecord> FilterAi(const std::vector<ProjectRecord>& records) {
  std::vector<ProjectRecord> kept;
  std::copy_if(records.begin(), records.end(), std::back_inserter(kept),
               [](const ProjectRecord& r) {
                 return r.project_category == ProjectCategory::kAi;
               });
  return kept;
}

FeatureView ProjectFeatures(const ProjectRecord& record) {
  FeatureView view;
  view.inputs = {record.data_nature, record.data_type};
  view.outputs.preprocessing_tools() = record.preprocessing_tools;
  view.outputs.model_tools() = record.model_tools;
  if (!record.project_type.empty()) {
    view.outputs.project_type() = {record.project_type};
  }
  view.outputs.evaluation_metrics() = record.evaluation_metrics;
  return view;
}

std::vector<FeatureView> ProjectFeatures(
    const std::vector<ProjectRecord>& records) {
  std::vector<FeatureView> views;
  views.reserve(records.size());
  for (const auto& r : records) views.push_back(ProjectFeatures(r));
  return views;
}

void ValidateSynthSpec(const SynthSpec& spec) {
  if (spec.contexts.empty()) {
    throw Error(ErrorKind::kValidation, "synth spec: no contexts");
  }
  std::set<Context> seen;
  bool any_positive = false;
  for (std::size_t i = 0; i < spec.contexts.size(); ++i) {
    const auto& c = spec.contexts[i];
    const std::string where = "contexts[" + std::to_string(i) + "]";
    if (!seen.insert(c.context).second) {
      throw Error(ErrorKind::kValidation,
                  where + ": duplicate context " + ToString(c.context));
    }
    if (!std::isfinite(c.weight) || c.weight < 0.0) {
      throw Error(ErrorKind::kValidation, where + ".weight: out of range");
    }
    any_positive = any_positive || c.weight > 0.0;
    CheckWeights(c.preprocessing_tools, where + ".preprocessing_tools", true, false);
    CheckWeights(c.model_tools, where + ".model_tools", true, false);
    CheckWeights(c.evaluation_metrics, where + ".evaluation_metrics", true, false);
    CheckWeights(c.project_type, where + ".project_type", false, false);
    CheckWeights(c.technique, where + ".technique", false, true);
  }
  if (!any_positive) {
    throw Error(ErrorKind::kValidation,
                "synth spec: needs a context with positive weight");
  }
}

SynthSpec ParseSynthSpec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string("synth spec: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("contexts") ||
      !doc["contexts"].is_array()) {
    throw Error(ErrorKind::kParse, "synth spec: expected {\"contexts\": [...]}");
  }
  SynthSpec spec;
  for (std::size_t i = 0; i < doc["contexts"].size(); ++i) {
    const json& c = doc["contexts"][i];
    const std::string where = "contexts[" + std::to_string(i) + "]";
    if (!c.is_object() || !c.contains("nature") || !c.contains("type")) {
      throw Error(ErrorKind::kParse, where + ": needs nature and type");
    }
    SynthContextSpec ctx;
    try {
      ctx.context = {ParseDataNature(c["nature"].get<std::string>()),
                     ParseDataType(c["type"].get<std::string>())};
    } catch (const json::exception& e) {
      throw Error(ErrorKind::kParse, where + ": " + e.what());
    }
    ctx.weight = c.value("weight", 1.0);
    const auto field = [&](const char* key) {
      return SynthFieldFromJson(c.contains(key) ? c[key] : json(),
                                where + "." + key);
    };
    ctx.preprocessing_tools = field("preprocessing_tools");
    ctx.model_tools = field("model_tools");
    ctx.evaluation_metrics = field("evaluation_metrics");
    ctx.project_type = field("project_type");
    ctx.technique = field("technique");
    spec.contexts.push_back(std::move(ctx));
  }
  ValidateSynthSpec(spec);
  return spec;
}

std::string SerializeSynthSpec(const SynthSpec& spec) {
  json contexts = json::array();
  for (const auto& c : spec.contexts) {
    json obj;
    obj["nature"] = std::string(ToString(c.context.nature));
    obj["type"] = std::string(ToString(c.context.type));
    obj["weight"] = c.weight;
    obj["preprocessing_tools"] = SynthFieldJson(c.preprocessing_tools);
    obj["model_tools"] = SynthFieldJson(c.model_tools);
    obj["evaluation_metrics"] = SynthFieldJson(c.evaluation_metrics);
    obj["project_type"] = SynthFieldJson(c.project_type);
    obj["technique"] = SynthFieldJson(c.technique);
    contexts.push_back(std::move(obj));
  }
  json doc;
  doc["version"] = 1;
  doc["contexts"] = std::move(contexts);
  return doc.dump(2) + "\n";
}

std::vector<ProjectRecord> SynthDataset(const SynthSpec& spec, std::size_t n,
                                        std::uint64_t seed) {
  ValidateSynthSpec(spec);
  std::vector<double> context_weights;
  for (const auto& c : spec.contexts) context_weights.push_back(c.weight);

  Rng rng(seed);
  std::vector<ProjectRecord> records;
  records.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const SynthContextSpec& c = spec.contexts[rng.Weighted(context_weights)];
    ProjectRecord r;
    std::ostringstream name;
    name << "synth-" << std::setw(4) << std::setfill('0') << (i + 1);
    r.name = name.str();
    r.description = "synthetic " + ToString(c.context) + " project";
    r.project_category = ProjectCategory::kAi;
    r.data_nature = c.context.nature;
    r.data_type = c.context.type;
    r.preprocessing_tools = DrawLabelSet(c.preprocessing_tools, rng);
    r.project_type = DrawCategorical(c.project_type, rng);
    r.technique = c.technique.empty() ? std::string("unspecified")
                                      : DrawCategorical(c.technique, rng);
    r.evaluation_metrics = DrawLabelSet(c.evaluation_metrics, rng);
    r.model_tools = DrawLabelSet(c.model_tools, rng);
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace mlopsrec
