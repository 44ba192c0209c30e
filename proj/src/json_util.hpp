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

#include <string>
#include <string_view>

#include "json.hpp"
#include "mlopsrec/common.hpp"

namespace mlopsrec::json_util {

using nlohmann::json;

// Parses text, converting syntax errors into kParse errors that carry the
// 1-based line and column.
json ParseDocument(std::string_view text, std::string_view what);

// A required member; throws kValidation "<where>: missing '<key>'".
const json& Member(const json& obj, std::string_view key,
                   const std::string& where);

std::string String(const json& value, const std::string& where);

// A set-valued cell: an array of strings or a single ';'/','-separated
// string. Labels are normalized.
LabelSet Labels(const json& value, const std::string& where);

json ToJson(const LabelSet& labels);
json ToJson(const OutputLabels& labels);
OutputLabels OutputsFromJson(const json& obj, const std::string& where,
                             bool require_non_empty);

// Stable text form: two-space indent, keys sorted, trailing newline.
std::string Dump(const json& doc);

}  // namespace mlopsrec::json_util
