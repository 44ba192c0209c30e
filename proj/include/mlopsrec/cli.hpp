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

#include <iosfwd>
#include <string>
#include <vector>

namespace mlopsrec::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,       // bad flags or argument values
  kExitValidation = 3,  // malformed or invalid input files
  kExitRuntime = 4,     // I/O failures, no applicable rule, empty splits
};

// Runs one invocation of the command-line tool. args excludes the program
// name. Reports go to out, diagnostics and the effective-config banner to
// err.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mlopsrec::cli
