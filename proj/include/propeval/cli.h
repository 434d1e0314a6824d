// Copyright 2026 The Propeval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROPEVAL_CLI_H_
#define PROPEVAL_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace propeval {

inline constexpr const char *kVersion = "1.0.0";

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitIoOrParse = 2,
  kExitUsage = 3,
};

// Runs the command line. args[0] is the program name. Results go to `out`
// unless --out names a file; diagnostics go to `err`.
int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

struct OptionInfo {
  std::string subcommand;
  std::string name;  // e.g. "--gold"
  std::string description;
};

// Every option the tool accepts, straight from the parser definition.
std::vector<OptionInfo> ListOptions();

}  // namespace propeval

#endif  // PROPEVAL_CLI_H_
