// Copyright 2026 The mexc Authors.
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

#ifndef MEXC_TOOLS_CLI_H_
#define MEXC_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace mexc::cli {

// Exit codes of every subcommand.
inline constexpr int kExitPass = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitFail = 2;

// Runs the command line `args` (args[0] is the program name) writing the
// report to `out` and diagnostics to `err`. Never throws.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace mexc::cli

#endif  // MEXC_TOOLS_CLI_H_
