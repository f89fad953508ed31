// Copyright 2026 The ctlsets Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CTLSETS_TOOLS_CLI_HPP_
#define CTLSETS_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace ctlsets::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

// Runs one subcommand. The report goes to `out` as JSON, diagnostics to
// `err`. Returns the process exit code.
int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace ctlsets::cli

#endif  // CTLSETS_TOOLS_CLI_HPP_
