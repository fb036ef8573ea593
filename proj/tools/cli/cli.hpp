// Copyright 2026 The fixgraph Authors
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

#ifndef FIXGRAPH_TOOLS_CLI_HPP_
#define FIXGRAPH_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace fixgraph::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;     // unreadable file, parse error
inline constexpr int kExitUsage = 2;          // unknown subcommand or flag
inline constexpr int kExitCapacity = 3;       // group larger than --cap
inline constexpr int kExitVerifyFailed = 4;   // some verify instance failed

// Runs one invocation. args excludes the program name. "-" or an omitted
// FILE reads the graph from `in`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace fixgraph::cli

#endif  // FIXGRAPH_TOOLS_CLI_HPP_
