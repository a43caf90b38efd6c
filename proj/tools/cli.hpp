// Copyright 2026 The quatsim Authors
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

#ifndef QUATSIM_TOOLS_CLI_HPP
#define QUATSIM_TOOLS_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace quatsim::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    /// A mathematical property failed: a deviation over tolerance, an
    /// invalid state/POVM/channel, a matrix outside the image of psi, or an
    /// inconsistent frame function.
    kViolation = 1,
    /// Bad flags, unreadable files, or malformed JSON.
    kUsage = 2,
};

/// Runs the tool on `args` (args[0] is the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Parses "a..b" (inclusive) or "a,b,c" into positive integers.
/// Throws std::invalid_argument on anything else.
std::vector<std::size_t> parse_dims(const std::string &text);

}  // namespace quatsim::cli

#endif
