// Copyright 2026 The qstrings Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Command-line entry point, callable in-process.
 */
#pragma once

#include <iosfwd>

namespace qstrings::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
};

/// Parses argv and runs one subcommand. CSV and reports go to `out` unless
/// a --csv path is given; diagnostics go to `err`.
int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err);

} // namespace qstrings::cli
