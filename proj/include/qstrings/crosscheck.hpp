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
 * Backend cross-check: a fixed battery of tiny matching and comparison
 * runs executed with the structured and dense backends in lockstep.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qstrings {

struct CrosscheckCase {
    std::string name;
    /// Widest register copy of the instance, in qubits.
    unsigned width = 0;
    bool skipped = false;
    std::uint64_t steps = 0;
    double max_deviation = 0.0;
    std::optional<std::uint64_t> mismatch_basis;
    /// Structured-only and dense-only runs produced identical ledgers and
    /// results.
    bool ledgers_equal = true;
    bool passed = true;
};

struct CrosscheckReport {
    std::vector<CrosscheckCase> cases;
    [[nodiscard]] bool passed() const;
};

/// Epsilon used for the battery's hash primes; keeps registers narrow.
inline constexpr double kCrosscheckEpsilon = 0.9;

/**
 * @brief Runs the battery. Cases wider than `max_width` are skipped.
 * With `inject_fault` the structured amplitudes of the first case are
 * perturbed, which must make that case fail.
 */
CrosscheckReport run_crosscheck(unsigned max_width, std::uint64_t seed,
                                bool inject_fault = false);

/// One line per case plus a summary line.
void write_crosscheck_report(std::ostream &out, const CrosscheckReport &report);

} // namespace qstrings
