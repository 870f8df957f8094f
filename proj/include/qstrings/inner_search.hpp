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
 * Equality test of two hash registers by Grover search over bit positions
 * for a differing bit. The search runs 0, 1, 2, 4, ... iterations (up to
 * sqrt of the padded width) on fresh copies and declares "equal" when no
 * repetition yields a verified differing bit, so it only errs on unequal
 * inputs. The 0-iteration draw covers inputs where most bits differ, which
 * the doubling steps overshoot.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "qstrings/resources.hpp"
#include "qstrings/rng.hpp"

namespace qstrings {

struct InnerSearchModel {
    /// Bits compared (L).
    unsigned hash_width = 1;
    /// ceil(log2 L).
    unsigned index_width = 0;
    /// Iterations per repetition, starting with 0.
    std::vector<std::uint64_t> schedule;
    std::uint64_t iterations_per_run = 0;
    /// Gate units of one full run: each iteration costs a diffusion over
    /// index_width qubits plus one bit query; each repetition adds one
    /// verification query.
    std::uint64_t cost_per_run = 0;
    /// miss[t]: probability that a run with t differing bits finds none.
    std::vector<double> miss;
    /// max over t >= 1 of miss[t].
    double declared_error = 0.0;
};

/// Model for L-bit registers, computed once per L by statevector
/// simulation. Thread-safe.
const InnerSearchModel &inner_search_model(unsigned hash_width);

struct InnerRun {
    bool equal = true;
    std::uint64_t iterations = 0;
};

/// One simulated run on concrete register values.
InnerRun run_inner_equality(std::uint64_t a, std::uint64_t b,
                            unsigned hash_width, Rng &rng);

/// Majority over rho runs; charges rho full runs to the ledger as one
/// oracle query.
bool inner_equal_majority(std::uint64_t a, std::uint64_t b,
                          unsigned hash_width, unsigned rho, Rng &rng,
                          ResourceLedger &ledger);

} // namespace qstrings
