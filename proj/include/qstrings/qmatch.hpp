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
 * Quantum string matching: the text's window hashes held in index-bound
 * registers, a hash-equality oracle built on the inner bit search, and the
 * unique-target and multi-target search procedures.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qstrings/bitstring.hpp"
#include "qstrings/fingerprint.hpp"
#include "qstrings/grover.hpp"
#include "qstrings/inner_search.hpp"
#include "qstrings/resources.hpp"
#include "qstrings/sim/search_register.hpp"

namespace qstrings {

/// Sizes and schedules of a matching run, fixed by (n, m, epsilon).
struct MatchPlan {
    std::uint64_t windows = 1;
    unsigned index_width = 0;
    std::uint64_t copies = 1;
    unsigned hash_width = 1;
    /// Iterations per repetition of match_search, capped at `copies`.
    std::vector<std::uint64_t> schedule;
    std::uint64_t unique_iterations = 1;
    unsigned rho_search = 1;
    unsigned rho_unique = 1;
};

MatchPlan plan_match(std::uint64_t n, std::uint64_t m, double epsilon);

/**
 * @brief Prepared matching state: h_p(w) kept classically and the register
 * spec of one copy (index a bound to h_p(s[a+1, a+m]), padding bound to a
 * value different from h_p(w)).
 */
struct MatchStateSpec {
    HashValue pattern_hash;
    sim::RegisterSpec copy;
    std::uint64_t copies = 1;
    unsigned hash_width = 1;
};

/// Expects params drawn with delta = N and max_len = m.
MatchStateSpec prepare_match_state(const MatchInstance &inst,
                                   const HashParams &params);

/// The hash-equality oracle f over the copy's index domain.
OracleSpec equality_oracle(const MatchStateSpec &state);

/**
 * @brief One evaluation of f(i) by a simulated inner search (no majority
 * vote). Padding indices give 0.
 */
bool equality_oracle_f(const MatchStateSpec &state, std::uint64_t i, Rng &rng);

struct MatchResult {
    /// 1-indexed occurrence; empty for NotFound.
    std::optional<std::size_t> position;
    /// Index measured by the last repetition.
    std::uint64_t measured_index = 0;
    bool hash_verified = false;
    bool exactly_verified = false;
    /// The measured index is a true occurrence.
    bool hit = false;
    std::uint64_t copies_used = 0;
    std::uint64_t grover_iterations = 0;
    double target_probability = 0.0;
    unsigned rho = 1;
    ResourceLedger ledger;
    HashParams params;
};

struct MatchOptions {
    sim::Backend backend = sim::Backend::Structured;
    sim::LockstepReport *report = nullptr;
    double fault = 0.0;
};

/// One copy, optimal_iterations(N_pad, 1) iterations with majority-vote
/// queries, then hash and window verification.
MatchResult match_unique(const MatchInstance &inst, const HashParams &params,
                         Rng &rng, const MatchOptions &options = {});

/// Doubling schedule over the copies; first hash-verified outcome wins.
MatchResult match_search(const MatchInstance &inst, const HashParams &params,
                         Rng &rng, const MatchOptions &options = {});

/// Draws p (delta = N, max_len = m) from `rng`, then runs the search.
MatchResult run_match(const MatchInstance &inst, double epsilon, Rng &rng,
                      bool unique, const MatchOptions &options = {});

/// Qubits of the run's layout: the classical-value hash register, every
/// copy without its oracle flag, one outer flag, inner ancillas.
std::uint64_t match_layout_qubits(const MatchStateSpec &state, unsigned rho);

} // namespace qstrings
