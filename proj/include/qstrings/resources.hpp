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
 * Qubit and abstract gate-unit accounting.
 *
 * Cost model: a diffusion over a width-q register costs q units, an oracle
 * query costs the oracle's evaluation cost (times the majority-vote
 * repetition count), an element access costs ceil(log2 k) units, and a
 * classical-to-register hash evaluation costs one unit.
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qstrings {

enum class ChargeKind {
    Diffusion,
    OracleQuery,
    InnerGroverIteration,
    Access,
    HashEval,
    GroverIteration,
};

std::string_view to_string(ChargeKind kind);
/// Throws std::invalid_argument on an unknown name.
ChargeKind charge_kind_from_string(std::string_view name);

struct PhaseCharges {
    std::string label;
    std::uint64_t diffusion_units = 0;
    std::uint64_t oracle_queries = 0;
    std::uint64_t inner_grover_iterations = 0;
    std::uint64_t access_units = 0;
    std::uint64_t hash_eval_units = 0;
    std::uint64_t grover_iterations = 0;
};

/**
 * @brief Monotone cost counters for one run, with an optional per-phase
 * breakdown. `inner_grover_iterations` and `grover_iterations` are
 * informational and not part of the gate-unit total.
 */
struct ResourceLedger {
    std::uint64_t qubits_total = 0;
    std::uint64_t diffusion_units = 0;
    std::uint64_t oracle_queries = 0;
    std::uint64_t inner_grover_iterations = 0;
    std::uint64_t access_units = 0;
    std::uint64_t hash_eval_units = 0;
    std::uint64_t grover_iterations = 0;
    std::vector<PhaseCharges> phases;

    void charge(ChargeKind kind, std::uint64_t amount);
    void charge(std::string_view kind, std::uint64_t amount);
    /// Later charges are also recorded against this phase.
    void begin_phase(std::string label);

    [[nodiscard]] std::uint64_t gate_units_total() const {
        return diffusion_units + oracle_queries + access_units +
               hash_eval_units;
    }
};

/// Qubits used by the inner equality search over a width-w hash register
/// with majority vote over rho runs: index, phase flag, verdict, counter.
std::uint64_t inner_ancillas(unsigned hash_width, unsigned rho);

/**
 * @brief Closed-form qubit counts.
 *
 * match: W + c(q + W) + A with q = ceil(log2 N), c = max(1, q),
 * W = register_width of the universe for delta = N, max_len = m, and
 * A = 1 (outer phase flag) + inner_ancillas(W, rho).
 *
 * match_unique: q + 2W + A (one copy).
 *
 * compare_grover: (q + 2) for xi, 3c * c copies of (q + 2), one phi qubit,
 * ceil(log2(k + 1)) for psi, plus a phase flag and a comparison flag;
 * q = ceil(log2 k), c = max(1, q).
 *
 * compare_bsearch: (q + 1) for phi, c copies of (q + 2W), plus
 * inner_ancillas(W, rho), with W from delta = k, max_len = k.
 */
std::uint64_t qubit_count_match(std::uint64_t n, std::uint64_t m,
                                double epsilon);
std::uint64_t qubit_count_match_unique(std::uint64_t n, std::uint64_t m,
                                       double epsilon);
std::uint64_t qubit_count_compare_grover(std::uint64_t k);
std::uint64_t qubit_count_compare_bsearch(std::uint64_t k, double epsilon);

} // namespace qstrings
