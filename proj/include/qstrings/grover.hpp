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
 * Grover search over a SearchRegister: fixed-iteration runs, the doubling
 * schedule for unknown target counts, majority-vote amplification for
 * bounded-error oracles, and Durr-Hoyer minimum finding.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "qstrings/resources.hpp"
#include "qstrings/rng.hpp"
#include "qstrings/sim/search_register.hpp"

namespace qstrings {

/**
 * @brief What a search looks for.
 *
 * `predicate` is the exact target test used for classical verification.
 * `register_predicate`, when set, is what the oracle evaluates on the
 * register contents; it must agree with `predicate` on [0, domain_size).
 * Indices at or above domain_size are never targets.
 *
 * A bounded-error oracle answers wrongly with probability error_at(i)
 * (or error_prob when error_at is unset) per evaluation; error_prob is the
 * worst case and must be below 1/2.
 */
struct OracleSpec {
    std::uint64_t domain_size = 1;
    std::function<bool(std::uint64_t)> predicate;
    sim::MarkFn register_predicate;
    std::uint64_t evaluation_cost = 1;
    /// Inner Grover iterations spent per evaluation (informational).
    std::uint64_t inner_iterations = 0;
    double error_prob = 0.0;
    std::function<double(std::uint64_t)> error_at;
    /// Forces the majority-vote width; 0 picks it from the error budget.
    unsigned majority = 0;

    /// Throws std::invalid_argument when the invariants do not hold.
    void validate() const;
    [[nodiscard]] bool targets(std::uint64_t index) const {
        return index < domain_size && predicate(index);
    }
};

struct GroverOutcome {
    /// False only for searches that verify and found nothing.
    bool found = true;
    std::uint64_t found_index = 0;
    bool predicate_value = false;
    std::uint64_t iterations = 0;
    /// Probability mass on targets just before the final measurement.
    double target_probability = 0.0;
    unsigned repetitions = 0;
};

/// max(1, floor(pi/4 * sqrt(M/t))). t = 0 is rejected.
std::uint64_t optimal_iterations(std::uint64_t domain, std::uint64_t targets);

/// P(more than half of rho independent evaluations err), each with
/// probability e.
double majority_error(double e, unsigned rho);

/// Smallest odd rho with majority_error(e, rho) <= target; 1 when e = 0.
unsigned choose_majority(double e, double target);

/// Majority width for a run of `planned_iterations` queries: per-query
/// error at most 1 / (10 * planned_iterations), or the forced value.
unsigned majority_for(const OracleSpec &oracle,
                      std::uint64_t planned_iterations);

/// Mass on exact targets.
double target_mass(const sim::SearchRegister &reg, const OracleSpec &oracle);

/**
 * @brief One phase-oracle query. For bounded-error oracles each in-domain
 * index's answer is flipped with the majority-vote error probability; no
 * random draws happen for indices whose error is 0.
 */
void apply_query(sim::SearchRegister &reg, const OracleSpec &oracle,
                 unsigned rho, Rng &rng, ResourceLedger &ledger);

/// Query then diffusion, `iterations` times, then measure the index.
GroverOutcome grover_run(sim::SearchRegister &reg, const OracleSpec &oracle,
                         std::uint64_t iterations, Rng &rng,
                         ResourceLedger &ledger, unsigned rho = 1);

/// grover_run with rho = majority_for(oracle, iterations).
GroverOutcome bounded_error_search(sim::SearchRegister &reg,
                                   const OracleSpec &oracle,
                                   std::uint64_t iterations, Rng &rng,
                                   ResourceLedger &ledger);

/// Iterations 2^j for j = 0 .. ceil(log2 sqrt(padded_size)).
std::vector<std::uint64_t> bbht_schedule(std::uint64_t padded_size);

/**
 * @brief Doubling schedule, one fresh copy per repetition, each outcome
 * checked with the exact predicate. Returns the first verified hit or an
 * outcome with found = false. At most `max_repetitions` repetitions run;
 * bounded-error oracles get rho from the largest planned run.
 */
GroverOutcome
bbht_search(const OracleSpec &oracle, sim::CopySupply &copies, Rng &rng,
            ResourceLedger &ledger,
            std::size_t max_repetitions = std::numeric_limits<std::size_t>::max());

/**
 * @brief Minimum finding by repeated threshold search.
 *
 * `precedes(j, y)` is the exact strict order "j comes before threshold y";
 * `register_mark(y)`, when set, gives the same test evaluated on register
 * contents. The threshold may be a value outside the domain (a sentinel).
 */
struct MinimumSpec {
    std::uint64_t domain_size = 1;
    std::function<bool(std::uint64_t, std::uint64_t)> precedes;
    std::function<sim::MarkFn(std::uint64_t)> register_mark;
    /// Uniform random in [0, domain_size) when unset.
    std::optional<std::uint64_t> initial_threshold;
    /// 0 means 3 * max(1, ceil(log2 domain_size)).
    std::uint64_t max_phases = 0;
    /// Repetitions allowed per phase.
    std::size_t repetitions_per_phase =
        std::numeric_limits<std::size_t>::max();
    std::uint64_t evaluation_cost = 1;
};

struct MinimumResult {
    std::uint64_t index = 0;
    std::uint64_t phases = 0;
    std::uint64_t iterations = 0;
    /// Thresholds after each phase, starting with the initial one.
    std::vector<std::uint64_t> thresholds;
};

MinimumResult durr_hoyer_min(const MinimumSpec &spec, sim::CopySupply &copies,
                             Rng &rng, ResourceLedger &ledger);

/// Argmin of `values` (ties to the lower index) with the keys held in a
/// data register.
MinimumResult find_minimum(const std::vector<std::uint64_t> &values,
                           sim::Backend backend, Rng &rng,
                           ResourceLedger &ledger);

} // namespace qstrings
