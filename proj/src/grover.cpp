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
#include "qstrings/grover.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qstrings/fingerprint.hpp"

namespace qstrings {

void OracleSpec::validate() const {
    if (domain_size == 0) {
        throw std::invalid_argument("oracle domain is empty");
    }
    if (!predicate) {
        throw std::invalid_argument("oracle has no predicate");
    }
    if (!(error_prob >= 0.0 && error_prob < 0.5)) {
        throw std::invalid_argument("oracle error probability must lie in "
                                    "[0, 1/2)");
    }
}

std::uint64_t optimal_iterations(std::uint64_t domain, std::uint64_t targets) {
    if (targets == 0) {
        throw std::invalid_argument("target count 0: use the doubling "
                                    "schedule");
    }
    if (targets > domain) {
        throw std::invalid_argument("more targets than domain elements");
    }
    const double j = std::floor(std::numbers::pi / 4.0 *
                                std::sqrt(static_cast<double>(domain) /
                                          static_cast<double>(targets)));
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(j));
}

double majority_error(double e, unsigned rho) {
    if (rho == 0) {
        throw std::invalid_argument("majority over zero evaluations");
    }
    if (e <= 0.0) {
        return 0.0;
    }
    if (e >= 1.0) {
        return 1.0;
    }
    // sum of C(rho,i) e^i (1-e)^(rho-i) for i > rho/2, in log space
    double total = 0.0;
    const double le = std::log(e);
    const double lf = std::log1p(-e);
    for (unsigned i = rho / 2 + 1; i <= rho; ++i) {
        const double log_binom = std::lgamma(rho + 1.0) - std::lgamma(i + 1.0) -
                                 std::lgamma(rho - i + 1.0);
        total += std::exp(log_binom + i * le + (rho - i) * lf);
    }
    return std::min(total, 1.0);
}

unsigned choose_majority(double e, double target) {
    if (e <= 0.0) {
        return 1;
    }
    if (e >= 0.5) {
        throw std::invalid_argument("majority vote cannot amplify error >= "
                                    "1/2");
    }
    for (unsigned rho = 1; rho < 100000; rho += 2) {
        if (majority_error(e, rho) <= target) {
            return rho;
        }
    }
    throw std::invalid_argument("error target unreachable");
}

unsigned majority_for(const OracleSpec &oracle,
                      std::uint64_t planned_iterations) {
    if (oracle.majority != 0) {
        return oracle.majority;
    }
    const double budget =
        1.0 / (10.0 * static_cast<double>(std::max<std::uint64_t>(
                          1, planned_iterations)));
    return choose_majority(oracle.error_prob, budget);
}

double target_mass(const sim::SearchRegister &reg, const OracleSpec &oracle) {
    const auto probs = reg.index_probabilities();
    double mass = 0.0;
    for (std::uint64_t i = 0; i < probs.size(); ++i) {
        if (oracle.targets(i)) {
            mass += probs[i];
        }
    }
    return mass;
}

void apply_query(sim::SearchRegister &reg, const OracleSpec &oracle,
                 unsigned rho, Rng &rng, ResourceLedger &ledger) {
    const std::uint64_t live = std::min(oracle.domain_size, reg.padded_size());
    std::vector<std::uint8_t> flips;
    if (oracle.error_prob > 0.0 || oracle.error_at) {
        flips.assign(live, 0);
        for (std::uint64_t i = 0; i < live; ++i) {
            const double e =
                oracle.error_at ? oracle.error_at(i) : oracle.error_prob;
            flips[i] = rng.bernoulli(majority_error(e, rho)) ? 1 : 0;
        }
    }
    reg.phase_oracle([&](std::uint64_t i, std::span<const std::uint64_t> data) {
        if (i >= live) {
            return false;
        }
        const bool exact = oracle.register_predicate
                               ? oracle.register_predicate(i, data)
                               : oracle.predicate(i);
        return flips.empty() ? exact : (exact != (flips[i] != 0));
    });
    ledger.charge(ChargeKind::OracleQuery, rho * oracle.evaluation_cost);
    ledger.charge(ChargeKind::InnerGroverIteration,
                  rho * oracle.inner_iterations);
}

GroverOutcome grover_run(sim::SearchRegister &reg, const OracleSpec &oracle,
                         std::uint64_t iterations, Rng &rng,
                         ResourceLedger &ledger, unsigned rho) {
    oracle.validate();
    for (std::uint64_t it = 0; it < iterations; ++it) {
        apply_query(reg, oracle, rho, rng, ledger);
        reg.diffusion();
        ledger.charge(ChargeKind::Diffusion, reg.index_width());
        ledger.charge(ChargeKind::GroverIteration, 1);
    }
    GroverOutcome out;
    out.iterations = iterations;
    out.repetitions = 1;
    out.target_probability = target_mass(reg, oracle);
    out.found_index = reg.measure_index(rng);
    out.predicate_value = oracle.targets(out.found_index);
    return out;
}

GroverOutcome bounded_error_search(sim::SearchRegister &reg,
                                   const OracleSpec &oracle,
                                   std::uint64_t iterations, Rng &rng,
                                   ResourceLedger &ledger) {
    return grover_run(reg, oracle, iterations, rng, ledger,
                      majority_for(oracle, iterations));
}

std::vector<std::uint64_t> bbht_schedule(std::uint64_t padded_size) {
    const unsigned q = ceil_log2(padded_size);
    const unsigned last = (q + 1) / 2;
    std::vector<std::uint64_t> out;
    for (unsigned j = 0; j <= last; ++j) {
        out.push_back(std::uint64_t{1} << j);
    }
    return out;
}

GroverOutcome bbht_search(const OracleSpec &oracle, sim::CopySupply &copies,
                          Rng &rng, ResourceLedger &ledger,
                          std::size_t max_repetitions) {
    oracle.validate();
    const std::uint64_t padded = std::bit_ceil(oracle.domain_size);
    auto schedule = bbht_schedule(padded);
    if (schedule.size() > max_repetitions) {
        schedule.resize(max_repetitions);
    }
    const unsigned rho =
        schedule.empty() ? 1 : majority_for(oracle, schedule.back());

    GroverOutcome result;
    result.found = false;
    for (const std::uint64_t iterations : schedule) {
        auto reg = copies.take();
        const auto run = grover_run(*reg, oracle, iterations, rng, ledger, rho);
        result.iterations += run.iterations;
        result.repetitions += 1;
        result.found_index = run.found_index;
        result.predicate_value = run.predicate_value;
        result.target_probability = run.target_probability;
        if (run.predicate_value) {
            result.found = true;
            break;
        }
    }
    return result;
}

MinimumResult durr_hoyer_min(const MinimumSpec &spec, sim::CopySupply &copies,
                             Rng &rng, ResourceLedger &ledger) {
    if (spec.domain_size == 0 || !spec.precedes) {
        throw std::invalid_argument("minimum search needs a domain and an "
                                    "order");
    }
    const std::uint64_t max_phases =
        spec.max_phases != 0
            ? spec.max_phases
            : 3 * std::max(1U, ceil_log2(spec.domain_size));

    MinimumResult result;
    std::uint64_t y = spec.initial_threshold
                          ? *spec.initial_threshold
                          : rng.uniform_int(0, spec.domain_size - 1);
    result.thresholds.push_back(y);
    while (result.phases < max_phases) {
        ledger.begin_phase("min-phase-" + std::to_string(result.phases));
        OracleSpec oracle;
        oracle.domain_size = spec.domain_size;
        oracle.evaluation_cost = spec.evaluation_cost;
        oracle.predicate = [&spec, y](std::uint64_t j) {
            return spec.precedes(j, y);
        };
        if (spec.register_mark) {
            oracle.register_predicate = spec.register_mark(y);
        }
        const auto found =
            bbht_search(oracle, copies, rng, ledger, spec.repetitions_per_phase);
        ++result.phases;
        result.iterations += found.iterations;
        if (!found.found) {
            break;
        }
        y = found.found_index;
        result.thresholds.push_back(y);
    }
    result.index = y;
    return result;
}

MinimumResult find_minimum(const std::vector<std::uint64_t> &values,
                           sim::Backend backend, Rng &rng,
                           ResourceLedger &ledger) {
    if (values.empty()) {
        throw std::invalid_argument("no values to minimise");
    }
    const std::uint64_t m = values.size();
    const unsigned q = ceil_log2(m);
    const std::uint64_t padded = std::uint64_t{1} << q;
    const std::uint64_t top = *std::max_element(values.begin(), values.end());

    sim::RegisterSpec reg;
    reg.index_width = q;
    reg.domain_size = m;
    sim::DataRegisterSpec keys{"key",
                               std::max(1U, static_cast<unsigned>(
                                                std::bit_width(top))),
                               std::vector<std::uint64_t>(padded, 0)};
    std::copy(values.begin(), values.end(), keys.table.begin());
    reg.data.push_back(std::move(keys));

    MinimumSpec spec;
    spec.domain_size = m;
    spec.precedes = [&values](std::uint64_t j, std::uint64_t y) {
        return values[j] < values[y] || (values[j] == values[y] && j < y);
    };
    spec.register_mark = [&values](std::uint64_t y) -> sim::MarkFn {
        return [&values, y](std::uint64_t j,
                            std::span<const std::uint64_t> data) {
            return data[0] < values[y] || (data[0] == values[y] && j < y);
        };
    };
    const std::uint64_t phases = 3 * std::max(1U, q);
    sim::CopySupply copies(
        [&reg, backend] { return sim::make_register(reg, backend); },
        phases * bbht_schedule(padded).size());
    ledger.qubits_total = copies.limit() * reg.total_width();
    return durr_hoyer_min(spec, copies, rng, ledger);
}

} // namespace qstrings
