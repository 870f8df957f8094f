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
#include "qstrings/qmatch.hpp"

#include <bit>
#include <stdexcept>

namespace qstrings {

MatchPlan plan_match(std::uint64_t n, std::uint64_t m, double epsilon) {
    if (m == 0 || m > n) {
        throw std::invalid_argument("need 1 <= m <= n");
    }
    MatchPlan plan;
    plan.windows = n - m + 1;
    plan.index_width = ceil_log2(plan.windows);
    plan.copies = std::max(1U, plan.index_width);
    plan.hash_width = universe_width(plan.windows, m, epsilon);
    const std::uint64_t padded = std::uint64_t{1} << plan.index_width;
    plan.schedule = bbht_schedule(padded);
    if (plan.schedule.size() > plan.copies) {
        plan.schedule.resize(plan.copies);
    }
    plan.unique_iterations = optimal_iterations(padded, 1);
    const double e = inner_search_model(plan.hash_width).declared_error;
    OracleSpec probe;
    probe.error_prob = e;
    plan.rho_search = majority_for(probe, plan.schedule.back());
    plan.rho_unique = majority_for(probe, plan.unique_iterations);
    return plan;
}

MatchStateSpec prepare_match_state(const MatchInstance &inst,
                                   const HashParams &params) {
    MatchStateSpec st;
    const std::uint64_t windows = inst.windows();
    st.pattern_hash = rolling_hash(inst.pattern(), params.p);
    st.hash_width = params.register_width();
    st.copy.index_width = ceil_log2(windows);
    st.copy.domain_size = windows;
    st.copies = std::max(1U, st.copy.index_width);

    const std::uint64_t padded = std::uint64_t{1} << st.copy.index_width;
    const std::uint64_t sentinel = st.pattern_hash.residue ^ 1U;
    std::vector<std::uint64_t> table(padded, sentinel);
    const auto hashes = window_hashes(inst.text(), inst.m(), params.p);
    std::copy(hashes.begin(), hashes.end(), table.begin());
    st.copy.data.push_back({"hash", st.hash_width, std::move(table)});
    return st;
}

OracleSpec equality_oracle(const MatchStateSpec &state) {
    const auto &model = inner_search_model(state.hash_width);
    const auto &table = state.copy.data.front().table;
    const std::uint64_t hw = state.pattern_hash.residue;
    OracleSpec o;
    o.domain_size = state.copy.domain_size;
    o.predicate = [&table, hw](std::uint64_t i) { return table[i] == hw; };
    o.register_predicate = [hw](std::uint64_t,
                                std::span<const std::uint64_t> data) {
        return data[0] == hw;
    };
    o.evaluation_cost = model.cost_per_run;
    o.inner_iterations = model.iterations_per_run;
    o.error_prob = model.declared_error;
    o.error_at = [&table, hw, &model](std::uint64_t i) {
        const auto t = std::popcount(table[i] ^ hw);
        return t == 0 ? 0.0 : model.miss[t];
    };
    return o;
}

bool equality_oracle_f(const MatchStateSpec &state, std::uint64_t i,
                       Rng &rng) {
    if (i >= state.copy.domain_size) {
        return false;
    }
    const auto &table = state.copy.data.front().table;
    return run_inner_equality(state.pattern_hash.residue, table.at(i),
                              state.hash_width, rng)
        .equal;
}

std::uint64_t match_layout_qubits(const MatchStateSpec &state, unsigned rho) {
    return state.hash_width + state.copies * (state.copy.total_width() - 1) +
           1 + inner_ancillas(state.hash_width, rho);
}

namespace {

sim::CopySupply make_copies(const MatchStateSpec &st,
                            const MatchOptions &options) {
    return sim::CopySupply(
        [&st, &options] {
            return sim::make_register(st.copy, options.backend, options.report,
                                      options.fault);
        },
        st.copies);
}

void verify(const MatchInstance &inst, const OracleSpec &oracle,
            MatchResult &r, bool accepted) {
    r.hash_verified = oracle.targets(r.measured_index);
    const std::size_t d = r.measured_index + 1;
    r.hit = r.measured_index < inst.windows() && inst.occurs_at(d);
    r.exactly_verified = accepted && r.hash_verified && r.hit;
    if (r.exactly_verified) {
        r.position = d;
    }
}

} // namespace

MatchResult match_unique(const MatchInstance &inst, const HashParams &params,
                         Rng &rng, const MatchOptions &options) {
    const auto st = prepare_match_state(inst, params);
    const auto oracle = equality_oracle(st);
    const std::uint64_t padded = std::uint64_t{1} << st.copy.index_width;
    const std::uint64_t iterations = optimal_iterations(padded, 1);

    MatchResult r;
    r.params = params;
    r.rho = majority_for(oracle, iterations);
    auto st_one = st;
    st_one.copies = 1;
    r.ledger.qubits_total = match_layout_qubits(st_one, r.rho);
    auto copies = make_copies(st_one, options);
    auto reg = copies.take();
    const auto run = grover_run(*reg, oracle, iterations, rng, r.ledger, r.rho);
    r.copies_used = copies.used();
    r.grover_iterations = run.iterations;
    r.measured_index = run.found_index;
    r.target_probability = run.target_probability;
    verify(inst, oracle, r, true);
    return r;
}

MatchResult match_search(const MatchInstance &inst, const HashParams &params,
                         Rng &rng, const MatchOptions &options) {
    const auto st = prepare_match_state(inst, params);
    const auto oracle = equality_oracle(st);
    const std::uint64_t padded = std::uint64_t{1} << st.copy.index_width;
    const auto schedule = bbht_schedule(padded);
    const std::size_t reps = std::min<std::size_t>(schedule.size(), st.copies);

    MatchResult r;
    r.params = params;
    r.rho = majority_for(oracle, schedule[reps - 1]);
    r.ledger.qubits_total = match_layout_qubits(st, r.rho);
    auto copies = make_copies(st, options);
    const auto run = bbht_search(oracle, copies, rng, r.ledger, reps);
    r.copies_used = copies.used();
    r.grover_iterations = run.iterations;
    r.measured_index = run.found_index;
    r.target_probability = run.target_probability;
    verify(inst, oracle, r, run.found);
    return r;
}

MatchResult run_match(const MatchInstance &inst, double epsilon, Rng &rng,
                      bool unique, const MatchOptions &options) {
    const auto params = choose_prime(rng, inst.windows(), inst.m(), epsilon);
    return unique ? match_unique(inst, params, rng, options)
                  : match_search(inst, params, rng, options);
}

} // namespace qstrings
