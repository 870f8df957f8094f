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
#include "qstrings/inner_search.hpp"

#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "qstrings/fingerprint.hpp"
#include "qstrings/grover.hpp"
#include "qstrings/sim/structured_state.hpp"

namespace qstrings {

namespace {

sim::RegisterSpec bit_positions(unsigned hash_width) {
    sim::RegisterSpec spec;
    spec.index_width = ceil_log2(hash_width);
    spec.domain_size = hash_width;
    return spec;
}

/// Success probability of one repetition with t of L positions marked.
double repetition_success(unsigned hash_width, unsigned t,
                          std::uint64_t iterations) {
    const auto spec = bit_positions(hash_width);
    sim::StructuredState st(spec.layout(), "idx", spec.domain_size);
    const auto marked = [t](std::uint64_t i) { return i < t; };
    for (std::uint64_t it = 0; it < iterations; ++it) {
        st.phase_oracle(marked);
        st.diffusion();
    }
    const auto p = st.probabilities();
    double s = 0.0;
    for (unsigned i = 0; i < t; ++i) {
        s += p[i];
    }
    return s;
}

InnerSearchModel build_model(unsigned hash_width) {
    InnerSearchModel m;
    m.hash_width = hash_width;
    m.index_width = ceil_log2(hash_width);
    m.schedule = {0};
    for (const auto it : bbht_schedule(std::uint64_t{1} << m.index_width)) {
        m.schedule.push_back(it);
    }
    for (const auto it : m.schedule) {
        m.iterations_per_run += it;
        m.cost_per_run += it * (m.index_width + 1) + 1;
    }
    m.miss.assign(hash_width + 1, 1.0);
    for (unsigned t = 1; t <= hash_width; ++t) {
        double miss = 1.0;
        for (const auto it : m.schedule) {
            miss *= 1.0 - repetition_success(hash_width, t, it);
        }
        m.miss[t] = std::max(0.0, miss);
        m.declared_error = std::max(m.declared_error, m.miss[t]);
    }
    return m;
}

} // namespace

const InnerSearchModel &inner_search_model(unsigned hash_width) {
    if (hash_width == 0 || hash_width > 64) {
        throw std::invalid_argument("hash width must lie in [1, 64]");
    }
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<InnerSearchModel>> cache;
    std::scoped_lock lock(mutex);
    auto &slot = cache[hash_width];
    if (!slot) {
        slot = std::make_unique<InnerSearchModel>(build_model(hash_width));
    }
    return *slot;
}

InnerRun run_inner_equality(std::uint64_t a, std::uint64_t b,
                            unsigned hash_width, Rng &rng) {
    const auto &model = inner_search_model(hash_width);
    const std::uint64_t diff = a ^ b;
    OracleSpec oracle;
    oracle.domain_size = hash_width;
    oracle.predicate = [diff](std::uint64_t j) {
        return ((diff >> j) & 1U) != 0;
    };
    const auto spec = bit_positions(hash_width);
    ResourceLedger scratch;
    InnerRun out;
    for (const auto iterations : model.schedule) {
        sim::StructuredRegister reg(spec);
        const auto run = grover_run(reg, oracle, iterations, rng, scratch);
        out.iterations += iterations;
        if (run.predicate_value) {
            out.equal = false;
            break;
        }
    }
    return out;
}

bool inner_equal_majority(std::uint64_t a, std::uint64_t b,
                          unsigned hash_width, unsigned rho, Rng &rng,
                          ResourceLedger &ledger) {
    const auto &model = inner_search_model(hash_width);
    unsigned equal_votes = 0;
    for (unsigned r = 0; r < rho; ++r) {
        if (run_inner_equality(a, b, hash_width, rng).equal) {
            ++equal_votes;
        }
    }
    ledger.charge(ChargeKind::OracleQuery, rho * model.cost_per_run);
    ledger.charge(ChargeKind::InnerGroverIteration,
                  rho * model.iterations_per_run);
    return 2 * equal_votes > rho;
}

} // namespace qstrings
