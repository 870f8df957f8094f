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
#include "catch_amalgamated.hpp"

#include <cmath>
#include <set>
#include <vector>

#include "qstrings/bitstring.hpp"
#include "qstrings/fingerprint.hpp"
#include "qstrings/instances.hpp"
#include "qstrings/qmatch.hpp"
#include "qstrings/resources.hpp"
#include "qstrings/rng.hpp"
#include "qstrings/sim/structured_state.hpp"

using namespace qstrings;

namespace {

HashParams params_for(const MatchInstance &inst, double eps, Rng &rng) {
    return choose_prime(rng, inst.windows(), inst.m(), eps);
}

double hit_rate(const MatchInstance &inst, double eps, bool unique,
                std::uint64_t seed, int trials) {
    Rng rng(seed);
    const auto truth = naive_match_all(inst);
    const std::set<std::size_t> occurrences(truth.begin(), truth.end());
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
        const auto r = run_match(inst, eps, rng, unique);
        if (r.position) {
            REQUIRE(occurrences.count(*r.position) == 1);
        }
        hits += r.hit ? 1 : 0;
    }
    return hits / double(trials);
}

} // namespace

TEST_CASE("match state layout", "[qmatch]") {
    const MatchInstance inst(BitString{0, 1, 0, 1, 0, 1}, BitString{0, 1, 0});
    Rng rng(1);
    const auto params = params_for(inst, 0.5, rng);
    const auto st = prepare_match_state(inst, params);
    REQUIRE(st.copy.domain_size == 4);
    REQUIRE(st.copies == 2);
    REQUIRE(st.copy.index_width == 2);
    REQUIRE(st.hash_width == residue_width(params.p_max));
    REQUIRE(st.pattern_hash.residue ==
            rolling_hash(inst.pattern(), params.p).residue);
    const auto &table = st.copy.data.front().table;
    for (std::size_t a = 0; a < inst.windows(); ++a) {
        REQUIRE(table[a] ==
                rolling_hash(inst.text().substring(a + 1, a + 3), params.p).residue);
    }
}

TEST_CASE("padding binds a non-matching sentinel", "[qmatch]") {
    Rng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = rng.uniform_int(3, 40);
        const MatchInstance inst(random_bits(n, rng), random_bits(3, rng));
        const auto params = params_for(inst, 0.1, rng);
        const auto st = prepare_match_state(inst, params);
        const auto &table = st.copy.data.front().table;
        REQUIRE(table.size() == (std::size_t{1} << st.copy.index_width));
        for (std::size_t a = inst.windows(); a < table.size(); ++a) {
            REQUIRE(table[a] != st.pattern_hash.residue);
            REQUIRE(table[a] < (std::uint64_t{1} << st.hash_width));
        }
    }
}

TEST_CASE("one copy expands to the entangled index-hash state",
          "[qmatch][dense]") {
    const MatchInstance inst(BitString{1, 0, 1, 1, 0, 1}, BitString{1, 0, 1});
    const auto params = HashParams::make(13, inst.windows(), inst.m(), 0.9);
    const auto st = prepare_match_state(inst, params);
    sim::StructuredRegister reg(st.copy);
    const auto dense = sim::expand_structured(reg.state());
    const auto layout = st.copy.layout();
    REQUIRE(dense.num_qubits() == 2 + st.hash_width + 1);
    int nonzero = 0;
    for (std::uint64_t b = 0; b < dense.amplitudes().size(); ++b) {
        if (std::abs(dense.amplitudes()[b]) < 1e-12) {
            continue;
        }
        ++nonzero;
        const auto a = layout.at("idx").extract(b);
        REQUIRE(layout.at("hash").extract(b) ==
                rolling_hash(inst.text().substring(a + 1, a + 3), 13).residue);
        REQUIRE(std::abs(dense.amplitudes()[b]) == Catch::Approx(0.5));
    }
    REQUIRE(nonzero == 4);
}

TEST_CASE("equality oracle f", "[qmatch]") {
    const MatchInstance inst(BitString{0, 1, 1, 0, 1, 0, 0, 1},
                             BitString{1, 0, 1});
    Rng rng(3);
    const auto params = params_for(inst, 0.1, rng);
    const auto st = prepare_match_state(inst, params);
    const auto &table = st.copy.data.front().table;
    const auto oracle = equality_oracle(st);
    REQUIRE(oracle.error_prob <= 1.0 / 3.0);
    for (std::uint64_t i = 0; i < inst.windows(); ++i) {
        if (table[i] == st.pattern_hash.residue) {
            for (int t = 0; t < 50; ++t) {
                REQUIRE(equality_oracle_f(st, i, rng));
            }
            REQUIRE(oracle.error_at(i) == 0.0);
        }
    }
    for (std::uint64_t i = inst.windows(); i < table.size(); ++i) {
        REQUIRE_FALSE(equality_oracle_f(st, i, rng));
    }

    // a window whose hash differs from the pattern in every bit
    MatchStateSpec all_diff = st;
    const std::uint64_t full = (std::uint64_t{1} << st.hash_width) - 1;
    all_diff.copy.data.front().table[0] = st.pattern_hash.residue ^ full;
    int zeros = 0;
    for (int t = 0; t < 1000; ++t) {
        zeros += equality_oracle_f(all_diff, 0, rng) ? 0 : 1;
    }
    REQUIRE(zeros / 1000.0 >= 0.5);
}

TEST_CASE("unique matching examples", "[qmatch]") {
    const MatchInstance one(BitString{0, 0, 1, 0}, BitString{1});
    REQUIRE(hit_rate(one, 0.1, true, 4, 1000) >= 0.45);
    Rng rng(5);
    const auto r = run_match(one, 0.1, rng, true);
    if (r.position) {
        REQUIRE(*r.position == 3);
    }

    const MatchInstance same(BitString{1, 0, 1}, BitString{1, 0, 1});
    REQUIRE(hit_rate(same, 0.1, true, 6, 300) >= 0.45);
    const auto s = run_match(same, 0.1, rng, true);
    REQUIRE(s.copies_used == 1);
}

TEST_CASE("unique matching qubit count", "[qmatch][resources]") {
    Rng rng(7);
    for (auto [n, m] : {std::pair{4, 1}, std::pair{16, 4}, std::pair{37, 5},
                        std::pair{5, 5}}) {
        const MatchInstance inst(random_bits(n, rng), random_bits(m, rng));
        const auto r = run_match(inst, 0.1, rng, true);
        const unsigned q = ceil_log2(inst.windows());
        const unsigned w = universe_width(inst.windows(), m, 0.1);
        REQUIRE(r.ledger.qubits_total ==
                q + 2 * w + 1 + inner_ancillas(w, r.rho));
        REQUIRE(r.ledger.qubits_total == qubit_count_match_unique(n, m, 0.1));
    }
}

TEST_CASE("multi-target matching examples", "[qmatch]") {
    const MatchInstance inst(BitString{0, 1, 0, 1, 0, 1}, BitString{0, 1, 0});
    REQUIRE(hit_rate(inst, 0.1, false, 8, 1000) >= 0.45);

    const MatchInstance absent(BitString{0, 0, 0, 0, 0, 0, 0}, BitString{1, 1});
    Rng rng(9);
    for (int t = 0; t < 300; ++t) {
        const auto r = run_match(absent, 0.1, rng, false);
        REQUIRE_FALSE(r.position.has_value());
        REQUIRE(r.copies_used <= ceil_log2(absent.windows()));
    }
}

TEST_CASE("multi-target qubit count", "[qmatch][resources]") {
    Rng rng(10);
    for (auto [n, m] : {std::pair{8, 2}, std::pair{64, 8}, std::pair{300, 6}}) {
        const MatchInstance inst(random_bits(n, rng), random_bits(m, rng));
        const auto r = run_match(inst, 0.1, rng, false);
        const unsigned q = ceil_log2(inst.windows());
        const unsigned w = universe_width(inst.windows(), m, 0.1);
        REQUIRE(r.ledger.qubits_total ==
                w + q * (q + w) + 1 + inner_ancillas(w, r.rho));
        REQUIRE(r.ledger.qubits_total == qubit_count_match(n, m, 0.1));
    }
}

TEST_CASE("returned positions are always true occurrences",
          "[qmatch][property]") {
    Rng rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        const auto n = rng.uniform_int(2, 48);
        const auto m = rng.uniform_int(1, std::min<std::uint64_t>(n, 4));
        const MatchInstance inst(random_bits(n, rng), random_bits(m, rng));
        const auto r = run_match(inst, 0.3, rng, trial % 2 == 0);
        if (r.position) {
            REQUIRE(inst.occurs_at(*r.position));
            REQUIRE(r.exactly_verified);
            REQUIRE(r.hash_verified);
        }
        REQUIRE(r.copies_used <= std::max(1U, ceil_log2(inst.windows())));
    }
}

TEST_CASE("completeness on single-occurrence instances",
          "[qmatch][property]") {
    for (auto [n, m] : {std::pair{16, 2}, std::pair{16, 4}, std::pair{32, 2},
                        std::pair{32, 4}}) {
        Rng rng(derive_seed(12, {std::uint64_t(n), std::uint64_t(m)}));
        int hits = 0;
        constexpr int kTrials = 1000;
        for (int t = 0; t < kTrials; ++t) {
            const auto inst = random_planted_instance(n, m, 1, rng);
            hits += run_match(inst, 0.1, rng, true).hit ? 1 : 0;
        }
        INFO("n=" << n << " m=" << m);
        REQUIRE(hits / double(kTrials) >= 0.5 * 0.9 - 0.05);
    }
}

TEST_CASE("backends give identical runs", "[qmatch][dense]") {
    const MatchInstance inst(BitString{1, 1, 0, 1, 0, 0, 1}, BitString{1, 0});
    for (bool unique : {true, false}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            Rng a(seed);
            Rng b(seed);
            Rng c(seed);
            sim::LockstepReport report;
            const auto s = run_match(inst, 0.9, a, unique);
            const auto d = run_match(inst, 0.9, b, unique,
                                     {sim::Backend::Dense, nullptr, 0.0});
            const auto l = run_match(inst, 0.9, c, unique,
                                     {sim::Backend::Lockstep, &report, 0.0});
            REQUIRE(s.measured_index == d.measured_index);
            REQUIRE(s.measured_index == l.measured_index);
            REQUIRE(s.ledger.gate_units_total() == d.ledger.gate_units_total());
            REQUIRE(s.ledger.oracle_queries == l.ledger.oracle_queries);
            REQUIRE(report.max_deviation < 1e-9);
            REQUIRE_FALSE(report.first_mismatch.has_value());
        }
    }
}

TEST_CASE("match plan", "[qmatch]") {
    const auto plan = plan_match(64, 8, 0.1);
    REQUIRE(plan.windows == 57);
    REQUIRE(plan.index_width == 6);
    REQUIRE(plan.copies == 6);
    REQUIRE(plan.hash_width == universe_width(57, 8, 0.1));
    REQUIRE(plan.schedule == bbht_schedule(64));
    REQUIRE(plan.unique_iterations == optimal_iterations(64, 1));
    REQUIRE(plan_match(5, 5, 0.1).copies == 1);
    REQUIRE_THROWS_AS(plan_match(3, 4, 0.1), std::invalid_argument);
}
