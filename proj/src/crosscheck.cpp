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
#include "qstrings/crosscheck.hpp"

#include <functional>
#include <ostream>

#include "qstrings/instances.hpp"
#include "qstrings/qcompare.hpp"
#include "qstrings/qmatch.hpp"
#include "qstrings/sweep.hpp"

namespace qstrings {

namespace {

bool same_ledger(const ResourceLedger &a, const ResourceLedger &b) {
    return a.qubits_total == b.qubits_total &&
           a.diffusion_units == b.diffusion_units &&
           a.oracle_queries == b.oracle_queries &&
           a.inner_grover_iterations == b.inner_grover_iterations &&
           a.access_units == b.access_units &&
           a.hash_eval_units == b.hash_eval_units &&
           a.grover_iterations == b.grover_iterations &&
           a.phases.size() == b.phases.size();
}

/// Outcome of one run, reduced to what must agree across backends.
struct Summary {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    ResourceLedger ledger;
};

using Runner = std::function<Summary(sim::Backend, sim::LockstepReport *,
                                     double fault)>;

struct Case {
    std::string name;
    unsigned width;
    Runner run;
};

Case match_case(const std::string &name, MatchInstance inst, bool unique,
                std::uint64_t seed) {
    Rng draw(seed);
    const auto params = choose_prime(draw, inst.windows(), inst.m(),
                                     kCrosscheckEpsilon);
    const auto st = prepare_match_state(inst, params);
    const unsigned width = st.copy.total_width();
    return {name, width,
            [inst = std::move(inst), params, unique,
             seed](sim::Backend backend, sim::LockstepReport *report,
                   double fault) {
                Rng rng(derive_seed(seed, {1}));
                MatchOptions opts{backend, report, fault};
                auto r = unique ? match_unique(inst, params, rng, opts)
                                : match_search(inst, params, rng, opts);
                return Summary{r.measured_index, r.position.value_or(0),
                               std::move(r.ledger)};
            }};
}

Case compare_case(const std::string &name, BitString u, BitString v,
                  bool bsearch, std::uint64_t seed) {
    const std::uint64_t k = std::min(u.size(), v.size());
    Rng draw(seed);
    const auto params = choose_prime(draw, k, k, kCrosscheckEpsilon);
    const unsigned q = ceil_log2(k);
    const unsigned width =
        bsearch ? q + 2 * params.register_width() + 1 : q + 3;
    return {name, width,
            [u = std::move(u), v = std::move(v), params, bsearch,
             seed](sim::Backend backend, sim::LockstepReport *report,
                   double fault) {
                Rng rng(derive_seed(seed, {1}));
                CompareOptions opts{backend, report, fault};
                auto r = bsearch ? compare_bsearch(u, v, params, rng, opts)
                                 : compare_grover(u, v, rng, opts);
                return Summary{static_cast<std::uint64_t>(r.verdict + 1), r.a0,
                               std::move(r.ledger)};
            }};
}

std::vector<Case> battery(std::uint64_t seed) {
    std::vector<Case> cases;
    std::uint64_t id = 0;
    const auto next_seed = [&] { return derive_seed(seed, {id++}); };

    const std::vector<std::pair<std::size_t, std::size_t>> unique_sizes = {
        {4, 1}, {6, 2}, {8, 3}, {8, 2}, {5, 3}, {7, 1}};
    for (const auto &[n, m] : unique_sizes) {
        const auto s = next_seed();
        Rng rng(s);
        cases.push_back(match_case(
            "match_unique n=" + std::to_string(n) + " m=" + std::to_string(m),
            random_planted_instance(n, m, 1, rng), true, s));
    }
    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>
        search_sizes = {{6, 3, 1}, {8, 2, 0}, {8, 3, 2},
                        {7, 2, 1}, {4, 4, 1}, {8, 1, 3}};
    for (const auto &[n, m, occ] : search_sizes) {
        const auto s = next_seed();
        Rng rng(s);
        cases.push_back(match_case(
            "match_search n=" + std::to_string(n) + " m=" + std::to_string(m) +
                " occurrences=" + std::to_string(occ),
            random_planted_instance(n, m, occ, rng), false, s));
    }
    const std::vector<std::size_t> ks = {1, 2, 3, 5, 8, 8};
    for (const bool bsearch : {false, true}) {
        for (std::size_t i = 0; i < ks.size(); ++i) {
            const auto s = next_seed();
            Rng rng(s);
            auto [u, v] = random_pair_of_length(ks[i], rng);
            if (i + 1 == ks.size()) {
                v = u;
            }
            cases.push_back(compare_case(
                std::string(bsearch ? "compare_bsearch" : "compare_grover") +
                    " k=" + std::to_string(ks[i]) +
                    (i + 1 == ks.size() ? " equal" : ""),
                std::move(u), std::move(v), bsearch, s));
        }
    }
    {
        const auto s = next_seed();
        cases.push_back(compare_case("compare_grover unequal lengths",
                                     BitString{1, 0, 1}, BitString{1, 0, 1, 1},
                                     false, s));
    }
    return cases;
}

} // namespace

bool CrosscheckReport::passed() const {
    for (const auto &c : cases) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

CrosscheckReport run_crosscheck(unsigned max_width, std::uint64_t seed,
                                bool inject_fault) {
    if (max_width > sim::kDenseQubitCap) {
        throw std::invalid_argument("max width above the dense cap of " +
                                    std::to_string(sim::kDenseQubitCap));
    }
    CrosscheckReport report;
    bool first = true;
    for (auto &c : battery(seed)) {
        CrosscheckCase out;
        out.name = c.name;
        out.width = c.width;
        if (c.width > max_width) {
            out.skipped = true;
            report.cases.push_back(out);
            continue;
        }
        sim::LockstepReport lock;
        const double fault = inject_fault && first ? 1e-3 : 0.0;
        first = false;
        const auto both = c.run(sim::Backend::Lockstep, &lock, fault);
        const auto structured = c.run(sim::Backend::Structured, nullptr, 0.0);
        const auto dense = c.run(sim::Backend::Dense, nullptr, 0.0);
        out.steps = lock.steps;
        out.max_deviation = lock.max_deviation;
        out.mismatch_basis = lock.first_mismatch;
        out.ledgers_equal =
            same_ledger(structured.ledger, dense.ledger) &&
            same_ledger(structured.ledger, both.ledger) &&
            structured.a == dense.a && structured.b == dense.b &&
            structured.a == both.a && structured.b == both.b;
        out.passed = !lock.first_mismatch &&
                     lock.max_deviation < sim::LockstepRegister::kTolerance &&
                     out.ledgers_equal;
        report.cases.push_back(out);
    }
    return report;
}

void write_crosscheck_report(std::ostream &out,
                             const CrosscheckReport &report) {
    std::size_t passed = 0;
    std::size_t skipped = 0;
    for (const auto &c : report.cases) {
        if (c.skipped) {
            ++skipped;
            out << "SKIP " << c.name << " width=" << c.width
                << " exceeds --max-width\n";
            continue;
        }
        passed += c.passed ? 1 : 0;
        out << (c.passed ? "ok   " : "FAIL ") << c.name << " width=" << c.width
            << " steps=" << c.steps
            << " max_deviation=" << format_number(c.max_deviation)
            << " ledgers=" << (c.ledgers_equal ? "equal" : "DIFFER");
        if (c.mismatch_basis) {
            out << " first_mismatch_basis=" << *c.mismatch_basis;
        }
        out << '\n';
    }
    out << passed << '/' << (report.cases.size() - skipped) << " cases passed";
    if (skipped != 0) {
        out << ", " << skipped << " skipped";
    }
    out << '\n';
}

} // namespace qstrings
