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
#include "qstrings/qcompare.hpp"

#include <algorithm>
#include <stdexcept>

#include "qstrings/grover.hpp"
#include "qstrings/inner_search.hpp"

namespace qstrings {

int comp_pairs(int q, std::uint64_t i, int q2, std::uint64_t i2) {
    return (q < q2 || (q == q2 && i < i2)) ? 1 : 0;
}

std::vector<std::uint64_t> access_element(sim::SearchRegister &reg,
                                          std::uint64_t i, std::uint64_t k,
                                          ResourceLedger &ledger) {
    if (i >= reg.padded_size()) {
        throw std::out_of_range("element index outside the register");
    }
    ledger.charge(ChargeKind::Access, ceil_log2(k));
    return reg.read(i);
}

namespace {

std::uint64_t min_length(const BitString &u, const BitString &v) {
    const std::uint64_t k = std::min(u.size(), v.size());
    if (k == 0) {
        throw std::invalid_argument("comparison needs non-empty strings");
    }
    return k;
}

int length_verdict(const BitString &u, const BitString &v) {
    if (u.size() == v.size()) {
        return 0;
    }
    return u.size() < v.size() ? -1 : 1;
}

/// Table of symbol x_{a+1} for a < k, 0 on padding.
std::vector<std::uint64_t> symbol_table(const BitString &x, std::uint64_t k,
                                        unsigned width) {
    std::vector<std::uint64_t> t(std::uint64_t{1} << width, 0);
    for (std::uint64_t a = 0; a < k; ++a) {
        t[a] = x.bits()[a];
    }
    return t;
}

} // namespace

CompareResult compare_grover(const BitString &u, const BitString &v, Rng &rng,
                             const CompareOptions &options) {
    const std::uint64_t k = min_length(u, v);
    const unsigned q = ceil_log2(k);
    const std::uint64_t c = std::max(1U, q);

    sim::RegisterSpec pair;
    pair.index_width = q;
    pair.domain_size = k;
    pair.data.push_back({"u", 1, symbol_table(u, k, q)});
    pair.data.push_back({"v", 1, symbol_table(v, k, q)});

    CompareResult r;
    r.ledger.qubits_total = (1 + 3 * c * c) * (pair.total_width() - 1) + 1 +
                            ceil_log2(k + 1) + 2;

    // phi of a threshold: 1 - g'(y) for real indices, 1 for the sentinel k
    const auto bits_u = u.bits();
    const auto bits_v = v.bits();
    const auto phi = [&](std::uint64_t y) {
        return y < k ? static_cast<int>(bits_u[y] == bits_v[y]) : 1;
    };

    MinimumSpec spec;
    spec.domain_size = k;
    spec.initial_threshold = k;
    spec.max_phases = 3 * c;
    spec.repetitions_per_phase = c;
    spec.evaluation_cost = 2;
    spec.precedes = [&](std::uint64_t j, std::uint64_t y) {
        return j < k && comp_pairs(phi(j), j, phi(y), y) == 1;
    };
    spec.register_mark = [&](std::uint64_t y) -> sim::MarkFn {
        const int phi_y = phi(y);
        return [k, phi_y, y](std::uint64_t j,
                             std::span<const std::uint64_t> data) {
            const int phi_j = data[0] == data[1] ? 1 : 0;
            return j < k && comp_pairs(phi_j, j, phi_y, y) == 1;
        };
    };

    const auto factory = [&] {
        return sim::make_register(pair, options.backend, options.report,
                                  options.fault);
    };
    sim::CopySupply copies(factory, 3 * c * c);
    const auto best = durr_hoyer_min(spec, copies, rng, r.ledger);
    r.phases = best.phases;
    r.grover_iterations = best.iterations;
    r.copies_used = copies.used();

    auto xi = factory();
    if (best.index < k && phi(best.index) == 0) {
        const auto sym = access_element(*xi, best.index, k, r.ledger);
        r.a0 = best.index;
        r.verdict = sym[0] < sym[1] ? -1 : 1;
    } else {
        r.a0 = k;
        r.verdict = length_verdict(u, v);
    }
    return r;
}

unsigned bsearch_majority(std::uint64_t k, unsigned hash_width) {
    const double e = inner_search_model(hash_width).declared_error;
    const double budget = 1.0 / (10.0 * std::max(1U, ceil_log2(k)));
    return choose_majority(e, budget);
}

CompareResult compare_bsearch(const BitString &u, const BitString &v,
                              const HashParams &params, Rng &rng,
                              const CompareOptions &options) {
    const std::uint64_t k = min_length(u, v);
    const unsigned q = ceil_log2(k);
    const std::uint64_t c = std::max(1U, q);
    const unsigned w = params.register_width();
    const unsigned rho = bsearch_majority(k, w);
    const std::uint64_t padded = std::uint64_t{1} << q;

    sim::RegisterSpec phi;
    phi.index_width = q;
    phi.domain_size = k;
    phi.data.push_back({"u", 1, symbol_table(u, k, q)});

    sim::RegisterSpec hashes;
    hashes.index_width = q;
    hashes.domain_size = k;
    {
        const auto hu = prefix_hashes(u, params.p);
        const auto hv = prefix_hashes(v, params.p);
        std::vector<std::uint64_t> tu(padded, 0);
        std::vector<std::uint64_t> tv(padded, 0);
        for (std::uint64_t a = 0; a < k; ++a) {
            tu[a] = hu[a + 1].residue;
            tv[a] = hv[a + 1].residue;
        }
        hashes.data.push_back({"hu", w, std::move(tu)});
        hashes.data.push_back({"hv", w, std::move(tv)});
    }

    CompareResult r;
    r.ledger.qubits_total = (phi.total_width() - 1) +
                            c * (hashes.total_width() - 1) +
                            inner_ancillas(w, rho);

    sim::CopySupply copies(
        [&] {
            return sim::make_register(hashes, options.backend, options.report,
                                      options.fault);
        },
        c);
    const auto bits_u = u.bits();
    const auto bits_v = v.bits();
    const auto prefix_equal = [&](std::size_t len) {
        r.ledger.begin_phase("bsearch-" + std::to_string(r.hash_comparisons));
        auto reg = copies.take();
        const auto pair = access_element(*reg, len - 1, k, r.ledger);
        r.ledger.charge(ChargeKind::HashEval, 1);
        const bool equal =
            inner_equal_majority(pair[0], pair[1], w, rho, rng, r.ledger);
        ++r.hash_comparisons;
        const bool truly_equal = pair[0] == pair[1];
        r.inner_all_correct = r.inner_all_correct && equal == truly_equal;
        if (truly_equal && !std::equal(bits_u.begin(), bits_u.begin() + len,
                                       bits_v.begin())) {
            r.hash_collision = true;
        }
        return equal;
    };
    const auto lcp = bsearch_lcp(k, q, prefix_equal);
    r.phases = lcp.comparisons;
    r.ambiguous = lcp.ambiguous;
    r.copies_used = copies.used();
    r.a0 = lcp.lcp;

    if (lcp.lcp < k) {
        const auto reg = sim::make_register(phi, options.backend,
                                            options.report, options.fault);
        const auto sym = access_element(*reg, lcp.lcp, k, r.ledger);
        r.verdict = sym[0] == 0 ? -1 : 1;
    } else if (lcp.ambiguous) {
        // lcp is k-1 or k: read position k-1 of both strings, the v symbol
        // from a same-width copy prepared after the u copy is consumed
        auto phi_v = phi;
        phi_v.data[0] = {"v", 1, symbol_table(v, k, q)};
        const auto su = access_element(
            *sim::make_register(phi, options.backend, options.report,
                                options.fault),
            k - 1, k, r.ledger);
        const auto sv = access_element(
            *sim::make_register(phi_v, options.backend, options.report,
                                options.fault),
            k - 1, k, r.ledger);
        if (su[0] != sv[0]) {
            r.a0 = k - 1;
            r.verdict = su[0] == 0 ? -1 : 1;
        } else {
            r.verdict = length_verdict(u, v);
        }
    } else {
        r.verdict = length_verdict(u, v);
    }
    return r;
}

CompareResult run_compare_bsearch(const BitString &u, const BitString &v,
                                  double epsilon, Rng &rng,
                                  const CompareOptions &options) {
    const std::uint64_t k = min_length(u, v);
    const auto params = choose_prime(rng, k, k, epsilon);
    return compare_bsearch(u, v, params, rng, options);
}

} // namespace qstrings
