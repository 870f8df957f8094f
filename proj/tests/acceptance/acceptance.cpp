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
// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qstrings/bitstring.hpp"
#include "qstrings/crosscheck.hpp"
#include "qstrings/fingerprint.hpp"
#include "qstrings/grover.hpp"
#include "qstrings/instances.hpp"
#include "qstrings/qcompare.hpp"
#include "qstrings/qmatch.hpp"
#include "qstrings/resources.hpp"
#include "qstrings/rng.hpp"
#include "qstrings/sim/search_register.hpp"
#include "qstrings/sweep.hpp"

using namespace qstrings;

namespace {

constexpr std::uint64_t kMasterSeed = 20260101;

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void check(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

unsigned jobs() {
#ifdef _OPENMP
    return static_cast<unsigned>(std::max(1, omp_get_max_threads()));
#else
    return 1;
#endif
}

std::uint64_t trial_seed(std::uint64_t criterion, std::uint64_t a,
                         std::uint64_t b = 0) {
    return derive_seed(kMasterSeed, {criterion, a, b});
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

double sqrt_fit(const std::vector<double> &x, const std::vector<double> &y,
                double *worst) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += y[i] * std::sqrt(x[i]);
        den += x[i];
    }
    const double c = num / den;
    *worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        *worst = std::max(*worst, std::abs(y[i] / (c * std::sqrt(x[i])) - 1.0));
    }
    return c;
}

double slope(const std::vector<double> &x, const std::vector<double> &y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// 1: amplitude-level Grover success against sin^2((2j+1) theta)
Verdict grover_exactness() {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    double m4 = 0.0;
    Rng rng(trial_seed(1, 0));
    for (std::uint64_t m : {4U, 8U, 16U, 32U, 64U}) {
        sim::RegisterSpec spec;
        spec.index_width = ceil_log2(m);
        spec.domain_size = m;
        for (std::uint64_t t = 1; t <= 4; ++t) {
            OracleSpec oracle;
            oracle.domain_size = m;
            oracle.predicate = [t, m](std::uint64_t i) {
                return (i * 7 + 3) % m < t;
            };
            const double theta = std::asin(std::sqrt(double(t) / double(m)));
            for (std::uint64_t j = 0; j <= 10; ++j) {
                sim::DenseRegister reg(spec);
                ResourceLedger ledger;
                const auto out = grover_run(reg, oracle, j, rng, ledger);
                const double expect =
                    std::pow(std::sin((2.0 * double(j) + 1.0) * theta), 2);
                worst = std::max(worst, std::abs(out.target_probability - expect));
                if (m == 4 && t == 1 && j == 1) {
                    m4 = out.target_probability;
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    v.detail << "M=4,t=1,j=1 success=" << m4 << "; max |p - sin^2| over 220 "
             << "cases=" << worst << "; " << elapsed << " s";
    v.check(std::abs(m4 - 1.0) <= 1e-9, "M=4 success 1");
    v.check(worst <= 1e-9, "closed form within 1e-9");
    v.check(elapsed < 10.0, "runtime < 10 s");
    return v;
}

// 2: dense and structured backends agree on the crosscheck battery
Verdict backend_equivalence() {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    const auto report = run_crosscheck(24, 1);
    const double elapsed = seconds_since(start);
    double worst = 0.0;
    std::set<std::string> kinds;
    std::size_t run = 0;
    for (const auto &c : report.cases) {
        if (c.skipped) {
            continue;
        }
        ++run;
        worst = std::max(worst, c.max_deviation);
        kinds.insert(c.name.substr(0, c.name.find(' ')));
    }
    v.detail << run << " cases, " << kinds.size()
             << " algorithms, max deviation " << worst << "; " << elapsed
             << " s";
    v.check(report.passed(), "all cases pass");
    v.check(run >= 20, ">= 20 cases");
    v.check(kinds.size() == 4, "all four algorithms covered");
    v.check(worst < 1e-9, "deviation < 1e-9");
    v.check(elapsed < 120.0, "runtime < 2 min");
    return v;
}

// 3: single-occurrence matching, pre-verification hit rate and soundness
Verdict matching_success() {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    constexpr int kTrials = 1000;
    int hits = 0;
    int returned = 0;
    int unsound = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : hits, returned, unsound)
    for (int t = 0; t < kTrials; ++t) {
        Rng rng(trial_seed(3, std::uint64_t(t)));
        const auto inst = random_planted_instance(32, 4, 1, rng);
        const auto r = run_match(inst, 0.1, rng, true);
        hits += r.hit ? 1 : 0;
        if (r.position) {
            ++returned;
            unsound += inst.occurs_at(*r.position) ? 0 : 1;
        }
    }
    const double elapsed = seconds_since(start);
    const double rate = hits / double(kTrials);
    v.detail << "hit rate " << rate << " (bound 0.5*0.9-0.05=0.40), "
             << returned << " returned, " << unsound << " unsound; "
             << elapsed << " s";
    v.check(rate >= 0.45 - 0.05, "hit rate");
    v.check(unsound == 0, "soundness");
    v.check(elapsed < 300.0, "runtime < 5 min");
    return v;
}

// 4: three occurrences, n=64, doubling schedule over fresh copies
Verdict multi_target() {
    Verdict v;
    constexpr int kTrials = 1000;
    constexpr std::size_t kN = 64;
    constexpr std::size_t kM = 4;
    const unsigned copy_cap = ceil_log2(kN - kM + 1);
    int hits = 0;
    int over = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : hits, over)
    for (int t = 0; t < kTrials; ++t) {
        Rng rng(trial_seed(4, std::uint64_t(t)));
        const auto inst = random_planted_instance(kN, kM, 3, rng);
        const auto r = run_match(inst, 0.1, rng, false);
        hits += r.position && inst.occurs_at(*r.position) ? 1 : 0;
        over += r.copies_used > copy_cap ? 1 : 0;
    }
    const double rate = hits / double(kTrials);
    v.detail << "verified-hit rate " << rate << ", copy cap " << copy_cap
             << " exceeded in " << over << " trials";
    v.check(rate >= 0.45, "verified-hit rate");
    v.check(over == 0, "copies <= ceil(log2 N)");
    return v;
}

// 5: fingerprint collisions over fresh primes
Verdict fingerprint_soundness() {
    Verdict v;
    constexpr int kTrials = 1000;
    int collisions = 0;
    int equal_apart = 0;
    Rng rng(trial_seed(5, 0));
    for (int t = 0; t < kTrials; ++t) {
        const auto len = rng.uniform_int(1, 16);
        const auto u = random_bits(len, rng);
        auto w = random_bits(len, rng);
        while (w == u) {
            w = random_bits(len, rng);
        }
        const auto params = choose_prime(rng, 1, 16, 0.25);
        collisions += rolling_hash(u, params.p) == rolling_hash(w, params.p);
        equal_apart += rolling_hash(u, params.p) == rolling_hash(u, params.p) ? 0 : 1;
    }
    const double rate = collisions / double(kTrials);
    v.detail << "collision rate " << rate << " over " << kTrials
             << " unequal pairs, equal pairs apart " << equal_apart;
    v.check(rate <= 0.25, "collision rate <= eps");
    v.check(equal_apart == 0, "equal strings collide");
    return v;
}

// 6: comparator agreement and the bsearch comparison count
Verdict comparators() {
    Verdict v;
    constexpr int kTrials = 1000;
    int agree_b = 0;
    int agree_g = 0;
    int bad_count = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : agree_b, agree_g, bad_count)
    for (int t = 0; t < kTrials; ++t) {
        Rng rng(trial_seed(6, std::uint64_t(t)));
        const auto [u, w] = random_pair(64, rng);
        const int truth = compare_classical(u, w);
        const std::size_t k = std::min(u.size(), w.size());
        const auto b = run_compare_bsearch(u, w, 0.1, rng);
        agree_b += b.verdict == truth ? 1 : 0;
        bad_count += b.hash_comparisons == ceil_log2(k) ? 0 : 1;
        agree_g += compare_grover(u, w, rng).verdict == truth ? 1 : 0;
    }
    const double rb = agree_b / double(kTrials);
    const double rg = agree_g / double(kTrials);
    v.detail << "bsearch agreement " << rb << " (>= 0.8), grover agreement "
             << rg << " (>= 0.5), runs with comparison count != ceil(log2 k): "
             << bad_count;
    v.check(rb >= 1.0 - 0.1 - 0.1, "bsearch agreement");
    v.check(rg >= 0.5, "grover agreement");
    v.check(bad_count == 0, "comparison count");
    return v;
}

std::vector<std::uint64_t> powers(unsigned lo, unsigned hi) {
    std::vector<std::uint64_t> out;
    for (unsigned e = lo; e <= hi; ++e) {
        out.push_back(std::uint64_t{1} << e);
    }
    return out;
}

// 7: ledger qubits equal the closed forms; growth ratios
Verdict memory_claims() {
    Verdict v;
    struct Grid {
        SweepAlgo algo;
        std::vector<std::uint64_t> sizes;
    };
    const std::vector<Grid> grids{
        {SweepAlgo::Match, powers(6, 12)},
        {SweepAlgo::MatchUnique, powers(6, 12)},
        {SweepAlgo::CompareGrover, powers(3, 8)},
        {SweepAlgo::CompareBsearch, powers(3, 12)},
    };
    std::size_t points = 0;
    std::size_t mismatched = 0;
    for (const auto &g : grids) {
        SweepConfig config;
        config.algo = g.algo;
        config.sizes = g.sizes;
        config.m = 8;
        config.trials = 2;
        config.seed = trial_seed(7, 0);
        config.jobs = jobs();
        for (const auto &row : run_sweep(config)) {
            ++points;
            mismatched += row.qubits_consistent ? 0 : 1;
        }
    }

    // count(n^2) / count(n) against the ratio of the leading terms
    const double m = 8;
    const auto lead_match = [m](double n) {
        return std::log2(n) * std::log2(n) + std::log2(n) * std::log2(m);
    };
    const double match_ratio = double(qubit_count_match(4096, 8, 0.1)) /
                               double(qubit_count_match(64, 8, 0.1));
    const double match_model = lead_match(4096) / lead_match(64);
    const double match_dev = std::abs(match_ratio / match_model - 1.0);

    const double bs_ratio = double(qubit_count_compare_bsearch(4096, 0.1)) /
                            double(qubit_count_compare_bsearch(64, 0.1));
    const double bs_dev = std::abs(bs_ratio / 4.0 - 1.0);

    v.detail << points << " sweep points, " << mismatched
             << " off the formula; matching count(4096)/count(64)="
             << match_ratio << " vs leading-term ratio " << match_model
             << " (dev " << match_dev << "); bsearch count(4096)/count(64)="
             << bs_ratio << " vs 4 (dev " << bs_dev << ")";
    v.check(mismatched == 0, "ledger equals formula");
    v.check(match_dev <= 0.2, "matching growth ratio");
    v.check(bs_dev <= 0.2, "bsearch growth ratio");
    return v;
}

// 8: gate-unit and iteration scaling from sweeps
Verdict time_claims() {
    Verdict v;
    SweepConfig match;
    match.algo = SweepAlgo::Match;
    match.sizes = powers(6, 12);
    match.m = 8;
    match.trials = 200;
    match.seed = trial_seed(8, 0);
    match.jobs = jobs();
    const auto mrows = run_sweep(match);
    std::vector<double> x;
    std::vector<double> y;
    for (const auto &r : mrows) {
        x.push_back(double(r.size));
        y.push_back(r.gate_units_total);
    }
    const double match_slope = slope(x, y);

    SweepConfig grover = match;
    grover.algo = SweepAlgo::CompareGrover;
    grover.sizes = powers(3, 8);
    grover.seed = trial_seed(8, 1);
    const auto grows = run_sweep(grover);
    std::vector<double> k;
    std::vector<double> iters;
    for (const auto &r : grows) {
        k.push_back(double(r.size));
        iters.push_back(r.grover_iterations);
    }
    double grover_dev = 0.0;
    const double c = sqrt_fit(k, iters, &grover_dev);

    SweepConfig bs = match;
    bs.algo = SweepAlgo::CompareBsearch;
    bs.sizes = powers(3, 12);
    bs.seed = trial_seed(8, 2);
    const auto brows = run_sweep(bs);
    double worst_factor = 0.0;
    for (std::size_t i = 0; i + 2 < brows.size(); ++i) {
        worst_factor = std::max(worst_factor, brows[i + 2].gate_units_total /
                                                  brows[i].gate_units_total);
    }

    v.detail << "matching gate-unit slope " << match_slope
             << " (target [0.4,0.6]); compare_grover iterations c=" << c
             << " max deviation " << grover_dev
             << "; compare_bsearch worst factor per 4x k " << worst_factor;
    v.check(match_slope >= 0.4 && match_slope <= 0.6, "matching slope");
    v.check(grover_dev <= 0.25, "compare_grover c stable");
    v.check(worst_factor < 3.0, "compare_bsearch factor < 3");
    return v;
}

// 9: minimum finding over all small permutations and iteration scaling
Verdict durr_hoyer() {
    Verdict v;
    double worst_rate = 1.0;
    std::size_t perms = 0;
    for (std::size_t size = 3; size <= 5; ++size) {
        std::vector<std::uint64_t> values(size);
        std::iota(values.begin(), values.end(), 0);
        do {
            const auto best = static_cast<std::uint64_t>(
                std::find(values.begin(), values.end(), 0) - values.begin());
            int hits = 0;
            constexpr int kTrials = 200;
            for (int t = 0; t < kTrials; ++t) {
                Rng rng(trial_seed(9, perms, std::uint64_t(t)));
                ResourceLedger ledger;
                hits += find_minimum(values, sim::Backend::Structured, rng,
                                     ledger)
                                .index == best
                            ? 1
                            : 0;
            }
            worst_rate = std::min(worst_rate, hits / double(kTrials));
            ++perms;
        } while (std::next_permutation(values.begin(), values.end()));
    }

    std::vector<double> sizes;
    std::vector<double> means;
    std::vector<double> maxima;
    for (std::uint64_t m : powers(3, 8)) {
        constexpr int kTrials = 200;
        double total = 0.0;
        double top = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total) reduction(max : top)
        for (int t = 0; t < kTrials; ++t) {
            Rng rng(trial_seed(9, 1000 + m, std::uint64_t(t)));
            std::vector<std::uint64_t> values(m);
            std::iota(values.begin(), values.end(), 0);
            for (std::uint64_t i = m - 1; i > 0; --i) {
                std::swap(values[i], values[rng.uniform_int(0, i)]);
            }
            ResourceLedger ledger;
            const double it = double(
                find_minimum(values, sim::Backend::Structured, rng, ledger)
                    .iterations);
            total += it;
            top = std::max(top, it);
        }
        sizes.push_back(double(m));
        means.push_back(total / kTrials);
        maxima.push_back(top);
    }
    double dev = 0.0;
    const double c = sqrt_fit(sizes, means, &dev);
    bool bounded = true;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        bounded = bounded && maxima[i] <= 3.0 * c * std::sqrt(sizes[i]);
    }
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        v.detail << "M=" << sizes[i] << " mean " << means[i] << " max " << maxima[i] << "; ";
    }
    v.detail << perms << " permutations, lowest argmin rate " << worst_rate
             << "; mean iterations c=" << c << " max deviation " << dev
             << "; every run within 3*c*sqrt(M): " << (bounded ? "yes" : "no");
    v.check(worst_rate >= 0.5, "argmin rate");
    v.check(dev <= 0.25, "c stable");
    v.check(bounded, "iterations <= 3 c sqrt(M)");
    return v;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"grover exactness", grover_exactness},
        {"backend equivalence", backend_equivalence},
        {"matching success bound", matching_success},
        {"multi-target matching", multi_target},
        {"fingerprint soundness", fingerprint_soundness},
        {"comparator correctness", comparators},
        {"memory claims", memory_claims},
        {"time scaling", time_claims},
        {"minimum finding", durr_hoyer},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception &e) {
            v.pass = false;
            v.detail << " exception: " << e.what();
        }
        failures += v.pass ? 0 : 1;
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << i + 1
                  << " (" << criteria[i].first << "): " << v.detail.str()
                  << " [" << seconds_since(start) << " s]" << std::endl;
    }
    std::cout << criteria.size() - failures << "/" << criteria.size()
              << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
