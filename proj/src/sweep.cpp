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
#include "qstrings/sweep.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "qstrings/bitstring.hpp"
#include "qstrings/instances.hpp"
#include "qstrings/qcompare.hpp"
#include "qstrings/qmatch.hpp"

namespace qstrings {

namespace {

constexpr std::array<std::string_view, 4> kAlgoNames = {
    "match", "match_unique", "compare_grover", "compare_bsearch"};

bool is_match(SweepAlgo a) {
    return a == SweepAlgo::Match || a == SweepAlgo::MatchUnique;
}

struct Trial {
    bool success = false;
    ResourceLedger ledger;
};

Trial run_trial(const SweepConfig &cfg, std::uint64_t size,
                std::uint64_t seed) {
    Rng rng(seed);
    Trial t;
    if (is_match(cfg.algo)) {
        const auto inst = random_planted_instance(size, cfg.m, 1, rng);
        MatchOptions opts;
        opts.backend = cfg.backend;
        auto r = run_match(inst, cfg.epsilon, rng,
                           cfg.algo == SweepAlgo::MatchUnique, opts);
        t.success = r.exactly_verified;
        t.ledger = std::move(r.ledger);
        return t;
    }
    const auto [u, v] = random_pair_of_length(size, rng);
    CompareOptions opts;
    opts.backend = cfg.backend;
    auto r = cfg.algo == SweepAlgo::CompareGrover
                 ? compare_grover(u, v, rng, opts)
                 : run_compare_bsearch(u, v, cfg.epsilon, rng, opts);
    t.success = r.verdict == compare_classical(u, v);
    t.ledger = std::move(r.ledger);
    return t;
}

} // namespace

std::string_view to_string(SweepAlgo algo) {
    return kAlgoNames.at(static_cast<std::size_t>(algo));
}

SweepAlgo sweep_algo_from_string(std::string_view name) {
    for (std::size_t i = 0; i < kAlgoNames.size(); ++i) {
        if (kAlgoNames[i] == name) {
            return static_cast<SweepAlgo>(i);
        }
    }
    throw std::invalid_argument("unknown sweep algorithm '" +
                                std::string(name) + "'");
}

void SweepConfig::validate() const {
    if (sizes.empty()) {
        throw std::invalid_argument("sweep grid is empty");
    }
    if (trials == 0) {
        throw std::invalid_argument("sweep needs at least one trial");
    }
    if (jobs == 0) {
        throw std::invalid_argument("jobs must be at least 1");
    }
    for (const auto s : sizes) {
        if (s == 0 || (is_match(algo) && s < m)) {
            throw std::invalid_argument("grid size " + std::to_string(s) +
                                        " is invalid");
        }
    }
}

std::uint64_t formula_qubits(SweepAlgo algo, std::uint64_t size,
                             std::uint64_t m, double epsilon) {
    switch (algo) {
    case SweepAlgo::Match:
        return qubit_count_match(size, m, epsilon);
    case SweepAlgo::MatchUnique:
        return qubit_count_match_unique(size, m, epsilon);
    case SweepAlgo::CompareGrover:
        return qubit_count_compare_grover(size);
    case SweepAlgo::CompareBsearch:
        return qubit_count_compare_bsearch(size, epsilon);
    }
    throw std::invalid_argument("unknown sweep algorithm");
}

std::vector<SweepRow> run_sweep(const SweepConfig &config) {
    config.validate();
    const std::size_t points = config.sizes.size();
    const std::uint64_t trials = config.trials;
    std::vector<Trial> results(points * trials);

    const auto total = static_cast<std::int64_t>(results.size());
    std::string failure;
#pragma omp parallel for schedule(dynamic) num_threads(config.jobs)
    for (std::int64_t idx = 0; idx < total; ++idx) {
        const auto point = static_cast<std::size_t>(idx) / trials;
        const auto trial = static_cast<std::uint64_t>(idx) % trials;
        const auto size = config.sizes[point];
        try {
            results[static_cast<std::size_t>(idx)] = run_trial(
                config, size, derive_seed(config.seed, {size, trial}));
        } catch (const std::exception &e) {
#pragma omp critical
            failure = e.what();
        }
    }
    if (!failure.empty()) {
        throw std::runtime_error(failure);
    }

    std::vector<SweepRow> rows;
    for (std::size_t point = 0; point < points; ++point) {
        SweepRow row;
        row.algo = config.algo;
        row.size = config.sizes[point];
        row.m = is_match(config.algo) ? config.m : 0;
        row.epsilon = config.epsilon;
        row.seed = config.seed;
        row.trials = trials;
        row.formula_qubits =
            formula_qubits(config.algo, row.size, config.m, config.epsilon);
        std::uint64_t successes = 0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            const auto &tr = results[point * trials + t];
            const auto &l = tr.ledger;
            successes += tr.success ? 1 : 0;
            if (t == 0) {
                row.qubits = l.qubits_total;
            } else if (l.qubits_total != row.qubits) {
                row.qubits_consistent = false;
            }
            row.diffusion_units += static_cast<double>(l.diffusion_units);
            row.oracle_queries += static_cast<double>(l.oracle_queries);
            row.inner_grover_iterations +=
                static_cast<double>(l.inner_grover_iterations);
            row.access_units += static_cast<double>(l.access_units);
            row.hash_eval_units += static_cast<double>(l.hash_eval_units);
            row.gate_units_total += static_cast<double>(l.gate_units_total());
            row.grover_iterations += static_cast<double>(l.grover_iterations);
        }
        const auto n = static_cast<double>(trials);
        row.success_rate = static_cast<double>(successes) / n;
        for (double *f :
             {&row.diffusion_units, &row.oracle_queries,
              &row.inner_grover_iterations, &row.access_units,
              &row.hash_eval_units, &row.gate_units_total,
              &row.grover_iterations}) {
            *f /= n;
        }
        rows.push_back(row);
    }
    return rows;
}

double loglog_slope(const std::vector<double> &x,
                    const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("slope needs two or more points");
    }
    double sx = 0;
    double sy = 0;
    double sxx = 0;
    double sxy = 0;
    const auto n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

SqrtFit fit_sqrt(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.empty()) {
        throw std::invalid_argument("fit needs matching non-empty series");
    }
    double num = 0;
    double den = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += y[i] * std::sqrt(x[i]);
        den += x[i];
    }
    SqrtFit fit;
    fit.c = num / den;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double ci = y[i] / std::sqrt(x[i]);
        fit.max_relative_deviation =
            std::max(fit.max_relative_deviation, std::abs(ci / fit.c - 1.0));
    }
    return fit;
}

std::vector<std::string> sweep_fit_comments(const std::vector<SweepRow> &rows) {
    std::vector<std::string> out;
    if (rows.size() < 2) {
        return out;
    }
    std::vector<double> x;
    std::vector<double> gates;
    std::vector<double> iters;
    for (const auto &r : rows) {
        x.push_back(static_cast<double>(r.size));
        gates.push_back(std::max(r.gate_units_total, 1.0));
        iters.push_back(r.grover_iterations);
    }
    const std::string var = is_match(rows.front().algo) ? "n" : "k";
    out.push_back("loglog slope gate_units_total vs " + var + ": " +
                  format_number(loglog_slope(x, gates)));
    if (rows.front().algo != SweepAlgo::CompareBsearch) {
        const auto fit = fit_sqrt(x, iters);
        out.push_back("grover iterations ~ c*sqrt(" + var + "): c=" +
                      format_number(fit.c) + " max relative deviation " +
                      format_number(fit.max_relative_deviation));
    }
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        out.push_back("gate_units_total ratio " + std::to_string(rows[i].size) +
                      "->" + std::to_string(rows[i + 1].size) + ": " +
                      format_number(gates[i + 1] / gates[i]));
    }
    return out;
}

std::string format_number(double x) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows,
                     const std::vector<std::string> &comments) {
    for (const auto &c : comments) {
        out << "# " << c << '\n';
    }
    out << kSweepHeader << '\n';
    for (const auto &r : rows) {
        const bool match = is_match(r.algo);
        out << to_string(r.algo) << ',';
        out << (match ? std::to_string(r.size) : "") << ',';
        out << (match ? std::to_string(r.m) : "") << ',';
        out << (match ? "" : std::to_string(r.size)) << ',';
        out << (r.algo == SweepAlgo::CompareGrover ? ""
                                                   : format_number(r.epsilon))
            << ',';
        out << r.seed << ',' << r.trials << ',' << format_number(r.success_rate)
            << ',' << r.qubits << ',' << format_number(r.diffusion_units) << ','
            << format_number(r.oracle_queries) << ','
            << format_number(r.inner_grover_iterations) << ','
            << format_number(r.access_units) << ','
            << format_number(r.hash_eval_units) << ','
            << format_number(r.gate_units_total) << '\n';
    }
}

} // namespace qstrings
