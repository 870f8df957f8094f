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
 * Parameter sweeps: Monte Carlo trials per grid point, mean ledger
 * counters, and log-log fits against the expected growth.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qstrings/resources.hpp"
#include "qstrings/sim/search_register.hpp"

namespace qstrings {

enum class SweepAlgo { Match, MatchUnique, CompareGrover, CompareBsearch };

std::string_view to_string(SweepAlgo algo);
SweepAlgo sweep_algo_from_string(std::string_view name);

struct SweepConfig {
    SweepAlgo algo = SweepAlgo::Match;
    /// n for matching, k for comparison.
    std::vector<std::uint64_t> sizes;
    /// Pattern length for matching.
    std::uint64_t m = 8;
    double epsilon = 0.1;
    std::uint64_t seed = 1;
    std::uint64_t trials = 10;
    sim::Backend backend = sim::Backend::Structured;
    unsigned jobs = 1;

    void validate() const;
};

struct SweepRow {
    SweepAlgo algo = SweepAlgo::Match;
    std::uint64_t size = 0;
    std::uint64_t m = 0;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    double success_rate = 0.0;
    std::uint64_t qubits = 0;
    /// Closed-form count for this point.
    std::uint64_t formula_qubits = 0;
    /// Every trial reported the same qubit count.
    bool qubits_consistent = true;
    double diffusion_units = 0.0;
    double oracle_queries = 0.0;
    double inner_grover_iterations = 0.0;
    double access_units = 0.0;
    double hash_eval_units = 0.0;
    double gate_units_total = 0.0;
    double grover_iterations = 0.0;
};

/// Rows in grid order. Trial t at size s uses derive_seed(seed, {s, t}).
std::vector<SweepRow> run_sweep(const SweepConfig &config);

/// Closed-form qubit count for one grid point.
std::uint64_t formula_qubits(SweepAlgo algo, std::uint64_t size,
                             std::uint64_t m, double epsilon);

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double> &x, const std::vector<double> &y);

/// Least-squares c in y = c * sqrt(x), and the largest relative deviation
/// of y / sqrt(x) from it.
struct SqrtFit {
    double c = 0.0;
    double max_relative_deviation = 0.0;
};
SqrtFit fit_sqrt(const std::vector<double> &x, const std::vector<double> &y);

/// Fit summaries written as `#` comment lines.
std::vector<std::string> sweep_fit_comments(const std::vector<SweepRow> &rows);

inline constexpr std::string_view kSweepHeader =
    "algo,n,m,k,epsilon,seed,trials,success_rate,qubits,diffusion_units,"
    "oracle_queries,inner_grover_iterations,access_units,hash_eval_units,"
    "gate_units_total";

/// Comments first, then the header and one line per row. Fields that do
/// not apply to the algorithm are empty.
void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows,
                     const std::vector<std::string> &comments);

/// Shortest decimal form that round-trips (integers print without a point).
std::string format_number(double x);

} // namespace qstrings
