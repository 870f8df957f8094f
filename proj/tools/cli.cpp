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
#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qstrings/bitstring.hpp"
#include "qstrings/crosscheck.hpp"
#include "qstrings/fingerprint.hpp"
#include "qstrings/grover.hpp"
#include "qstrings/qcompare.hpp"
#include "qstrings/qmatch.hpp"
#include "qstrings/sim/dense_state.hpp"
#include "qstrings/sweep.hpp"

namespace qstrings::cli {

namespace {

/// Raised for bad flag values found after parsing.
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

constexpr std::uint64_t kMaxStructuredText = std::uint64_t{1} << 16U;

struct Common {
    std::uint64_t seed = 0;
    double epsilon = kDefaultEpsilon;
    std::uint64_t trials = 1;
    std::string mode = "structured";
    std::string csv;
    unsigned jobs = 1;

    [[nodiscard]] sim::Backend backend() const {
        return mode == "dense" ? sim::Backend::Dense
                               : sim::Backend::Structured;
    }
};

void add_common(CLI::App *cmd, Common &c, bool with_epsilon, bool with_mode) {
    cmd->add_option("--seed", c.seed, "Master seed; all randomness derives "
                                      "from it")
        ->required();
    cmd->add_option("--trials", c.trials, "Independent trials")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--csv", c.csv, "Write CSV here instead of stdout");
    cmd->add_option("--jobs", c.jobs, "Worker threads for trials")
        ->check(CLI::PositiveNumber);
    if (with_epsilon) {
        cmd->add_option("--epsilon", c.epsilon, "Fingerprint error budget")
            ->check(CLI::Range(1e-9, 0.999999));
    }
    if (with_mode) {
        cmd->add_option("--mode", c.mode, "Simulation backend")
            ->check(CLI::IsMember({"dense", "structured"}));
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

BitString load_string(const std::string &arg, bool ascii) {
    std::string text = arg;
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        text = read_file(arg);
        if (!ascii) {
            std::erase_if(text, [](char ch) {
                return ch == '\n' || ch == '\r' || ch == ' ' || ch == '\t';
            });
        }
    }
    try {
        return ascii ? BitString::from_ascii(text)
                     : BitString::from_binary(text);
    } catch (const std::invalid_argument &e) {
        throw UsageError("'" + arg + "' is neither a bit string nor a "
                         "readable file (" + e.what() + ")");
    }
}

void check_dense_width(const Common &c, unsigned width) {
    if (c.backend() == sim::Backend::Dense && width > sim::kDenseQubitCap) {
        throw UsageError("dense mode needs " + std::to_string(width) +
                         " qubits per copy, above the cap of " +
                         std::to_string(sim::kDenseQubitCap) +
                         "; use --mode structured");
    }
}

/// Runs `body` against the --csv file or `out`.
void emit(const std::string &path, std::ostream &out,
          const std::function<void(std::ostream &)> &body) {
    if (path.empty()) {
        body(out);
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    body(file);
}

/// Runs trial bodies in parallel, keeping output order.
std::vector<std::string>
parallel_rows(std::uint64_t trials, unsigned jobs,
              const std::function<std::string(std::uint64_t)> &row) {
    std::vector<std::string> rows(trials);
    const auto n = static_cast<std::int64_t>(trials);
    std::string failure;
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (std::int64_t t = 0; t < n; ++t) {
        try {
            rows[static_cast<std::size_t>(t)] =
                row(static_cast<std::uint64_t>(t));
        } catch (const std::exception &e) {
#pragma omp critical
            failure = e.what();
        }
    }
    if (!failure.empty()) {
        throw std::runtime_error(failure);
    }
    return rows;
}

std::string bool01(bool b) { return b ? "1" : "0"; }

std::string echo_line(int argc, const char *const *argv) {
    std::string line = "# qstrings";
    for (int i = 1; i < argc; ++i) {
        line += ' ';
        line += argv[i];
    }
    return line;
}

struct MatchArgs {
    Common common;
    std::string text;
    std::string pattern;
    bool ascii = false;
    bool unique = false;
    std::string dump_state;
};

int run_match_cmd(const MatchArgs &a, const std::string &echo,
                  std::ostream &out, std::ostream &err) {
    const MatchInstance inst(load_string(a.text, a.ascii),
                             load_string(a.pattern, a.ascii));
    const auto &c = a.common;
    if (c.backend() == sim::Backend::Structured &&
        inst.n() > kMaxStructuredText) {
        throw UsageError("text longer than " +
                         std::to_string(kMaxStructuredText) + " bits");
    }
    const std::uint64_t windows = inst.windows();
    const unsigned width = ceil_log2(windows) +
                           universe_width(windows, inst.m(), c.epsilon) + 1;
    check_dense_width(c, width);

    if (!a.dump_state.empty()) {
        if (width > sim::kDenseQubitCap) {
            throw UsageError("--dump-state needs a dense copy of " +
                             std::to_string(width) + " qubits, above the cap");
        }
        Rng rng(derive_seed(c.seed, {0, 0}));
        const auto params =
            choose_prime(rng, windows, inst.m(), c.epsilon);
        const auto st = prepare_match_state(inst, params);
        std::ofstream dump(a.dump_state);
        sim::DenseRegister(st.copy).state().dump(dump);
    }

    std::atomic<bool> unsound = false;
    const auto rows = parallel_rows(c.trials, c.jobs, [&](std::uint64_t t) {
        const std::uint64_t seed = derive_seed(c.seed, {0, t});
        Rng rng(seed);
        MatchOptions opts;
        opts.backend = c.backend();
        const auto r = run_match(inst, c.epsilon, rng, a.unique, opts);
        if (r.position && !inst.occurs_at(*r.position)) {
            unsound = true;
        }
        std::ostringstream line;
        line << t << ',' << seed << ','
             << (r.position ? std::to_string(*r.position) : "NotFound") << ','
             << bool01(r.hash_verified) << ',' << bool01(r.exactly_verified)
             << ',' << r.copies_used << ',' << r.ledger.qubits_total << ','
             << r.ledger.gate_units_total() << ','
             << r.ledger.inner_grover_iterations;
        return line.str();
    });
    emit(c.csv, out, [&](std::ostream &o) {
        o << echo << '\n'
          << "trial,seed,result_d,hash_verified,exact_verified,copies_used,"
             "qubits,gate_units,inner_iters\n";
        for (const auto &r : rows) {
            o << r << '\n';
        }
    });
    if (unsound) {
        err << "a returned position failed exact verification\n";
        return kVerificationFailure;
    }
    return kSuccess;
}

struct CompareArgs {
    Common common;
    std::string u;
    std::string v;
    std::string algo = "bsearch";
    bool ascii = false;
};

int run_compare_cmd(const CompareArgs &a, const std::string &echo,
                    std::ostream &out) {
    const BitString u = load_string(a.u, a.ascii);
    const BitString v = load_string(a.v, a.ascii);
    if (u.empty() || v.empty()) {
        throw UsageError("--u and --v must be non-empty");
    }
    const auto &c = a.common;
    const std::uint64_t k = std::min(u.size(), v.size());
    const bool bsearch = a.algo == "bsearch";
    const unsigned width =
        bsearch ? ceil_log2(k) + 2 * universe_width(k, k, c.epsilon) + 1
                : ceil_log2(k) + 3;
    check_dense_width(c, width);
    const int expected = compare_classical(u, v);

    const auto rows = parallel_rows(c.trials, c.jobs, [&](std::uint64_t t) {
        const std::uint64_t seed = derive_seed(c.seed, {0, t});
        Rng rng(seed);
        CompareOptions opts;
        opts.backend = c.backend();
        const auto r = bsearch ? run_compare_bsearch(u, v, c.epsilon, rng, opts)
                               : compare_grover(u, v, rng, opts);
        std::ostringstream line;
        line << t << ',' << seed << ',' << r.verdict << ',' << expected << ','
             << r.a0 << ',' << r.phases << ',' << r.ledger.qubits_total << ','
             << r.ledger.gate_units_total();
        return line.str();
    });
    emit(c.csv, out, [&](std::ostream &o) {
        o << echo << '\n'
          << "trial,seed,verdict,expected,a0,phases,qubits,gate_units\n";
        for (const auto &r : rows) {
            o << r << '\n';
        }
    });
    return kSuccess;
}

struct MinArgs {
    Common common;
    std::vector<std::uint64_t> values;
};

int run_min_cmd(const MinArgs &a, const std::string &echo, std::ostream &out) {
    const auto &c = a.common;
    if (a.values.empty()) {
        throw UsageError("--values needs at least one value");
    }
    const unsigned width =
        ceil_log2(a.values.size()) + 2 +
        static_cast<unsigned>(std::bit_width(
            *std::max_element(a.values.begin(), a.values.end())));
    check_dense_width(c, width);
    const auto rows = parallel_rows(c.trials, c.jobs, [&](std::uint64_t t) {
        Rng rng(derive_seed(c.seed, {0, t}));
        ResourceLedger ledger;
        const auto r = find_minimum(a.values, c.backend(), rng, ledger);
        std::ostringstream line;
        line << t << ',' << r.index << ',' << r.phases << ',' << r.iterations;
        return line.str();
    });
    emit(c.csv, out, [&](std::ostream &o) {
        o << echo << '\n' << "trial,found_index,phases,iterations\n";
        for (const auto &r : rows) {
            o << r << '\n';
        }
    });
    return kSuccess;
}

struct SweepArgs {
    Common common;
    std::string algo = "match";
    std::vector<std::uint64_t> sizes;
    std::uint64_t m = 8;
};

int run_sweep_cmd(const SweepArgs &a, const std::string &echo,
                  std::ostream &out, std::ostream &err) {
    SweepConfig cfg;
    cfg.algo = sweep_algo_from_string(a.algo);
    cfg.sizes = a.sizes;
    cfg.m = a.m;
    cfg.epsilon = a.common.epsilon;
    cfg.seed = a.common.seed;
    cfg.trials = a.common.trials;
    cfg.backend = a.common.backend();
    cfg.jobs = a.common.jobs;
    try {
        cfg.validate();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    const auto rows = run_sweep(cfg);
    std::vector<std::string> comments = {echo.substr(2)};
    bool formulas_hold = true;
    for (const auto &r : rows) {
        if (r.qubits != r.formula_qubits || !r.qubits_consistent) {
            formulas_hold = false;
            comments.push_back("qubit formula mismatch at size " +
                               std::to_string(r.size) + ": ledger " +
                               std::to_string(r.qubits) + ", formula " +
                               std::to_string(r.formula_qubits));
        }
    }
    comments.push_back(std::string("qubit column matches closed form: ") +
                       (formulas_hold ? "yes" : "no"));
    for (auto &line : sweep_fit_comments(rows)) {
        comments.push_back(std::move(line));
    }
    emit(a.common.csv, out,
         [&](std::ostream &o) { write_sweep_csv(o, rows, comments); });
    if (!formulas_hold) {
        err << "ledger qubit counts disagree with the closed form\n";
        return kVerificationFailure;
    }
    return kSuccess;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err) {
    CLI::App app{"Quantum string matching and comparison simulator"};
    app.name("qstrings");
    app.require_subcommand(1);

    MatchArgs match;
    auto *m = app.add_subcommand("match", "Find an occurrence of a pattern");
    m->add_option("--text", match.text, "Text as bits or a file path")
        ->required();
    m->add_option("--pattern", match.pattern, "Pattern as bits or a file path")
        ->required();
    m->add_flag("--ascii", match.ascii,
                "Read text and pattern as ASCII, 8 bits per byte");
    m->add_flag("--unique", match.unique,
                "Single-occurrence procedure (one copy, fixed iterations)");
    m->add_option("--dump-state", match.dump_state,
                  "Write the prepared dense copy as basis_index,re,im lines");
    add_common(m, match.common, true, true);

    CompareArgs compare;
    auto *c = app.add_subcommand("compare", "Compare two strings");
    c->add_option("--u", compare.u, "First string (bits or file)")->required();
    c->add_option("--v", compare.v, "Second string (bits or file)")
        ->required();
    c->add_option("--algo", compare.algo, "Comparator")
        ->check(CLI::IsMember({"grover", "bsearch"}));
    c->add_flag("--ascii", compare.ascii, "Read strings as ASCII");
    add_common(c, compare.common, true, true);

    MinArgs minf;
    auto *f = app.add_subcommand("min-find", "Quantum minimum finding");
    f->add_option("--values", minf.values, "Comma-separated keys")
        ->required()
        ->delimiter(',');
    add_common(f, minf.common, false, true);

    SweepArgs sweep;
    auto *s = app.add_subcommand("sweep", "Resource and success sweep");
    s->add_option("--algo", sweep.algo, "Algorithm")
        ->check(CLI::IsMember(
            {"match", "match_unique", "compare_grover", "compare_bsearch"}));
    s->add_option("--sizes", sweep.sizes, "Grid of n (matching) or k")
        ->required()
        ->delimiter(',');
    s->add_option("--m", sweep.m, "Pattern length for matching")
        ->check(CLI::PositiveNumber);
    add_common(s, sweep.common, true, true);

    unsigned max_width = sim::kDenseQubitCap;
    std::uint64_t check_seed = 0;
    bool inject = false;
    auto *x = app.add_subcommand("crosscheck",
                                 "Compare dense and structured backends");
    x->add_option("--max-width", max_width, "Widest dense copy to run")
        ->check(CLI::Range(1U, sim::kDenseQubitCap));
    x->add_option("--seed", check_seed, "Master seed")->required();
    x->add_flag("--inject-fault", inject,
                "Perturb one structured amplitude to exercise failure");

    std::uint64_t delta = 1;
    std::uint64_t max_len = 1;
    double prime_eps = kDefaultEpsilon;
    std::uint64_t prime_seed = 0;
    auto *p = app.add_subcommand("primes", "Draw a fingerprint modulus");
    p->add_option("--delta", delta, "Number of strings compared")
        ->check(CLI::PositiveNumber);
    p->add_option("--max-len", max_len, "Longest string length")
        ->check(CLI::PositiveNumber);
    p->add_option("--epsilon", prime_eps, "Error budget")
        ->check(CLI::Range(1e-9, 0.999999));
    p->add_option("--seed", prime_seed, "Seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    const std::string echo = echo_line(argc, argv);
    try {
        if (m->parsed()) {
            return run_match_cmd(match, echo, out, err);
        }
        if (c->parsed()) {
            return run_compare_cmd(compare, echo, out);
        }
        if (f->parsed()) {
            return run_min_cmd(minf, echo, out);
        }
        if (s->parsed()) {
            return run_sweep_cmd(sweep, echo, out, err);
        }
        if (x->parsed()) {
            const auto report = run_crosscheck(max_width, check_seed, inject);
            write_crosscheck_report(out, report);
            return report.passed() ? kSuccess : kVerificationFailure;
        }
        if (p->parsed()) {
            Rng rng(prime_seed);
            const auto params = choose_prime(rng, delta, max_len, prime_eps);
            out << params.r << ',' << params.p << ','
                << format_number(params.epsilon) << ',' << params.delta << ','
                << params.max_len << '\n';
            return kSuccess;
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

} // namespace qstrings::cli
