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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Invocation {
    int code = -1;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "qstrings");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    Invocation r;
    r.code = qstrings::cli::run(static_cast<int>(argv.size()), argv.data(), out,
                                err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

} // namespace

TEST_CASE("usage errors exit with 2", "[cli]") {
    REQUIRE(invoke({}).code == 2);
    REQUIRE(invoke({"teleport"}).code == 2);
    REQUIRE(invoke({"match", "--text", "0101", "--pattern", "01"}).code == 2);
    REQUIRE(invoke({"match", "--text", "0121", "--pattern", "01", "--seed",
                    "1"})
                .code == 2);
    REQUIRE(invoke({"match", "--text", "01", "--pattern", "011", "--seed", "1"})
                .code == 2);
    REQUIRE(invoke({"compare", "--u", "01", "--v", "0", "--algo", "quantum",
                    "--seed", "1"})
                .code == 2);
    REQUIRE(invoke({"min-find", "--values", "3,1", "--seed", "1", "--trials",
                    "0"})
                .code == 2);
}

TEST_CASE("match csv", "[cli]") {
    const std::vector<std::string> args{"match", "--text", "0101010",
                                        "--pattern", "010", "--seed", "3",
                                        "--trials", "5"};
    const auto a = invoke(args);
    REQUIRE(a.code == 0);
    const auto rows = lines(a.out);
    REQUIRE(rows.size() == 7);
    REQUIRE(rows[0].rfind("# qstrings match", 0) == 0);
    REQUIRE(rows[1] == "trial,seed,result_d,hash_verified,exact_verified,"
                       "copies_used,qubits,gate_units,inner_iters");
    REQUIRE(invoke(args).out == a.out);

    auto jobs = args;
    jobs.insert(jobs.end(), {"--jobs", "3"});
    const auto parallel = invoke(jobs);
    REQUIRE(lines(parallel.out).size() == rows.size());
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(lines(parallel.out)[i] == rows[i]);
    }
}

TEST_CASE("compare, min-find and primes csv", "[cli]") {
    const auto c = invoke({"compare", "--u", "0110", "--v", "0100", "--algo",
                           "bsearch", "--seed", "2", "--trials", "3"});
    REQUIRE(c.code == 0);
    REQUIRE(lines(c.out)[1] ==
            "trial,seed,verdict,expected,a0,phases,qubits,gate_units");
    REQUIRE(lines(c.out).size() == 5);

    const auto g = invoke({"compare", "--u", "101", "--v", "111", "--algo",
                           "grover", "--seed", "2", "--trials", "2"});
    REQUIRE(g.code == 0);

    const auto m = invoke({"min-find", "--values", "3,1,2", "--seed", "4",
                           "--trials", "4"});
    REQUIRE(m.code == 0);
    REQUIRE(lines(m.out)[1] == "trial,found_index,phases,iterations");
    REQUIRE(lines(m.out).size() == 6);

    const auto p = invoke({"primes", "--delta", "1", "--max-len", "4",
                           "--epsilon", "0.5", "--seed", "1"});
    REQUIRE(p.code == 0);
    const auto row = lines(p.out).back();
    REQUIRE(row.rfind("8,", 0) == 0);
    REQUIRE(row.substr(row.find(',', 2)) == ",0.5,1,4");
}

TEST_CASE("dense mode is rejected above the width cap", "[cli]") {
    std::string text;
    for (int i = 0; i < 200; ++i) {
        text += "01";
    }
    const auto r = invoke({"match", "--text", text, "--pattern", "0110",
                           "--mode", "dense", "--seed", "1"});
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("28 qubits") != std::string::npos);

    const auto ok = invoke({"match", "--text", "0110", "--pattern", "1",
                            "--mode", "dense", "--seed", "1", "--epsilon",
                            "0.9"});
    REQUIRE(ok.code == 0);
}

TEST_CASE("crosscheck exit codes", "[cli]") {
    const auto pass = invoke({"crosscheck", "--seed", "1"});
    REQUIRE(pass.code == 0);
    REQUIRE(pass.out.find("max_deviation") != std::string::npos);
    const auto fail = invoke({"crosscheck", "--seed", "1", "--inject-fault"});
    REQUIRE(fail.code == 1);
    REQUIRE(fail.out.find("basis") != std::string::npos);
}

TEST_CASE("sweep output and csv files", "[cli]") {
    const auto path =
        std::filesystem::temp_directory_path() / "qstrings_cli_sweep.csv";
    const std::vector<std::string> args{
        "sweep", "--algo", "compare_bsearch", "--sizes", "8,32", "--seed",
        "5", "--trials", "4", "--csv", path.string()};
    REQUIRE(invoke(args).code == 0);
    std::ifstream in(path);
    std::stringstream first;
    first << in.rdbuf();
    REQUIRE(first.str().find("algo,n,m,k,epsilon,seed,trials,success_rate") !=
            std::string::npos);
    REQUIRE(invoke(args).code == 0);
    std::ifstream again(path);
    std::stringstream second;
    second << again.rdbuf();
    REQUIRE(first.str() == second.str());
    std::filesystem::remove(path);
}

TEST_CASE("strings can come from files and ascii", "[cli]") {
    const auto path =
        std::filesystem::temp_directory_path() / "qstrings_cli_text.txt";
    {
        std::ofstream f(path);
        f << "0110\n1001\n";
    }
    const auto r = invoke({"match", "--text", path.string(), "--pattern",
                           "1001", "--seed", "1", "--trials", "2"});
    REQUIRE(r.code == 0);
    std::filesystem::remove(path);

    const auto a = invoke({"compare", "--u", "ab", "--v", "ac", "--ascii",
                           "--algo", "bsearch", "--seed", "1", "--trials", "1"});
    REQUIRE(a.code == 0);
    // expected column holds the classical verdict -1
    REQUIRE(lines(a.out)[2].find(",-1,") != std::string::npos);
}
