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
 * Rolling-hash fingerprints h_p(u) = (sum u_i 2^(i-1)) mod p with p drawn
 * from a prime universe sized to an error budget, prefix hashes, and the
 * classical lcp-by-binary-search comparator built on them.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "qstrings/bitstring.hpp"
#include "qstrings/rng.hpp"

namespace qstrings {

/// Default error budget when the caller does not pick one.
inline constexpr double kDefaultEpsilon = 0.1;

/// Number of bits needed for residues in [0, p): ceil(log2 p) for prime p.
unsigned residue_width(std::uint64_t p);

/// r = ceil(delta * max_len / epsilon).
std::uint64_t universe_size(std::uint64_t delta, std::uint64_t max_len,
                            double epsilon);

/// Hash register width for a universe: ceil(log2 p_r).
unsigned universe_width(std::uint64_t delta, std::uint64_t max_len,
                        double epsilon);

/**
 * @brief Modulus and the prime universe it was drawn from.
 *
 * Invariants: p is prime and among the first r primes, and
 * r >= ceil(delta * max_len / epsilon). `p_max` is the r-th prime; quantum
 * hash registers are `register_width()` = ceil(log2 p_max) bits wide so that
 * a circuit layout does not depend on which p was drawn.
 */
struct HashParams {
    std::uint64_t p = 2;
    double epsilon = kDefaultEpsilon;
    std::uint64_t delta = 1;
    std::uint64_t r = 1;
    std::uint64_t max_len = 1;
    std::uint64_t p_max = 2;

    /// Validating constructor for explicitly chosen moduli.
    static HashParams make(std::uint64_t p, std::uint64_t delta,
                           std::uint64_t max_len, double epsilon);

    [[nodiscard]] unsigned register_width() const {
        return residue_width(p_max);
    }
};

/// Residue together with its bit width; bits are read LSB first.
struct HashValue {
    std::uint64_t residue = 0;
    unsigned width = 0;

    [[nodiscard]] int bit(unsigned j) const {
        return static_cast<int>((residue >> j) & 1U);
    }
    friend bool operator==(const HashValue &, const HashValue &) = default;
};

/**
 * @brief Draws p uniformly from the first r = ceil(delta*max_len/epsilon)
 * primes. Deterministic given the rng state.
 *
 * Sampling is rejection on [2, p_r] with an exact primality test, which is
 * uniform over the universe without materialising it.
 */
HashParams choose_prime(Rng &rng, std::uint64_t delta, std::uint64_t max_len,
                        double epsilon);

HashValue rolling_hash(const BitString &u, std::uint64_t p);

/// Element i is h_p(u[1,i]); element 0 is 0. One left-to-right pass.
std::vector<HashValue> prefix_hashes(const BitString &u, std::uint64_t p);

/// h_p(s[a+1, a+m]) for every a in [0, N), derived from prefix hashes.
std::vector<std::uint64_t> window_hashes(const BitString &s, std::size_t m,
                                         std::uint64_t p);

/// Outcome of a longest-common-prefix binary search over prefix-equality
/// tests.
struct LcpSearch {
    std::size_t lcp = 0;
    unsigned comparisons = 0;
    /// The search could not separate lcp = k-1 from lcp = k and reported k.
    bool ambiguous = false;
};

/**
 * @brief Finds the largest x in [0, k] with prefixes of length x equal,
 * using exactly `tests` calls to `prefix_equal(len)` (len in [1, k]).
 *
 * With tests >= ceil(log2(k+1)) the answer is exact given exact tests. With
 * fewer the top candidate absorbs lcp = k; that case is flagged.
 */
LcpSearch bsearch_lcp(std::size_t k, unsigned tests,
                      const std::function<bool(std::size_t)> &prefix_equal);

struct HashCompareResult {
    int verdict = 0;
    std::size_t lcp = 0;
    unsigned comparisons = 0;
};

/// Lexicographic comparison through prefix-hash equality tests; correct with
/// probability >= 1 - epsilon. Performs ceil(log2(k+1)) hash comparisons,
/// k = min(|u|, |v|).
HashCompareResult compare_by_hash_bsearch_classical(const BitString &u,
                                                    const BitString &v,
                                                    const HashParams &params);

/// Verdict once the lcp is known: first differing symbol, else lengths.
int verdict_from_lcp(const BitString &u, const BitString &v, std::size_t lcp);

/// ceil(log2 x) with ceil_log2(0) = ceil_log2(1) = 0.
unsigned ceil_log2(std::uint64_t x);

} // namespace qstrings
