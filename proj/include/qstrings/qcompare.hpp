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
 * Quantum lexicographic comparison of binary strings: minimum finding over
 * (1 - g'(i), i) pairs, and binary search for the longest common prefix
 * with hash-equality tests on prefix-hash registers.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qstrings/bitstring.hpp"
#include "qstrings/fingerprint.hpp"
#include "qstrings/resources.hpp"
#include "qstrings/rng.hpp"
#include "qstrings/sim/search_register.hpp"

namespace qstrings {

/// 1 iff (q, i) precedes (q2, i2) lexicographically.
int comp_pairs(int q, std::uint64_t i, int q2, std::uint64_t i2);

/**
 * @brief Reads the data registers at index i of a copy over a k-element
 * domain, charging ceil(log2 k) access units.
 */
std::vector<std::uint64_t> access_element(sim::SearchRegister &reg,
                                          std::uint64_t i, std::uint64_t k,
                                          ResourceLedger &ledger);

struct CompareOptions {
    sim::Backend backend = sim::Backend::Structured;
    sim::LockstepReport *report = nullptr;
    double fault = 0.0;
};

struct CompareResult {
    int verdict = 0;
    /// 0-indexed position of the first difference found (k when none).
    std::size_t a0 = 0;
    /// Minimum-finding phases (grover) or binary-search steps (bsearch).
    std::uint64_t phases = 0;
    std::uint64_t hash_comparisons = 0;
    std::uint64_t grover_iterations = 0;
    std::uint64_t copies_used = 0;
    /// bsearch: the step budget could not separate lcp = k-1 from k, so
    /// position k-1 was read from both strings.
    bool ambiguous = false;
    /// bsearch: every inner equality test matched the true register values.
    bool inner_all_correct = true;
    /// bsearch: some tested prefix pair had equal hashes but unequal bits.
    bool hash_collision = false;
    ResourceLedger ledger;
};

/// Minimum finding over (1 - g'(i), i), i < k = min(|u|, |v|), starting
/// from the sentinel (1, k); 3 max(1, ceil(log2 k)) phases of at most
/// max(1, ceil(log2 k)) repetitions each.
CompareResult compare_grover(const BitString &u, const BitString &v, Rng &rng,
                             const CompareOptions &options = {});

/// Majority width that keeps one binary-search step's error below
/// 1 / (10 max(1, ceil(log2 k))).
unsigned bsearch_majority(std::uint64_t k, unsigned hash_width);

/**
 * @brief Binary search for the lcp with exactly ceil(log2 k) hash-equality
 * tests, each on a fresh prefix-hash copy. Expects params drawn with
 * delta = k and max_len = k. When k is a power of two the tests cannot
 * separate lcp = k-1 from k; position k-1 is then read from both strings.
 */
CompareResult compare_bsearch(const BitString &u, const BitString &v,
                              const HashParams &params, Rng &rng,
                              const CompareOptions &options = {});

/// Draws p (delta = k, max_len = k) from `rng`, then runs compare_bsearch.
CompareResult run_compare_bsearch(const BitString &u, const BitString &v,
                                  double epsilon, Rng &rng,
                                  const CompareOptions &options = {});

} // namespace qstrings
