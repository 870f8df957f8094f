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
 * Random instance generators for tests, sweeps and the command line.
 */
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qstrings/bitstring.hpp"
#include "qstrings/rng.hpp"

namespace qstrings {

BitString random_bits(std::size_t n, Rng &rng);

/**
 * @brief Text of length n and a random pattern of length m occurring at
 * exactly the given 1-indexed positions, whose windows must not overlap.
 * Stray occurrences are removed by flipping text bits outside the planted
 * windows; a fresh pattern is drawn if that gets stuck.
 */
MatchInstance planted_instance(std::size_t n, std::size_t m,
                               const std::vector<std::size_t> &positions,
                               Rng &rng);

/// Exactly `count` occurrences at random non-overlapping positions.
MatchInstance random_planted_instance(std::size_t n, std::size_t m,
                                      std::size_t count, Rng &rng);

/**
 * @brief Pair with lengths in [1, max_len] and a common prefix length drawn
 * uniformly from [0, min length]; the strings differ right after it when
 * that position exists.
 */
std::pair<BitString, BitString> random_pair(std::size_t max_len, Rng &rng);

/// Both of length k, common prefix length uniform in [0, k].
std::pair<BitString, BitString> random_pair_of_length(std::size_t k,
                                                      Rng &rng);

} // namespace qstrings
