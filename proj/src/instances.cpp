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
#include "qstrings/instances.hpp"

#include <algorithm>
#include <stdexcept>

namespace qstrings {

BitString random_bits(std::size_t n, Rng &rng) {
    std::vector<std::uint8_t> bits(n);
    for (auto &b : bits) {
        b = static_cast<std::uint8_t>(rng.next() & 1U);
    }
    return BitString(std::move(bits));
}

MatchInstance planted_instance(std::size_t n, std::size_t m,
                               const std::vector<std::size_t> &positions,
                               Rng &rng) {
    if (m == 0 || m > n) {
        throw std::invalid_argument("need 1 <= m <= n");
    }
    std::vector<std::size_t> sorted = positions;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] == 0 || sorted[i] + m - 1 > n ||
            (i > 0 && sorted[i] < sorted[i - 1] + m)) {
            throw std::invalid_argument("planted windows overlap or fall "
                                        "outside the text");
        }
    }
    std::vector<std::uint8_t> fixed(n, 0);
    for (const auto d : sorted) {
        std::fill(fixed.begin() + static_cast<std::ptrdiff_t>(d - 1),
                  fixed.begin() + static_cast<std::ptrdiff_t>(d - 1 + m), 1);
    }

    for (int attempt = 0; attempt < 1000; ++attempt) {
        const BitString w = random_bits(m, rng);
        std::vector<std::uint8_t> s(n);
        for (auto &b : s) {
            b = static_cast<std::uint8_t>(rng.next() & 1U);
        }
        for (const auto d : sorted) {
            std::copy(w.bits().begin(), w.bits().end(),
                      s.begin() + static_cast<std::ptrdiff_t>(d - 1));
        }
        bool stuck = false;
        for (int round = 0; round < 64 && !stuck; ++round) {
            const MatchInstance inst(BitString(s), w);
            const auto found = naive_match_all(inst);
            if (found == sorted) {
                return inst;
            }
            for (const auto d : found) {
                if (std::binary_search(sorted.begin(), sorted.end(), d)) {
                    continue;
                }
                std::vector<std::size_t> free;
                for (std::size_t i = d - 1; i < d - 1 + m; ++i) {
                    if (fixed[i] == 0) {
                        free.push_back(i);
                    }
                }
                if (free.empty()) {
                    stuck = true;
                    break;
                }
                s[free[rng.uniform_int(0, free.size() - 1)]] ^= 1U;
            }
        }
    }
    throw std::runtime_error("could not plant the requested occurrences");
}

MatchInstance random_planted_instance(std::size_t n, std::size_t m,
                                      std::size_t count, Rng &rng) {
    if (count * m > n) {
        throw std::invalid_argument("occurrences do not fit the text");
    }
    // choose count gaps summing to n - count*m, then lay windows out
    const std::size_t slack = n - count * m;
    std::vector<std::size_t> cuts(count);
    for (auto &c : cuts) {
        c = rng.uniform_int(0, slack);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::size_t> positions(count);
    for (std::size_t i = 0; i < count; ++i) {
        positions[i] = cuts[i] + i * m + 1;
    }
    return planted_instance(n, m, positions, rng);
}

namespace {

std::pair<BitString, BitString> pair_with(std::size_t lu, std::size_t lv,
                                          Rng &rng) {
    const std::size_t k = std::min(lu, lv);
    const std::size_t lcp = rng.uniform_int(0, k);
    std::vector<std::uint8_t> u(lu);
    std::vector<std::uint8_t> v(lv);
    for (auto &b : u) {
        b = static_cast<std::uint8_t>(rng.next() & 1U);
    }
    for (auto &b : v) {
        b = static_cast<std::uint8_t>(rng.next() & 1U);
    }
    std::copy(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(lcp),
              v.begin());
    if (lcp < k) {
        v[lcp] = static_cast<std::uint8_t>(1U - u[lcp]);
    }
    return {BitString(std::move(u)), BitString(std::move(v))};
}

} // namespace

std::pair<BitString, BitString> random_pair(std::size_t max_len, Rng &rng) {
    if (max_len == 0) {
        throw std::invalid_argument("max_len must be positive");
    }
    const std::size_t lu = rng.uniform_int(1, max_len);
    const std::size_t lv = rng.uniform_int(1, max_len);
    return pair_with(lu, lv, rng);
}

std::pair<BitString, BitString> random_pair_of_length(std::size_t k,
                                                      Rng &rng) {
    if (k == 0) {
        throw std::invalid_argument("k must be positive");
    }
    return pair_with(k, k, rng);
}

} // namespace qstrings
