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
#include "qstrings/fingerprint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qstrings/primes.hpp"

namespace qstrings {

unsigned ceil_log2(std::uint64_t x) {
    return x <= 1 ? 0U : static_cast<unsigned>(std::bit_width(x - 1));
}

unsigned residue_width(std::uint64_t p) {
    if (p < 2) {
        throw std::invalid_argument("residue_width: p must be >= 2");
    }
    return static_cast<unsigned>(std::bit_width(p - 1));
}

std::uint64_t universe_size(std::uint64_t delta, std::uint64_t max_len,
                            double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("epsilon must lie in (0, 1)");
    }
    if (delta == 0 || max_len == 0) {
        throw std::invalid_argument("delta and max_len must be >= 1");
    }
    const double x = static_cast<double>(delta) *
                     static_cast<double>(max_len) / epsilon;
    // absorb the representation error of epsilon (8 / 0.1 is 80, not 81)
    return static_cast<std::uint64_t>(std::ceil(x * (1.0 - 1e-12)));
}

unsigned universe_width(std::uint64_t delta, std::uint64_t max_len,
                        double epsilon) {
    return residue_width(nth_prime(universe_size(delta, max_len, epsilon)));
}

HashParams HashParams::make(std::uint64_t p, std::uint64_t delta,
                            std::uint64_t max_len, double epsilon) {
    HashParams params;
    params.epsilon = epsilon;
    params.delta = delta;
    params.max_len = max_len;
    params.r = universe_size(delta, max_len, epsilon);
    params.p_max = nth_prime(params.r);
    if (!is_prime(p) || p > params.p_max) {
        throw std::invalid_argument("HashParams: p=" + std::to_string(p) +
                                    " is not among the first " +
                                    std::to_string(params.r) + " primes");
    }
    params.p = p;
    return params;
}

HashParams choose_prime(Rng &rng, std::uint64_t delta, std::uint64_t max_len,
                        double epsilon) {
    HashParams params;
    params.epsilon = epsilon;
    params.delta = delta;
    params.max_len = max_len;
    params.r = universe_size(delta, max_len, epsilon);
    params.p_max = nth_prime(params.r);
    std::uint64_t candidate = 0;
    do {
        candidate = rng.uniform_int(2, params.p_max);
    } while (!is_prime(candidate));
    params.p = candidate;
    return params;
}

HashValue rolling_hash(const BitString &u, std::uint64_t p) {
    std::uint64_t h = 0;
    std::uint64_t power = 1 % p;
    for (auto b : u.bits()) {
        if (b != 0) {
            h = (h + power) % p;
        }
        power = (power * 2) % p;
    }
    return {h, residue_width(p)};
}

std::vector<HashValue> prefix_hashes(const BitString &u, std::uint64_t p) {
    const unsigned width = residue_width(p);
    std::vector<HashValue> out;
    out.reserve(u.size() + 1);
    out.push_back({0, width});
    std::uint64_t h = 0;
    std::uint64_t power = 1 % p;
    for (auto b : u.bits()) {
        h = (h + power * b) % p;
        power = (power * 2) % p;
        out.push_back({h, width});
    }
    return out;
}

std::vector<std::uint64_t> window_hashes(const BitString &s, std::size_t m,
                                         std::uint64_t p) {
    if (m == 0 || m > s.size()) {
        throw std::invalid_argument("window_hashes: need 1 <= m <= |s|");
    }
    const std::size_t windows = s.size() - m + 1;
    std::vector<std::uint64_t> out(windows);
    const auto bits = s.bits();
    if (p == 2) {
        // 2^(i-1) vanishes mod 2 except for i = 1
        for (std::size_t a = 0; a < windows; ++a) {
            out[a] = bits[a];
        }
        return out;
    }
    // h(s[a+1,a+m]) = (H[a+m] - H[a]) * 2^(-a)
    const auto prefix = prefix_hashes(s, p);
    const std::uint64_t half = (p + 1) / 2;
    std::uint64_t inverse_power = 1;
    for (std::size_t a = 0; a < windows; ++a) {
        const std::uint64_t diff =
            (prefix[a + m].residue + p - prefix[a].residue) % p;
        out[a] = mul_mod(diff, inverse_power, p);
        inverse_power = mul_mod(inverse_power, half, p);
    }
    return out;
}

LcpSearch bsearch_lcp(std::size_t k, unsigned tests,
                      const std::function<bool(std::size_t)> &prefix_equal) {
    LcpSearch out;
    const std::size_t candidates = std::size_t{1} << tests;
    const std::size_t top = std::min(k, candidates - 1);
    // bisect [lo, lo + size) over candidate lengths; lengths above `top`
    // are tested at `top`, which keeps the predicate monotone
    std::size_t lo = 0;
    std::size_t size = candidates;
    while (size > 1) {
        const std::size_t half = size / 2;
        const std::size_t mid = lo + half;
        ++out.comparisons;
        if (prefix_equal(std::min(mid, top))) {
            lo = mid;
        }
        size = half;
    }
    out.lcp = std::min(lo, top);
    if (out.lcp == top && top < k) {
        out.lcp = k;
        out.ambiguous = true;
    }
    return out;
}

int verdict_from_lcp(const BitString &u, const BitString &v, std::size_t lcp) {
    const std::size_t t = lcp + 1;
    if (t <= u.size() && t <= v.size()) {
        return u.symbol(t) < v.symbol(t) ? -1 : 1;
    }
    if (u.size() == v.size()) {
        return 0;
    }
    return u.size() < v.size() ? -1 : 1;
}

HashCompareResult compare_by_hash_bsearch_classical(const BitString &u,
                                                    const BitString &v,
                                                    const HashParams &params) {
    const std::size_t k = std::min(u.size(), v.size());
    const auto hu = prefix_hashes(u, params.p);
    const auto hv = prefix_hashes(v, params.p);
    const unsigned tests = ceil_log2(k + 1);
    const auto search = bsearch_lcp(k, tests, [&](std::size_t len) {
        return hu[len] == hv[len];
    });
    HashCompareResult out;
    out.lcp = search.lcp;
    out.comparisons = search.comparisons;
    out.verdict = verdict_from_lcp(u, v, search.lcp);
    return out;
}

} // namespace qstrings
