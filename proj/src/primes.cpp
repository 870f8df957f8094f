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
#include "qstrings/primes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>


namespace qstrings {

namespace {

std::uint64_t isqrt(std::uint64_t x) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) {
        --r;
    }
    while ((r + 1) * (r + 1) <= x) {
        ++r;
    }
    return r;
}

constexpr std::array<std::uint64_t, 6> kSmallPrimes{0, 2, 3, 5, 7, 11};

// Odd-only segment sieve of (lo, hi]; visit(value) for each prime.
template <class Visit>
void sieve_segment(std::uint64_t lo, std::uint64_t hi,
                   const std::vector<std::uint64_t> &base, Visit &&visit) {
    if (hi <= lo) {
        return;
    }
    if (lo < 2 && hi >= 2) {
        visit(2);
    }
    // odd values first..last, index (v - first) / 2
    std::uint64_t first = lo + 1;
    if (first % 2 == 0) {
        ++first;
    }
    if (first < 3) {
        first = 3;
    }
    if (first > hi) {
        return;
    }
    const std::uint64_t count = (hi - first) / 2 + 1;
    std::vector<std::uint8_t> composite(count, 0);
    for (auto p : base) {
        const std::uint64_t p2 = p * p;
        if (p2 > hi) {
            break;
        }
        std::uint64_t start = std::max(p2, ((first + p - 1) / p) * p);
        if (start % 2 == 0) {
            start += p;
        }
        for (std::uint64_t v = start; v <= hi; v += 2 * p) {
            composite[(v - first) / 2] = 1;
        }
    }
    for (std::uint64_t i = 0; i < count; ++i) {
        if (composite[i] == 0) {
            visit(first + 2 * i);
        }
    }
}

std::uint64_t count_one(std::uint64_t lo, std::uint64_t hi,
                        const std::vector<std::uint64_t> &base) {
    std::uint64_t c = 0;
    sieve_segment(lo, hi, base, [&](std::uint64_t) { ++c; });
    return c;
}

std::vector<std::uint64_t> odd_base_primes(std::uint64_t hi) {
    auto base = sieve_primes(isqrt(hi) + 1);
    if (!base.empty() && base.front() == 2) {
        base.erase(base.begin());
    }
    return base;
}

} // namespace

std::uint64_t nth_prime_upper_bound(std::uint64_t r) {
    if (r < kSmallPrimes.size()) {
        return kSmallPrimes.at(r);
    }
    const double x = static_cast<double>(r);
    return static_cast<std::uint64_t>(
               std::ceil(x * (std::log(x) + std::log(std::log(x))))) +
           1;
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) {
        return primes;
    }
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) {
            continue;
        }
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) {
            composite[j] = true;
        }
    }
    return primes;
}

std::vector<std::uint64_t> first_r_primes(std::uint64_t r) {
    if (r == 0) {
        throw std::invalid_argument("first_r_primes: r must be >= 1");
    }
    if (r > kMaxListedPrimes) {
        throw ResourceError("first_r_primes: r=" + std::to_string(r) +
                            " exceeds cap " +
                            std::to_string(kMaxListedPrimes));
    }
    auto primes = sieve_primes(nth_prime_upper_bound(r));
    primes.resize(r);
    return primes;
}

std::uint64_t prime_count(std::uint64_t x) {
    if (x < 2) {
        return 0;
    }
    const std::uint64_t r = isqrt(x);
    // small[i] = S(i), large[i] = S(x / i): running counts of survivors
    std::vector<std::uint64_t> small(r + 1);
    std::vector<std::uint64_t> large(r + 1);
    for (std::uint64_t i = 1; i <= r; ++i) {
        small[i] = i - 1;
        large[i] = x / i - 1;
    }
    for (std::uint64_t p = 2; p <= r; ++p) {
        if (small[p] == small[p - 1]) {
            continue;
        }
        const std::uint64_t sp = small[p - 1];
        const std::uint64_t p2 = p * p;
        const std::uint64_t lim = std::min(r, x / p2);
        for (std::uint64_t i = 1; i <= lim; ++i) {
            const std::uint64_t d = i * p;
            const std::uint64_t s = d <= r ? large[d] : small[x / d];
            large[i] -= s - sp;
        }
        for (std::uint64_t i = r; i >= p2; --i) {
            small[i] -= small[i / p] - sp;
        }
    }
    return large[1];
}

namespace sieve_kernels {

namespace serial {
std::vector<std::uint64_t>
count_segments(std::uint64_t lo, std::uint64_t hi, std::uint64_t seg_len,
               const std::vector<std::uint64_t> &base) {
    const std::uint64_t segs = hi > lo ? (hi - lo + seg_len - 1) / seg_len : 0;
    std::vector<std::uint64_t> counts(segs);
    for (std::uint64_t s = 0; s < segs; ++s) {
        const std::uint64_t a = lo + s * seg_len;
        counts[s] = count_one(a, std::min(hi, a + seg_len), base);
    }
    return counts;
}
} // namespace serial

namespace omp {
std::vector<std::uint64_t>
count_segments(std::uint64_t lo, std::uint64_t hi, std::uint64_t seg_len,
               const std::vector<std::uint64_t> &base) {
    const std::uint64_t segs = hi > lo ? (hi - lo + seg_len - 1) / seg_len : 0;
    std::vector<std::uint64_t> counts(segs);
    const auto n = static_cast<std::int64_t>(segs);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t s = 0; s < n; ++s) {
        const std::uint64_t a = lo + static_cast<std::uint64_t>(s) * seg_len;
        counts[static_cast<std::size_t>(s)] =
            count_one(a, std::min(hi, a + seg_len), base);
    }
    return counts;
}
} // namespace omp

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi,
                                     const std::vector<std::uint64_t> &base) {
    std::vector<std::uint64_t> out;
    sieve_segment(lo, hi, base, [&](std::uint64_t v) { out.push_back(v); });
    return out;
}

} // namespace sieve_kernels

namespace {

std::uint64_t locate_nth_prime(std::uint64_t r) {
    if (r < kSmallPrimes.size()) {
        return kSmallPrimes.at(r);
    }
    const double x = static_cast<double>(r);
    // p_r >= r(ln r + ln ln r - 1) for r >= 2; step one below to be strict
    auto lo = static_cast<std::uint64_t>(
        std::floor(x * (std::log(x) + std::log(std::log(x)) - 1.0)));
    lo = lo > 2 ? lo - 1 : 1;
    const std::uint64_t hi = nth_prime_upper_bound(r);
    std::uint64_t seen = prime_count(lo);
    const auto base = odd_base_primes(hi);

    constexpr std::uint64_t kSegment = 1U << 20U;
    const auto counts = sieve_kernels::omp::count_segments(lo, hi, kSegment, base);
    for (std::size_t s = 0; s < counts.size(); ++s) {
        if (seen + counts[s] >= r) {
            const std::uint64_t a = lo + s * kSegment;
            const auto primes =
                sieve_kernels::primes_in(a, std::min(hi, a + kSegment), base);
            return primes.at(r - seen - 1);
        }
        seen += counts[s];
    }
    throw std::logic_error("nth_prime: upper bound too small");
}

} // namespace

std::uint64_t nth_prime(std::uint64_t r) {
    if (r == 0) {
        throw std::invalid_argument("nth_prime: r must be >= 1");
    }
    if (r > kMaxPrimeIndex) {
        throw ResourceError("nth_prime: r=" + std::to_string(r) +
                            " exceeds cap " + std::to_string(kMaxPrimeIndex));
    }
    static std::mutex mutex;
    static std::map<std::uint64_t, std::uint64_t> cache;
    {
        std::scoped_lock lock(mutex);
        if (auto it = cache.find(r); it != cache.end()) {
            return it->second;
        }
    }
    const auto p = locate_nth_prime(r);
    std::scoped_lock lock(mutex);
    cache.emplace(r, p);
    return p;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    __extension__ using Wide = unsigned __int128;
    return static_cast<std::uint64_t>((static_cast<Wide>(a) * b) % mod);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1U) {
            result = mul_mod(result, base, mod);
        }
        base = mul_mod(base, base, mod);
        exp >>= 1U;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    constexpr std::array<std::uint64_t, 12> bases{2,  3,  5,  7,  11, 13,
                                                  17, 19, 23, 29, 31, 37};
    for (auto p : bases) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (auto a : bases) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool witness = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) {
            return false;
        }
    }
    return true;
}

} // namespace qstrings
