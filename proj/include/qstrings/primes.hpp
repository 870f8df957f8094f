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
 * Prime utilities: a textbook sieve for the first r primes, r-th prime
 * location for large r, and a deterministic primality test.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qstrings {

/// Raised when a request exceeds a configured size cap.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Largest r for which first_r_primes() will build the full list.
inline constexpr std::uint64_t kMaxListedPrimes = 5'000'000;
/// pi(2^32): keeps every prime below 2^32 so p*p fits in 64 bits.
inline constexpr std::uint64_t kMaxPrimeIndex = 203'280'221;

/// Upper bound on the r-th prime: r(ln r + ln ln r) for r >= 6, lookup below.
std::uint64_t nth_prime_upper_bound(std::uint64_t r);

/// Sieve of Eratosthenes over [0, limit]; returns the primes in order.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

/// Exactly the first r primes in increasing order. Throws ResourceError when
/// r > kMaxListedPrimes, std::invalid_argument when r == 0.
std::vector<std::uint64_t> first_r_primes(std::uint64_t r);

/// pi(x), the number of primes <= x (Lucy Hedgehog's method).
std::uint64_t prime_count(std::uint64_t x);

/// The r-th prime (1-indexed). Memoised; safe to call concurrently.
/// Throws ResourceError when r > kMaxPrimeIndex.
std::uint64_t nth_prime(std::uint64_t r);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t mod);

namespace sieve_kernels {
/// Number of primes in each odd-only segment of (lo, hi]; segment s covers
/// (lo + s*seg_len, min(hi, lo + (s+1)*seg_len)]. `base` holds every odd
/// prime <= sqrt(hi).
namespace serial {
std::vector<std::uint64_t>
count_segments(std::uint64_t lo, std::uint64_t hi, std::uint64_t seg_len,
               const std::vector<std::uint64_t> &base);
} // namespace serial
namespace omp {
std::vector<std::uint64_t>
count_segments(std::uint64_t lo, std::uint64_t hi, std::uint64_t seg_len,
               const std::vector<std::uint64_t> &base);
} // namespace omp
/// Primes in (lo, hi], ascending.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi,
                                     const std::vector<std::uint64_t> &base);
} // namespace sieve_kernels

} // namespace qstrings
