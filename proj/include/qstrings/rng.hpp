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
#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qstrings {

/// SplitMix64 finaliser, used to derive independent stream seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
}

/// Seed for stream `path...` under `master`; trial t of point p is
/// derive_seed(master, {p, t}).
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = mix_seed(master);
    for (auto p : path) {
        s = mix_seed(s ^ mix_seed(p + 0x632be59bd9b4e019ULL));
    }
    return s;
}

/**
 * @brief Seeded random source. All randomness in the library flows through
 * this type, so a run is reproducible from its seed.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11U) * 0x1.0p-53;
    }

    /// Uniform integer in [lo, hi].
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo + 1;
        if (span == 0) {
            return engine_();
        }
        // rejection keeps the draw exactly uniform
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
        std::uint64_t x = 0;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + x % span;
    }

    bool bernoulli(double p) { return p > 0.0 && uniform() < p; }

    Rng split(std::uint64_t stream) {
        return Rng(derive_seed(engine_(), {stream}));
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace qstrings
