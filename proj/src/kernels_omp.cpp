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
#include "qstrings/kernels.hpp"

#if defined(QSTRINGS_HAVE_OPENMP)
#include <omp.h>
#endif

namespace qstrings::kernels {

bool openmp_enabled() {
#if defined(QSTRINGS_HAVE_OPENMP)
    return true;
#else
    return false;
#endif
}

namespace omp {

using Index = std::int64_t;

void apply_single_qubit(std::span<Complex> amps, unsigned target,
                        const Matrix2 &m) {
    const std::uint64_t bit = std::uint64_t{1} << target;
    const std::uint64_t lo_mask = bit - 1;
    const auto half = static_cast<Index>(amps.size() / 2);
#pragma omp parallel for
    for (Index k = 0; k < half; ++k) {
        const auto i = static_cast<std::uint64_t>(k);
        const std::uint64_t i0 = ((i & ~lo_mask) << 1U) | (i & lo_mask);
        const std::uint64_t i1 = i0 | bit;
        const Complex a0 = amps[i0];
        const Complex a1 = amps[i1];
        amps[i0] = m.m00 * a0 + m.m01 * a1;
        amps[i1] = m.m10 * a0 + m.m11 * a1;
    }
}

void apply_cnot(std::span<Complex> amps, unsigned control, unsigned target) {
    const std::uint64_t cbit = std::uint64_t{1} << control;
    const std::uint64_t tbit = std::uint64_t{1} << target;
    const auto n = static_cast<Index>(amps.size());
#pragma omp parallel for
    for (Index k = 0; k < n; ++k) {
        const auto b = static_cast<std::uint64_t>(k);
        if ((b & cbit) != 0 && (b & tbit) == 0) {
            std::swap(amps[b], amps[b | tbit]);
        }
    }
}

void negate_outside_zero(std::span<Complex> amps, std::uint64_t mask) {
    const auto n = static_cast<Index>(amps.size());
#pragma omp parallel for simd
    for (Index k = 0; k < n; ++k) {
        if ((static_cast<std::uint64_t>(k) & mask) != 0) {
            amps[k] = -amps[k];
        }
    }
}

void negate_marked(std::span<Complex> amps,
                   std::span<const std::uint8_t> marks) {
    const auto n = static_cast<Index>(amps.size());
#pragma omp parallel for simd
    for (Index k = 0; k < n; ++k) {
        if (marks[k] != 0) {
            amps[k] = -amps[k];
        }
    }
}

void flip_bit_where(std::span<Complex> amps, std::uint64_t bit,
                    std::span<const std::uint8_t> marks) {
    const auto n = static_cast<Index>(amps.size());
#pragma omp parallel for
    for (Index k = 0; k < n; ++k) {
        const auto b = static_cast<std::uint64_t>(k);
        if ((b & bit) == 0 && marks[b] != 0) {
            std::swap(amps[b], amps[b | bit]);
        }
    }
}

void xor_field(std::span<const Complex> in, std::span<Complex> out,
               unsigned field_offset, std::uint64_t field_mask,
               std::span<const std::uint64_t> table, unsigned shift) {
    const auto n = static_cast<Index>(in.size());
#pragma omp parallel for
    for (Index k = 0; k < n; ++k) {
        const auto b = static_cast<std::uint64_t>(k);
        const std::uint64_t f = (b >> field_offset) & field_mask;
        out[b ^ (table[f] << shift)] = in[b];
    }
}

void reflect_about_mean(std::span<Complex> amps) {
    const auto n = static_cast<Index>(amps.size());
    double re = 0.0;
    double im = 0.0;
#pragma omp parallel for reduction(+ : re, im)
    for (Index k = 0; k < n; ++k) {
        re += amps[k].real();
        im += amps[k].imag();
    }
    const Complex twice_mean =
        2.0 * Complex(re, im) / static_cast<double>(amps.size());
#pragma omp parallel for
    for (Index k = 0; k < n; ++k) {
        amps[k] = twice_mean - amps[k];
    }
}

double norm_squared(std::span<const Complex> amps) {
    const auto n = static_cast<Index>(amps.size());
    double s = 0.0;
#pragma omp parallel for reduction(+ : s)
    for (Index k = 0; k < n; ++k) {
        s += std::norm(amps[k]);
    }
    return s;
}

std::vector<double> field_marginal(std::span<const Complex> amps,
                                   unsigned offset, std::uint64_t mask) {
    const auto n = static_cast<Index>(amps.size());
    std::vector<double> out(mask + 1, 0.0);
#pragma omp parallel
    {
        std::vector<double> local(mask + 1, 0.0);
#pragma omp for nowait
        for (Index k = 0; k < n; ++k) {
            local[(static_cast<std::uint64_t>(k) >> offset) & mask] +=
                std::norm(amps[k]);
        }
#pragma omp critical
        for (std::size_t v = 0; v < out.size(); ++v) {
            out[v] += local[v];
        }
    }
    return out;
}

} // namespace omp

} // namespace qstrings::kernels
