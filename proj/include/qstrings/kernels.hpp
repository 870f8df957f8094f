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
 * Amplitude kernels. Every kernel exists twice with the same signature: a
 * plain loop in `serial` (the reference the tests compare against) and an
 * OpenMP version in `omp`. `dispatch` picks one by problem size.
 *
 * Basis index bit b is qubit b; qubit 0 is the least significant bit.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qstrings::kernels {

using Complex = std::complex<double>;

struct Matrix2 {
    Complex m00, m01, m10, m11;
};

/// Single-qubit gates.
Matrix2 hadamard();
Matrix2 pauli_x();
Matrix2 pauli_z();

/// Below this many amplitudes the OpenMP kernels are not worth their fork.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14U;

#define QSTRINGS_KERNEL_DECLS                                                  \
    void apply_single_qubit(std::span<Complex> amps, unsigned target,          \
                            const Matrix2 &m);                                 \
    void apply_cnot(std::span<Complex> amps, unsigned control,                 \
                    unsigned target);                                          \
    /* negate amps[b] where (b & mask) != 0 */                                 \
    void negate_outside_zero(std::span<Complex> amps, std::uint64_t mask);     \
    /* negate amps[b] where marks[b] != 0 */                                   \
    void negate_marked(std::span<Complex> amps,                                \
                       std::span<const std::uint8_t> marks);                   \
    /* swap amps[b] and amps[b | bit] for every b without `bit` where */       \
    /* marks[b] != 0 (X on an ancilla, controlled by a predicate) */           \
    void flip_bit_where(std::span<Complex> amps, std::uint64_t bit,            \
                        std::span<const std::uint8_t> marks);                  \
    /* out[b ^ (table[field(b)] << shift)] = in[b], field(b) is */             \
    /* (b >> field_offset) & field_mask */                                     \
    void xor_field(std::span<const Complex> in, std::span<Complex> out,        \
                   unsigned field_offset, std::uint64_t field_mask,            \
                   std::span<const std::uint64_t> table, unsigned shift);      \
    /* a_i -> 2 * mean - a_i */                                                \
    void reflect_about_mean(std::span<Complex> amps);                          \
    double norm_squared(std::span<const Complex> amps);                        \
    /* probability mass per value of the field (b >> offset) & mask */         \
    std::vector<double> field_marginal(std::span<const Complex> amps,          \
                                       unsigned offset, std::uint64_t mask);

namespace serial {
QSTRINGS_KERNEL_DECLS
} // namespace serial

namespace omp {
QSTRINGS_KERNEL_DECLS
} // namespace omp

namespace dispatch {
QSTRINGS_KERNEL_DECLS
} // namespace dispatch

#undef QSTRINGS_KERNEL_DECLS

/// Whether the omp kernels were compiled with OpenMP enabled.
bool openmp_enabled();

} // namespace qstrings::kernels
