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

#include <cmath>
#include <numbers>

namespace qstrings::kernels {

Matrix2 hadamard() {
    const double s = 1.0 / std::numbers::sqrt2;
    return {s, s, s, -s};
}
Matrix2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
Matrix2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

namespace serial {

void apply_single_qubit(std::span<Complex> amps, unsigned target,
                        const Matrix2 &m) {
    const std::uint64_t bit = std::uint64_t{1} << target;
    const std::uint64_t lo_mask = bit - 1;
    const std::uint64_t half = amps.size() / 2;
    for (std::uint64_t i = 0; i < half; ++i) {
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
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        if ((b & cbit) != 0 && (b & tbit) == 0) {
            std::swap(amps[b], amps[b | tbit]);
        }
    }
}

void negate_outside_zero(std::span<Complex> amps, std::uint64_t mask) {
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        if ((b & mask) != 0) {
            amps[b] = -amps[b];
        }
    }
}

void negate_marked(std::span<Complex> amps,
                   std::span<const std::uint8_t> marks) {
    for (std::size_t b = 0; b < amps.size(); ++b) {
        if (marks[b] != 0) {
            amps[b] = -amps[b];
        }
    }
}

void flip_bit_where(std::span<Complex> amps, std::uint64_t bit,
                    std::span<const std::uint8_t> marks) {
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        if ((b & bit) == 0 && marks[b] != 0) {
            std::swap(amps[b], amps[b | bit]);
        }
    }
}

void xor_field(std::span<const Complex> in, std::span<Complex> out,
               unsigned field_offset, std::uint64_t field_mask,
               std::span<const std::uint64_t> table, unsigned shift) {
    for (std::uint64_t b = 0; b < in.size(); ++b) {
        const std::uint64_t f = (b >> field_offset) & field_mask;
        out[b ^ (table[f] << shift)] = in[b];
    }
}

void reflect_about_mean(std::span<Complex> amps) {
    Complex sum = 0.0;
    for (const auto &a : amps) {
        sum += a;
    }
    const Complex twice_mean = 2.0 * sum / static_cast<double>(amps.size());
    for (auto &a : amps) {
        a = twice_mean - a;
    }
}

double norm_squared(std::span<const Complex> amps) {
    double s = 0.0;
    for (const auto &a : amps) {
        s += std::norm(a);
    }
    return s;
}

std::vector<double> field_marginal(std::span<const Complex> amps,
                                   unsigned offset, std::uint64_t mask) {
    std::vector<double> out(mask + 1, 0.0);
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        out[(b >> offset) & mask] += std::norm(amps[b]);
    }
    return out;
}

} // namespace serial

namespace dispatch {

#define QSTRINGS_PICK(n) ((n) >= kParallelThreshold)

void apply_single_qubit(std::span<Complex> amps, unsigned target,
                        const Matrix2 &m) {
    QSTRINGS_PICK(amps.size()) ? omp::apply_single_qubit(amps, target, m)
                               : serial::apply_single_qubit(amps, target, m);
}
void apply_cnot(std::span<Complex> amps, unsigned control, unsigned target) {
    QSTRINGS_PICK(amps.size()) ? omp::apply_cnot(amps, control, target)
                               : serial::apply_cnot(amps, control, target);
}
void negate_outside_zero(std::span<Complex> amps, std::uint64_t mask) {
    QSTRINGS_PICK(amps.size()) ? omp::negate_outside_zero(amps, mask)
                               : serial::negate_outside_zero(amps, mask);
}
void negate_marked(std::span<Complex> amps,
                   std::span<const std::uint8_t> marks) {
    QSTRINGS_PICK(amps.size()) ? omp::negate_marked(amps, marks)
                               : serial::negate_marked(amps, marks);
}
void flip_bit_where(std::span<Complex> amps, std::uint64_t bit,
                    std::span<const std::uint8_t> marks) {
    QSTRINGS_PICK(amps.size()) ? omp::flip_bit_where(amps, bit, marks)
                               : serial::flip_bit_where(amps, bit, marks);
}
void xor_field(std::span<const Complex> in, std::span<Complex> out,
               unsigned field_offset, std::uint64_t field_mask,
               std::span<const std::uint64_t> table, unsigned shift) {
    QSTRINGS_PICK(in.size())
        ? omp::xor_field(in, out, field_offset, field_mask, table, shift)
        : serial::xor_field(in, out, field_offset, field_mask, table, shift);
}
void reflect_about_mean(std::span<Complex> amps) {
    QSTRINGS_PICK(amps.size()) ? omp::reflect_about_mean(amps)
                               : serial::reflect_about_mean(amps);
}
double norm_squared(std::span<const Complex> amps) {
    return QSTRINGS_PICK(amps.size()) ? omp::norm_squared(amps)
                                      : serial::norm_squared(amps);
}
std::vector<double> field_marginal(std::span<const Complex> amps,
                                   unsigned offset, std::uint64_t mask) {
    return QSTRINGS_PICK(amps.size())
               ? omp::field_marginal(amps, offset, mask)
               : serial::field_marginal(amps, offset, mask);
}

#undef QSTRINGS_PICK

} // namespace dispatch

} // namespace qstrings::kernels
