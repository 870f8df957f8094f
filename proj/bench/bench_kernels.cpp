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
// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <complex>
#include <cstdint>
#include <vector>

#include "qstrings/kernels.hpp"
#include "qstrings/rng.hpp"

namespace {

using qstrings::kernels::Complex;

std::vector<Complex> random_state(unsigned qubits) {
    qstrings::Rng rng(qubits);
    std::vector<Complex> v(std::size_t{1} << qubits);
    for (auto &a : v) {
        a = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
    }
    return v;
}

template <auto Kernel> void BM_Hadamard(benchmark::State &state) {
    const auto qubits = static_cast<unsigned>(state.range(0));
    auto amps = random_state(qubits);
    const auto h = qstrings::kernels::hadamard();
    for (auto _ : state) {
        for (unsigned t = 0; t < qubits; ++t) {
            Kernel(amps, t, h);
        }
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(amps.size()) * qubits);
}

template <auto Kernel> void BM_ReflectAboutMean(benchmark::State &state) {
    auto amps = random_state(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        Kernel(amps);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(amps.size()));
}

template <auto Kernel> void BM_XorField(benchmark::State &state) {
    const auto qubits = static_cast<unsigned>(state.range(0));
    const unsigned index_bits = qubits / 2;
    const auto in = random_state(qubits);
    std::vector<Complex> out(in.size());
    std::vector<std::uint64_t> table(std::size_t{1} << index_bits);
    for (std::size_t i = 0; i < table.size(); ++i) {
        table[i] = (i * 2654435761U) & ((std::uint64_t{1} << (qubits - index_bits)) - 1);
    }
    for (auto _ : state) {
        Kernel(in, out, 0, table.size() - 1, table, index_bits);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(in.size()));
}

template <auto Kernel> void BM_Marginal(benchmark::State &state) {
    const auto qubits = static_cast<unsigned>(state.range(0));
    const auto amps = random_state(qubits);
    for (auto _ : state) {
        auto m = Kernel(amps, 0, (std::uint64_t{1} << (qubits / 2)) - 1);
        benchmark::DoNotOptimize(m.data());
    }
}

namespace ks = qstrings::kernels::serial;
namespace ko = qstrings::kernels::omp;

BENCHMARK(BM_Hadamard<ks::apply_single_qubit>)->DenseRange(14, 22, 4);
BENCHMARK(BM_Hadamard<ko::apply_single_qubit>)->DenseRange(14, 22, 4);
BENCHMARK(BM_ReflectAboutMean<ks::reflect_about_mean>)->DenseRange(14, 24, 5);
BENCHMARK(BM_ReflectAboutMean<ko::reflect_about_mean>)->DenseRange(14, 24, 5);
BENCHMARK(BM_XorField<ks::xor_field>)->DenseRange(14, 22, 4);
BENCHMARK(BM_XorField<ko::xor_field>)->DenseRange(14, 22, 4);
BENCHMARK(BM_Marginal<ks::field_marginal>)->DenseRange(14, 22, 4);
BENCHMARK(BM_Marginal<ko::field_marginal>)->DenseRange(14, 22, 4);

} // namespace

BENCHMARK_MAIN();
