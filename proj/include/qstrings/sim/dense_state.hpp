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
 * Exact statevector over a RegisterLayout, driven by H, X, Z and CNOT plus
 * the composite steps the search algorithms need.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qstrings/kernels.hpp"
#include "qstrings/rng.hpp"
#include "qstrings/sim/layout.hpp"

namespace qstrings::sim {

using Complex = kernels::Complex;

/// Largest dense state the simulator will allocate by default.
inline constexpr unsigned kDenseQubitCap = 24;

enum class Gate { H, X, Z, CNOT };

class WidthExceeded : public std::invalid_argument {
  public:
    WidthExceeded(unsigned width, unsigned cap);
    [[nodiscard]] unsigned width() const { return width_; }

  private:
    unsigned width_;
};

/// Predicate over full basis indices.
using BasisPredicate = std::function<bool(std::uint64_t basis)>;

class DenseState {
  public:
    /// |0...0> over the layout.
    explicit DenseState(RegisterLayout layout, unsigned cap = kDenseQubitCap);
    DenseState(RegisterLayout layout, std::vector<Complex> amplitudes,
               unsigned cap = kDenseQubitCap);

    [[nodiscard]] const RegisterLayout &layout() const { return layout_; }
    [[nodiscard]] unsigned num_qubits() const { return layout_.total_width(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const {
        return amps_;
    }
    [[nodiscard]] std::span<Complex> amplitudes() { return amps_; }

    /// CNOT takes {control, target}; the other gates take one target.
    void apply_gate(Gate gate, std::span<const unsigned> targets);
    void apply_gate(Gate gate, std::initializer_list<unsigned> targets) {
        apply_gate(gate, std::span<const unsigned>(targets.begin(),
                                                   targets.size()));
    }

    /// H on every qubit of the register.
    void prepare_uniform(std::string_view reg);

    /**
     * @brief XORs table[value of the index register] into a data register
     * and remembers the binding so diffusion can undo and redo it.
     */
    void load_binding(std::string_view data_reg,
                      std::vector<std::uint64_t> table);

    /**
     * @brief Multiplies every basis amplitude by (-1)^pred(basis), through
     * the layout's flag qubit prepared in (|0> - |1>)/sqrt(2) and returned
     * to |0> afterwards. `pred` sees bases with the flag qubit clear.
     */
    void phase_oracle(const BasisPredicate &pred);

    /**
     * @brief Reflection of the index register about its uniform state.
     * Bindings on that register are unloaded first and reloaded after.
     */
    void diffusion(std::string_view index_reg);

    [[nodiscard]] double norm_squared() const;
    [[nodiscard]] std::vector<double>
    register_probabilities(std::string_view reg) const;

    /// Samples the register from the Born rule and collapses onto it.
    std::uint64_t measure_register(std::string_view reg, Rng &rng);
    /// Projects the register onto `value` and renormalises.
    void collapse_register(std::string_view reg, std::uint64_t value);
    /// Samples a full basis index; collapses to it.
    std::uint64_t measure(Rng &rng);

    /// One `basis_index,re,im` line per basis state.
    void dump(std::ostream &out) const;

  private:
    struct Binding {
        std::string data_reg;
        std::vector<std::uint64_t> table;
    };
    void xor_binding(const Binding &b);

    RegisterLayout layout_;
    std::vector<Complex> amps_;
    std::vector<Complex> scratch_;
    std::vector<Binding> bindings_;
};

/// Samples an index from unnormalised probabilities.
std::uint64_t sample_index(std::span<const double> probabilities, Rng &rng);

} // namespace qstrings::sim
