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
 * Amplitudes over one index register only. Data-function registers are
 * stored as classical tables of the index; ancillas and flags are |0>.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qstrings/sim/dense_state.hpp"
#include "qstrings/sim/layout.hpp"

namespace qstrings::sim {

using IndexPredicate = std::function<bool(std::uint64_t index)>;

class StructuredState {
  public:
    /// Uniform superposition over the padded domain of `index_reg`.
    StructuredState(RegisterLayout layout, std::string index_reg,
                    std::uint64_t domain_size);

    [[nodiscard]] const RegisterLayout &layout() const { return layout_; }
    [[nodiscard]] const Register &index_register() const {
        return layout_.at(index_reg_);
    }
    [[nodiscard]] unsigned index_width() const {
        return index_register().width;
    }
    [[nodiscard]] std::uint64_t padded_size() const { return amps_.size(); }
    [[nodiscard]] std::uint64_t domain_size() const { return domain_size_; }

    [[nodiscard]] std::span<const Complex> amplitudes() const {
        return amps_;
    }
    [[nodiscard]] std::span<Complex> amplitudes() { return amps_; }

    /// Binds a data register to table[index]; the table covers the padded
    /// domain.
    void bind(std::string_view data_reg, std::vector<std::uint64_t> table);
    [[nodiscard]] const std::vector<std::uint64_t> &
    binding(std::string_view data_reg) const;
    /// Data registers in binding order.
    [[nodiscard]] const std::vector<std::string> &bound_registers() const {
        return bound_names_;
    }

    void phase_oracle(const IndexPredicate &pred);
    /// a_i -> 2 * mean - a_i over the padded domain.
    void diffusion();

    [[nodiscard]] double norm_squared() const;
    [[nodiscard]] std::vector<double> probabilities() const;
    std::uint64_t measure(Rng &rng);
    void collapse(std::uint64_t index);

  private:
    RegisterLayout layout_;
    std::string index_reg_;
    std::uint64_t domain_size_;
    std::vector<Complex> amps_;
    std::vector<std::string> bound_names_;
    std::vector<std::vector<std::uint64_t>> tables_;
};

/**
 * @brief Dense state with amplitude a on |i>|f_1(i)>...|f_k(i)>|0...> for
 * every structured amplitude a at index i.
 */
DenseState expand_structured(const StructuredState &state,
                             unsigned cap = kDenseQubitCap);

} // namespace qstrings::sim
