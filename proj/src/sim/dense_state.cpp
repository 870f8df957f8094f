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
#include "qstrings/sim/dense_state.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace qstrings::sim {

namespace kd = kernels::dispatch;

WidthExceeded::WidthExceeded(unsigned width, unsigned cap)
    : std::invalid_argument("dense state needs " + std::to_string(width) +
                            " qubits, above the cap of " +
                            std::to_string(cap)),
      width_(width) {}

DenseState::DenseState(RegisterLayout layout, unsigned cap)
    : layout_(std::move(layout)) {
    if (layout_.total_width() > std::min(cap, 62U)) {
        throw WidthExceeded(layout_.total_width(), cap);
    }
    amps_.assign(std::size_t{1} << layout_.total_width(), Complex{0.0});
    amps_[0] = 1.0;
}

DenseState::DenseState(RegisterLayout layout, std::vector<Complex> amplitudes,
                       unsigned cap)
    : layout_(std::move(layout)), amps_(std::move(amplitudes)) {
    if (layout_.total_width() > std::min(cap, 62U)) {
        throw WidthExceeded(layout_.total_width(), cap);
    }
    if (amps_.size() != (std::size_t{1} << layout_.total_width())) {
        throw std::invalid_argument("amplitude count does not match layout");
    }
}

void DenseState::apply_gate(Gate gate, std::span<const unsigned> targets) {
    const unsigned n = num_qubits();
    const std::size_t arity = gate == Gate::CNOT ? 2 : 1;
    if (targets.size() != arity) {
        throw std::invalid_argument("wrong number of gate targets");
    }
    for (const unsigned t : targets) {
        if (t >= n) {
            throw std::out_of_range("gate target " + std::to_string(t) +
                                    " outside " + std::to_string(n) +
                                    " qubits");
        }
    }
    switch (gate) {
    case Gate::H:
        kd::apply_single_qubit(amps_, targets[0], kernels::hadamard());
        break;
    case Gate::X:
        kd::apply_single_qubit(amps_, targets[0], kernels::pauli_x());
        break;
    case Gate::Z:
        kd::apply_single_qubit(amps_, targets[0], kernels::pauli_z());
        break;
    case Gate::CNOT:
        if (targets[0] == targets[1]) {
            throw std::invalid_argument("CNOT control equals target");
        }
        kd::apply_cnot(amps_, targets[0], targets[1]);
        break;
    }
}

void DenseState::prepare_uniform(std::string_view reg) {
    const auto &r = layout_.at(reg);
    for (unsigned j = 0; j < r.width; ++j) {
        apply_gate(Gate::H, {r.offset + j});
    }
}

void DenseState::xor_binding(const Binding &b) {
    const auto &data = layout_.at(b.data_reg);
    const auto &index = layout_.at(data.depends_on);
    scratch_.resize(amps_.size());
    kd::xor_field(amps_, scratch_, index.offset, index.mask(), b.table,
                  data.offset);
    amps_.swap(scratch_);
}

void DenseState::load_binding(std::string_view data_reg,
                              std::vector<std::uint64_t> table) {
    const auto &data = layout_.at(data_reg);
    if (data.role != Role::DataFunction) {
        throw LayoutError("'" + data.name + "' is not a data register");
    }
    const auto &index = layout_.at(data.depends_on);
    if (table.size() != (std::size_t{1} << index.width)) {
        throw std::invalid_argument("binding table must cover the index "
                                    "register");
    }
    for (auto &v : table) {
        if ((v & ~data.mask()) != 0) {
            throw std::invalid_argument("binding value wider than register");
        }
    }
    bindings_.push_back({data.name, std::move(table)});
    xor_binding(bindings_.back());
}

void DenseState::phase_oracle(const BasisPredicate &pred) {
    const auto flags = layout_.with_role(Role::Flag);
    if (flags.empty()) {
        throw LayoutError("phase oracle needs a flag register");
    }
    const unsigned f = flags.front()->offset;
    const std::uint64_t fbit = std::uint64_t{1} << f;

    std::vector<std::uint8_t> marks(amps_.size(), 0);
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
        if ((b & fbit) == 0) {
            marks[b] = pred(b) ? 1 : 0;
        }
    }
    apply_gate(Gate::X, {f});
    apply_gate(Gate::H, {f});
    kd::flip_bit_where(amps_, fbit, marks);
    apply_gate(Gate::H, {f});
    apply_gate(Gate::X, {f});
}

void DenseState::diffusion(std::string_view index_reg) {
    const auto &index = layout_.at(index_reg);
    for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it) {
        if (layout_.at(it->data_reg).depends_on == index.name) {
            xor_binding(*it);
        }
    }
    prepare_uniform(index.name);
    kd::negate_outside_zero(amps_, index.mask() << index.offset);
    prepare_uniform(index.name);
    for (const auto &b : bindings_) {
        if (layout_.at(b.data_reg).depends_on == index.name) {
            xor_binding(b);
        }
    }
}

double DenseState::norm_squared() const { return kd::norm_squared(amps_); }

std::vector<double>
DenseState::register_probabilities(std::string_view reg) const {
    const auto &r = layout_.at(reg);
    return kd::field_marginal(amps_, r.offset, r.mask());
}

std::uint64_t sample_index(std::span<const double> probabilities, Rng &rng) {
    double total = 0.0;
    for (const double p : probabilities) {
        total += p;
    }
    const double u = rng.uniform() * total;
    double acc = 0.0;
    std::uint64_t last_nonzero = 0;
    for (std::uint64_t i = 0; i < probabilities.size(); ++i) {
        if (probabilities[i] <= 0.0) {
            continue;
        }
        acc += probabilities[i];
        last_nonzero = i;
        if (u < acc) {
            return i;
        }
    }
    return last_nonzero;
}

void DenseState::collapse_register(std::string_view reg, std::uint64_t value) {
    const auto &r = layout_.at(reg);
    double kept = 0.0;
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
        if (r.extract(b) == value) {
            kept += std::norm(amps_[b]);
        } else {
            amps_[b] = 0.0;
        }
    }
    if (kept <= 0.0) {
        throw std::logic_error("collapse onto a zero-probability outcome");
    }
    const double scale = 1.0 / std::sqrt(kept);
    for (auto &a : amps_) {
        a *= scale;
    }
}

std::uint64_t DenseState::measure_register(std::string_view reg, Rng &rng) {
    const auto probs = register_probabilities(reg);
    const std::uint64_t value = sample_index(probs, rng);
    collapse_register(reg, value);
    return value;
}

std::uint64_t DenseState::measure(Rng &rng) {
    std::vector<double> probs(amps_.size());
    for (std::size_t b = 0; b < amps_.size(); ++b) {
        probs[b] = std::norm(amps_[b]);
    }
    const std::uint64_t basis = sample_index(probs, rng);
    std::fill(amps_.begin(), amps_.end(), Complex{0.0});
    amps_[basis] = 1.0;
    return basis;
}

void DenseState::dump(std::ostream &out) const {
    for (std::size_t b = 0; b < amps_.size(); ++b) {
        out << b << ',' << amps_[b].real() << ',' << amps_[b].imag() << '\n';
    }
}

} // namespace qstrings::sim
