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
#include "qstrings/sim/structured_state.hpp"

#include <algorithm>
#include <cmath>

namespace qstrings::sim {

namespace kd = kernels::dispatch;

StructuredState::StructuredState(RegisterLayout layout, std::string index_reg,
                                 std::uint64_t domain_size)
    : layout_(std::move(layout)), index_reg_(std::move(index_reg)),
      domain_size_(domain_size) {
    const auto &idx = layout_.at(index_reg_);
    if (idx.role != Role::Index) {
        throw LayoutError("'" + index_reg_ + "' is not an index register");
    }
    const std::uint64_t padded = std::uint64_t{1} << idx.width;
    if (domain_size == 0 || domain_size > padded) {
        throw std::invalid_argument("domain size does not fit the index "
                                    "register");
    }
    amps_.assign(padded,
                 Complex{1.0 / std::sqrt(static_cast<double>(padded))});
}

void StructuredState::bind(std::string_view data_reg,
                           std::vector<std::uint64_t> table) {
    const auto &r = layout_.at(data_reg);
    if (r.role != Role::DataFunction || r.depends_on != index_reg_) {
        throw LayoutError("'" + r.name + "' is not a data register of '" +
                          index_reg_ + "'");
    }
    if (table.size() != amps_.size()) {
        throw std::invalid_argument("binding table must cover the padded "
                                    "domain");
    }
    if (std::find(bound_names_.begin(), bound_names_.end(), r.name) !=
        bound_names_.end()) {
        throw LayoutError("register '" + r.name + "' already bound");
    }
    for (const auto v : table) {
        if ((v & ~r.mask()) != 0) {
            throw std::invalid_argument("binding value wider than register");
        }
    }
    bound_names_.push_back(r.name);
    tables_.push_back(std::move(table));
}

const std::vector<std::uint64_t> &
StructuredState::binding(std::string_view data_reg) const {
    for (std::size_t i = 0; i < bound_names_.size(); ++i) {
        if (bound_names_[i] == data_reg) {
            return tables_[i];
        }
    }
    throw LayoutError("register '" + std::string(data_reg) + "' is unbound");
}

void StructuredState::phase_oracle(const IndexPredicate &pred) {
    std::vector<std::uint8_t> marks(amps_.size());
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        marks[i] = pred(i) ? 1 : 0;
    }
    kd::negate_marked(amps_, marks);
}

void StructuredState::diffusion() { kd::reflect_about_mean(amps_); }

double StructuredState::norm_squared() const {
    return kd::norm_squared(amps_);
}

std::vector<double> StructuredState::probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        p[i] = std::norm(amps_[i]);
    }
    return p;
}

void StructuredState::collapse(std::uint64_t index) {
    if (index >= amps_.size() || std::norm(amps_[index]) <= 0.0) {
        throw std::logic_error("collapse onto a zero-probability outcome");
    }
    const Complex phase = amps_[index] / std::abs(amps_[index]);
    std::fill(amps_.begin(), amps_.end(), Complex{0.0});
    amps_[index] = phase;
}

std::uint64_t StructuredState::measure(Rng &rng) {
    const auto probs = probabilities();
    const std::uint64_t index = sample_index(probs, rng);
    collapse(index);
    return index;
}

DenseState expand_structured(const StructuredState &state, unsigned cap) {
    const auto &layout = state.layout();
    if (layout.total_width() > cap) {
        throw WidthExceeded(layout.total_width(), cap);
    }
    const auto &idx = state.index_register();
    std::vector<const Register *> regs;
    std::vector<const std::vector<std::uint64_t> *> tables;
    for (const auto &name : state.bound_registers()) {
        regs.push_back(&layout.at(name));
        tables.push_back(&state.binding(name));
    }
    std::vector<Complex> amps(std::size_t{1} << layout.total_width(),
                              Complex{0.0});
    const auto src = state.amplitudes();
    for (std::uint64_t i = 0; i < src.size(); ++i) {
        std::uint64_t basis = idx.place(i);
        for (std::size_t r = 0; r < regs.size(); ++r) {
            basis |= regs[r]->place((*tables[r])[i]);
        }
        amps[basis] = src[i];
    }
    return DenseState(layout, std::move(amps), cap);
}

} // namespace qstrings::sim
