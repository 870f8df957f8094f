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
#include "qstrings/sim/search_register.hpp"

#include <cmath>

namespace qstrings::sim {

RegisterLayout RegisterSpec::layout() const {
    RegisterLayout layout;
    layout.add("idx", index_width, Role::Index);
    for (const auto &d : data) {
        layout.add(d.name, d.width, Role::DataFunction, "idx");
    }
    layout.add("oracle", 1, Role::Flag);
    return layout;
}

unsigned RegisterSpec::total_width() const {
    unsigned w = index_width + 1;
    for (const auto &d : data) {
        w += d.width;
    }
    return w;
}

StructuredRegister::StructuredRegister(const RegisterSpec &spec)
    : state_(spec.layout(), "idx", spec.domain_size) {
    for (const auto &d : spec.data) {
        state_.bind(d.name, d.table);
        tables_.push_back(d.table);
    }
}

void StructuredRegister::phase_oracle(const MarkFn &mark) {
    std::vector<std::uint64_t> row(tables_.size());
    state_.phase_oracle([&](std::uint64_t i) {
        for (std::size_t r = 0; r < tables_.size(); ++r) {
            row[r] = tables_[r][i];
        }
        return mark(i, row);
    });
}

std::vector<std::uint64_t> StructuredRegister::read(std::uint64_t index) {
    if (index >= padded_size()) {
        throw std::out_of_range("element index outside the register");
    }
    std::vector<std::uint64_t> row(tables_.size());
    for (std::size_t r = 0; r < tables_.size(); ++r) {
        row[r] = tables_[r][index];
    }
    return row;
}

DenseRegister::DenseRegister(const RegisterSpec &spec, unsigned cap)
    : index_width_(spec.index_width), domain_size_(spec.domain_size),
      state_(spec.layout(), cap) {
    if (domain_size_ == 0 || domain_size_ > padded_size()) {
        throw std::invalid_argument("domain size does not fit the index "
                                    "register");
    }
    state_.prepare_uniform("idx");
    for (const auto &d : spec.data) {
        state_.load_binding(d.name, d.table);
    }
}

void DenseRegister::phase_oracle(const MarkFn &mark) {
    const auto &layout = state_.layout();
    const auto &idx = layout.at("idx");
    std::vector<const Register *> data = layout.with_role(Role::DataFunction);
    std::vector<std::uint64_t> row(data.size());
    state_.phase_oracle([&](std::uint64_t basis) {
        for (std::size_t r = 0; r < data.size(); ++r) {
            row[r] = data[r]->extract(basis);
        }
        return mark(idx.extract(basis), row);
    });
}

void DenseRegister::flip_index_bits(std::uint64_t pattern) {
    for (unsigned j = 0; j < index_width_; ++j) {
        if (((pattern >> j) & 1U) != 0) {
            state_.apply_gate(Gate::X, {j});
        }
    }
}

std::vector<std::uint64_t> DenseRegister::read(std::uint64_t index) {
    if (index >= padded_size()) {
        throw std::out_of_range("element index outside the register");
    }
    flip_index_bits(index);
    const auto &layout = state_.layout();
    const auto &idx = layout.at("idx");
    const auto data = layout.with_role(Role::DataFunction);
    std::vector<std::uint64_t> row(data.size(), 0);
    const auto amps = state_.amplitudes();
    bool seen = false;
    for (std::uint64_t b = 0; b < amps.size() && !seen; ++b) {
        if (idx.extract(b) == 0 && std::norm(amps[b]) > 0.0) {
            for (std::size_t r = 0; r < data.size(); ++r) {
                row[r] = data[r]->extract(b);
            }
            seen = true;
        }
    }
    flip_index_bits(index);
    if (!seen) {
        throw std::logic_error("element has no amplitude to read");
    }
    return row;
}

LockstepRegister::LockstepRegister(const RegisterSpec &spec,
                                   LockstepReport *report, double fault)
    : structured_(spec), dense_(spec), report_(report), fault_(fault) {
    compare();
}

void LockstepRegister::compare() {
    const DenseState expanded = expand_structured(structured_.state());
    const auto a = expanded.amplitudes();
    const auto b = dense_.state().amplitudes();
    double worst = 0.0;
    std::optional<std::uint64_t> first;
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        const double d = std::abs(a[i] - b[i]);
        worst = std::max(worst, d);
        if (d > kTolerance && !first) {
            first = i;
        }
    }
    if (report_ == nullptr) {
        return;
    }
    ++report_->steps;
    report_->max_deviation = std::max(report_->max_deviation, worst);
    if (first && !report_->first_mismatch) {
        report_->first_mismatch = first;
        report_->mismatch_step = report_->steps;
    }
}

void LockstepRegister::phase_oracle(const MarkFn &mark) {
    structured_.phase_oracle(mark);
    dense_.phase_oracle(mark);
    if (fault_ != 0.0 && !fault_applied_) {
        structured_.state().amplitudes()[0] += fault_;
        fault_applied_ = true;
    }
    compare();
}

void LockstepRegister::diffusion() {
    structured_.diffusion();
    dense_.diffusion();
    compare();
}

std::uint64_t LockstepRegister::measure_index(Rng &rng) {
    const std::uint64_t index = structured_.measure_index(rng);
    dense_.collapse_index(index);
    compare();
    return index;
}

std::vector<std::uint64_t> LockstepRegister::read(std::uint64_t index) {
    auto s = structured_.read(index);
    const auto d = dense_.read(index);
    compare();
    if (s != d && report_ != nullptr && !report_->first_mismatch) {
        report_->first_mismatch = index;
        report_->mismatch_step = report_->steps;
        report_->max_deviation = std::max(report_->max_deviation, 1.0);
    }
    return s;
}

std::unique_ptr<SearchRegister> make_register(const RegisterSpec &spec,
                                              Backend backend,
                                              LockstepReport *report,
                                              double fault) {
    switch (backend) {
    case Backend::Structured:
        return std::make_unique<StructuredRegister>(spec);
    case Backend::Dense:
        return std::make_unique<DenseRegister>(spec);
    case Backend::Lockstep:
        return std::make_unique<LockstepRegister>(spec, report, fault);
    }
    throw std::invalid_argument("unknown backend");
}

std::unique_ptr<SearchRegister> CopySupply::take() {
    if (used_ >= limit_) {
        throw CopyExhausted("all " + std::to_string(limit_) +
                            " state copies consumed");
    }
    ++used_;
    return factory_();
}

} // namespace qstrings::sim
