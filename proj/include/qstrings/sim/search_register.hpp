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
 * One copy of a search state: an index register in uniform superposition
 * entangled with data registers that are functions of the index. The three
 * backends (structured, dense, lockstep) expose the same operations.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qstrings/rng.hpp"
#include "qstrings/sim/dense_state.hpp"
#include "qstrings/sim/structured_state.hpp"

namespace qstrings::sim {

/// Predicate evaluated on an index and the data registers bound to it.
using MarkFn =
    std::function<bool(std::uint64_t index, std::span<const std::uint64_t>)>;

struct DataRegisterSpec {
    std::string name;
    unsigned width = 1;
    /// table[i] for i in [0, 2^index_width).
    std::vector<std::uint64_t> table;
};

struct RegisterSpec {
    unsigned index_width = 0;
    std::uint64_t domain_size = 1;
    std::vector<DataRegisterSpec> data;

    /// "idx", the data registers, then a one-qubit "oracle" flag.
    [[nodiscard]] RegisterLayout layout() const;
    [[nodiscard]] unsigned total_width() const;
};

class SearchRegister {
  public:
    virtual ~SearchRegister() = default;

    [[nodiscard]] virtual unsigned index_width() const = 0;
    [[nodiscard]] virtual std::uint64_t domain_size() const = 0;
    [[nodiscard]] std::uint64_t padded_size() const {
        return std::uint64_t{1} << index_width();
    }

    virtual void phase_oracle(const MarkFn &mark) = 0;
    virtual void diffusion() = 0;
    [[nodiscard]] virtual std::vector<double> index_probabilities() const = 0;
    virtual std::uint64_t measure_index(Rng &rng) = 0;
    /// Data register values at `index` (element access).
    virtual std::vector<std::uint64_t> read(std::uint64_t index) = 0;
};

class StructuredRegister final : public SearchRegister {
  public:
    explicit StructuredRegister(const RegisterSpec &spec);

    unsigned index_width() const override { return state_.index_width(); }
    std::uint64_t domain_size() const override {
        return state_.domain_size();
    }
    void phase_oracle(const MarkFn &mark) override;
    void diffusion() override { state_.diffusion(); }
    std::vector<double> index_probabilities() const override {
        return state_.probabilities();
    }
    std::uint64_t measure_index(Rng &rng) override {
        return state_.measure(rng);
    }
    std::vector<std::uint64_t> read(std::uint64_t index) override;

    [[nodiscard]] const StructuredState &state() const { return state_; }
    [[nodiscard]] StructuredState &state() { return state_; }

  private:
    StructuredState state_;
    std::vector<std::vector<std::uint64_t>> tables_;
};

class DenseRegister final : public SearchRegister {
  public:
    explicit DenseRegister(const RegisterSpec &spec,
                           unsigned cap = kDenseQubitCap);

    unsigned index_width() const override { return index_width_; }
    std::uint64_t domain_size() const override { return domain_size_; }
    void phase_oracle(const MarkFn &mark) override;
    void diffusion() override { state_.diffusion("idx"); }
    std::vector<double> index_probabilities() const override {
        return state_.register_probabilities("idx");
    }
    std::uint64_t measure_index(Rng &rng) override {
        return state_.measure_register("idx", rng);
    }
    /// X gates send `index` to 0, the data is read on the index-0 branch,
    /// and the X gates are undone.
    std::vector<std::uint64_t> read(std::uint64_t index) override;

    void collapse_index(std::uint64_t index) {
        state_.collapse_register("idx", index);
    }
    [[nodiscard]] const DenseState &state() const { return state_; }

  private:
    void flip_index_bits(std::uint64_t pattern);

    unsigned index_width_;
    std::uint64_t domain_size_;
    DenseState state_;
};

/// Running comparison between the two backends.
struct LockstepReport {
    std::uint64_t steps = 0;
    double max_deviation = 0.0;
    /// Dense basis index of the first amplitude over tolerance.
    std::optional<std::uint64_t> first_mismatch;
    std::uint64_t mismatch_step = 0;
};

/**
 * @brief Runs a structured and a dense copy side by side and compares
 * their amplitudes after every step. Measurements are sampled from the
 * structured copy; both collapse to the same outcome.
 */
class LockstepRegister final : public SearchRegister {
  public:
    static constexpr double kTolerance = 1e-9;

    /// A nonzero `fault` is added to structured amplitude 0 after the first
    /// oracle step.
    LockstepRegister(const RegisterSpec &spec, LockstepReport *report,
                     double fault = 0.0);

    unsigned index_width() const override {
        return structured_.index_width();
    }
    std::uint64_t domain_size() const override {
        return structured_.domain_size();
    }
    void phase_oracle(const MarkFn &mark) override;
    void diffusion() override;
    std::vector<double> index_probabilities() const override {
        return structured_.index_probabilities();
    }
    std::uint64_t measure_index(Rng &rng) override;
    std::vector<std::uint64_t> read(std::uint64_t index) override;

  private:
    void compare();

    StructuredRegister structured_;
    DenseRegister dense_;
    LockstepReport *report_;
    double fault_;
    bool fault_applied_ = false;
};

enum class Backend { Structured, Dense, Lockstep };

std::unique_ptr<SearchRegister>
make_register(const RegisterSpec &spec, Backend backend,
              LockstepReport *report = nullptr, double fault = 0.0);

class CopyExhausted : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Hands out fresh copies of a state up to a fixed number.
class CopySupply {
  public:
    using Factory = std::function<std::unique_ptr<SearchRegister>()>;

    CopySupply(Factory factory, std::uint64_t limit)
        : factory_(std::move(factory)), limit_(limit) {}

    std::unique_ptr<SearchRegister> take();
    [[nodiscard]] std::uint64_t used() const { return used_; }
    [[nodiscard]] std::uint64_t limit() const { return limit_; }
    [[nodiscard]] std::uint64_t remaining() const { return limit_ - used_; }

  private:
    Factory factory_;
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

} // namespace qstrings::sim
