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
#include "qstrings/resources.hpp"

#include <array>
#include <stdexcept>

#include "qstrings/fingerprint.hpp"
#include "qstrings/qcompare.hpp"
#include "qstrings/qmatch.hpp"

namespace qstrings {

namespace {

constexpr std::array<std::string_view, 6> kKindNames = {
    "diffusion", "oracle_query", "inner_grover_iteration",
    "access",    "hash_eval",    "grover_iteration",
};

std::uint64_t &slot(PhaseCharges &p, ChargeKind kind) {
    switch (kind) {
    case ChargeKind::Diffusion:
        return p.diffusion_units;
    case ChargeKind::OracleQuery:
        return p.oracle_queries;
    case ChargeKind::InnerGroverIteration:
        return p.inner_grover_iterations;
    case ChargeKind::Access:
        return p.access_units;
    case ChargeKind::HashEval:
        return p.hash_eval_units;
    case ChargeKind::GroverIteration:
        return p.grover_iterations;
    }
    throw std::invalid_argument("unknown charge kind");
}

} // namespace

std::string_view to_string(ChargeKind kind) {
    return kKindNames.at(static_cast<std::size_t>(kind));
}

ChargeKind charge_kind_from_string(std::string_view name) {
    for (std::size_t i = 0; i < kKindNames.size(); ++i) {
        if (kKindNames[i] == name) {
            return static_cast<ChargeKind>(i);
        }
    }
    throw std::invalid_argument("unknown charge kind '" + std::string(name) +
                                "'");
}

void ResourceLedger::charge(ChargeKind kind, std::uint64_t amount) {
    switch (kind) {
    case ChargeKind::Diffusion:
        diffusion_units += amount;
        break;
    case ChargeKind::OracleQuery:
        oracle_queries += amount;
        break;
    case ChargeKind::InnerGroverIteration:
        inner_grover_iterations += amount;
        break;
    case ChargeKind::Access:
        access_units += amount;
        break;
    case ChargeKind::HashEval:
        hash_eval_units += amount;
        break;
    case ChargeKind::GroverIteration:
        grover_iterations += amount;
        break;
    }
    if (!phases.empty()) {
        slot(phases.back(), kind) += amount;
    }
}

void ResourceLedger::charge(std::string_view kind, std::uint64_t amount) {
    charge(charge_kind_from_string(kind), amount);
}

void ResourceLedger::begin_phase(std::string label) {
    phases.push_back(PhaseCharges{.label = std::move(label)});
}

std::uint64_t inner_ancillas(unsigned hash_width, unsigned rho) {
    return std::uint64_t{ceil_log2(hash_width)} + 2 + ceil_log2(rho + 1ULL);
}

std::uint64_t qubit_count_match(std::uint64_t n, std::uint64_t m,
                                double epsilon) {
    const auto plan = plan_match(n, m, epsilon);
    const std::uint64_t q = plan.index_width;
    const std::uint64_t w = plan.hash_width;
    return w + plan.copies * (q + w) + 1 + inner_ancillas(plan.hash_width,
                                                          plan.rho_search);
}

std::uint64_t qubit_count_match_unique(std::uint64_t n, std::uint64_t m,
                                       double epsilon) {
    const auto plan = plan_match(n, m, epsilon);
    const std::uint64_t q = plan.index_width;
    const std::uint64_t w = plan.hash_width;
    return q + 2 * w + 1 + inner_ancillas(plan.hash_width, plan.rho_unique);
}

std::uint64_t qubit_count_compare_grover(std::uint64_t k) {
    if (k == 0) {
        throw std::invalid_argument("k must be positive");
    }
    const std::uint64_t q = ceil_log2(k);
    const std::uint64_t c = std::max<std::uint64_t>(1, q);
    return (q + 2) + 3 * c * c * (q + 2) + 1 + ceil_log2(k + 1) + 2;
}

std::uint64_t qubit_count_compare_bsearch(std::uint64_t k, double epsilon) {
    if (k == 0) {
        throw std::invalid_argument("k must be positive");
    }
    const std::uint64_t q = ceil_log2(k);
    const std::uint64_t c = std::max<std::uint64_t>(1, q);
    const unsigned w = universe_width(k, k, epsilon);
    const unsigned rho = bsearch_majority(k, w);
    return (q + 1) + c * (q + 2 * w) + inner_ancillas(w, rho);
}

} // namespace qstrings
