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
 * Named qubit registers laid out over one basis index. Register qubit 0 is
 * the least significant bit of its field.
 */
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qstrings::sim {

enum class Role { Index, DataFunction, Ancilla, Flag };

struct Register {
    std::string name;
    unsigned width = 0;
    Role role = Role::Ancilla;
    unsigned offset = 0;
    /// For data-function registers: the index register they are a function
    /// of.
    std::string depends_on;

    [[nodiscard]] std::uint64_t mask() const {
        return width == 0 ? 0 : (~std::uint64_t{0} >> (64U - width));
    }
    [[nodiscard]] std::uint64_t extract(std::uint64_t basis) const {
        return (basis >> offset) & mask();
    }
    [[nodiscard]] std::uint64_t place(std::uint64_t value) const {
        return (value & mask()) << offset;
    }
};

class LayoutError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/**
 * @brief Ordered set of registers; offsets are assigned in insertion order.
 *
 * Index registers may have width 0 (a one-element domain). Every other
 * register has width >= 1. Names are unique.
 */
class RegisterLayout {
  public:
    RegisterLayout &add(std::string name, unsigned width, Role role,
                        std::string depends_on = {});

    [[nodiscard]] const Register &at(std::string_view name) const;
    [[nodiscard]] bool contains(std::string_view name) const;
    [[nodiscard]] std::span<const Register> registers() const {
        return registers_;
    }
    [[nodiscard]] unsigned total_width() const { return total_width_; }
    [[nodiscard]] std::vector<const Register *> with_role(Role role) const;

  private:
    std::vector<Register> registers_;
    unsigned total_width_ = 0;
};

} // namespace qstrings::sim
