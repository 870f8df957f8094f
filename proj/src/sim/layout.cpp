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
#include "qstrings/sim/layout.hpp"

#include <algorithm>

namespace qstrings::sim {

RegisterLayout &RegisterLayout::add(std::string name, unsigned width,
                                    Role role, std::string depends_on) {
    if (name.empty() || contains(name)) {
        throw LayoutError("register name empty or duplicated: '" + name +
                          "'");
    }
    if (width == 0 && role != Role::Index) {
        throw LayoutError("register '" + name + "' has width 0");
    }
    if (role == Role::DataFunction) {
        if (!contains(depends_on) || at(depends_on).role != Role::Index) {
            throw LayoutError("data register '" + name +
                              "' must depend on an index register");
        }
    } else if (!depends_on.empty()) {
        throw LayoutError("only data registers declare a dependency");
    }
    if (width > 64) {
        throw LayoutError("register '" + name + "' wider than 64 qubits");
    }
    registers_.push_back(
        {std::move(name), width, role, total_width_, std::move(depends_on)});
    total_width_ += width;
    return *this;
}

const Register &RegisterLayout::at(std::string_view name) const {
    const auto it =
        std::find_if(registers_.begin(), registers_.end(),
                     [&](const Register &r) { return r.name == name; });
    if (it == registers_.end()) {
        throw LayoutError("no register named '" + std::string(name) + "'");
    }
    return *it;
}

bool RegisterLayout::contains(std::string_view name) const {
    return std::any_of(registers_.begin(), registers_.end(),
                       [&](const Register &r) { return r.name == name; });
}

std::vector<const Register *> RegisterLayout::with_role(Role role) const {
    std::vector<const Register *> out;
    for (const auto &r : registers_) {
        if (r.role == role) {
            out.push_back(&r);
        }
    }
    return out;
}

} // namespace qstrings::sim
