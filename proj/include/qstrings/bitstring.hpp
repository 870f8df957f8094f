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
 * Binary strings and the exact classical reference algorithms that every
 * quantum result is checked against.
 */
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qstrings {

/**
 * @brief Immutable sequence of bits.
 *
 * Public positions are 1-indexed (`symbol(1)` is the first bit), matching the
 * usual u[i,j] notation. `bits()` exposes the 0-indexed storage.
 */
class BitString {
  public:
    BitString() = default;
    BitString(std::initializer_list<int> bits);
    explicit BitString(std::vector<std::uint8_t> bits);

    /// Parses a string of '0'/'1' characters; throws std::invalid_argument
    /// on anything else.
    static BitString from_binary(std::string_view text);
    /// Expands every byte most-significant bit first.
    static BitString from_ascii(std::string_view text);

    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    [[nodiscard]] bool empty() const noexcept { return bits_.empty(); }

    /// 1-indexed access; throws std::out_of_range.
    [[nodiscard]] int symbol(std::size_t i) const;

    /// u[i,j], 1-indexed and inclusive. Defined for 1 <= i <= j+1 <= size()+1;
    /// substring(i, i-1) is the empty string.
    [[nodiscard]] BitString substring(std::size_t i, std::size_t j) const;

    [[nodiscard]] std::span<const std::uint8_t> bits() const noexcept {
        return bits_;
    }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const BitString &, const BitString &) = default;

  private:
    std::vector<std::uint8_t> bits_;
};

/// Text s and pattern w of the matching problem, 1 <= |w| <= |s|.
class MatchInstance {
  public:
    MatchInstance(BitString text, BitString pattern);

    [[nodiscard]] const BitString &text() const noexcept { return text_; }
    [[nodiscard]] const BitString &pattern() const noexcept {
        return pattern_;
    }
    [[nodiscard]] std::size_t n() const noexcept { return text_.size(); }
    [[nodiscard]] std::size_t m() const noexcept { return pattern_.size(); }
    /// Number of length-m windows, N = n - m + 1.
    [[nodiscard]] std::size_t windows() const noexcept {
        return text_.size() - pattern_.size() + 1;
    }
    /// True iff s[d, d+m-1] = w (d is 1-indexed).
    [[nodiscard]] bool occurs_at(std::size_t d) const;

  private:
    BitString text_;
    BitString pattern_;
};

/// Largest x with u[1,x] = v[1,x].
std::size_t lcp_classical(const BitString &u, const BitString &v);

/// Lexicographic comparison: -1 if u < v, +1 if u > v, 0 if equal.
int compare_classical(const BitString &u, const BitString &v);

/// Every 1-indexed d with s[d, d+m-1] = w, ascending.
std::vector<std::size_t> naive_match_all(const MatchInstance &inst);

} // namespace qstrings
