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
#include "qstrings/bitstring.hpp"

#include <algorithm>
#include <stdexcept>

namespace qstrings {

BitString::BitString(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) {
        if (b != 0 && b != 1) {
            throw std::invalid_argument("BitString: symbols must be 0 or 1");
        }
        bits_.push_back(static_cast<std::uint8_t>(b));
    }
}

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) {
            throw std::invalid_argument("BitString: symbols must be 0 or 1");
        }
    }
}

BitString BitString::from_binary(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument(
                std::string("BitString: invalid binary digit '") + c + "'");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitString(std::move(bits));
}

BitString BitString::from_ascii(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size() * 8);
    for (unsigned char c : text) {
        for (int shift = 7; shift >= 0; --shift) {
            bits.push_back(static_cast<std::uint8_t>((c >> shift) & 1U));
        }
    }
    return BitString(std::move(bits));
}

int BitString::symbol(std::size_t i) const {
    if (i == 0 || i > bits_.size()) {
        throw std::out_of_range("BitString::symbol: position out of range");
    }
    return bits_[i - 1];
}

BitString BitString::substring(std::size_t i, std::size_t j) const {
    if (i == 0 || i > j + 1 || j > bits_.size()) {
        throw std::out_of_range("BitString::substring: invalid range");
    }
    return BitString(std::vector<std::uint8_t>(bits_.begin() + (i - 1),
                                               bits_.begin() + j));
}

std::string BitString::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) {
        out.push_back(static_cast<char>('0' + b));
    }
    return out;
}

MatchInstance::MatchInstance(BitString text, BitString pattern)
    : text_(std::move(text)), pattern_(std::move(pattern)) {
    if (pattern_.empty()) {
        throw std::invalid_argument("MatchInstance: empty pattern");
    }
    if (pattern_.size() > text_.size()) {
        throw std::invalid_argument(
            "MatchInstance: pattern longer than text");
    }
}

bool MatchInstance::occurs_at(std::size_t d) const {
    if (d == 0 || d > windows()) {
        return false;
    }
    auto s = text_.bits().subspan(d - 1, m());
    auto w = pattern_.bits();
    return std::equal(s.begin(), s.end(), w.begin());
}

std::size_t lcp_classical(const BitString &u, const BitString &v) {
    auto a = u.bits();
    auto b = v.bits();
    const auto limit = std::min(a.size(), b.size());
    std::size_t x = 0;
    while (x < limit && a[x] == b[x]) {
        ++x;
    }
    return x;
}

int compare_classical(const BitString &u, const BitString &v) {
    const auto x = lcp_classical(u, v);
    const auto t = x + 1;
    // u_t < v_t, or t = |u|+1 <= |v| (u is a proper prefix of v)
    if (t <= u.size() && t <= v.size()) {
        return u.symbol(t) < v.symbol(t) ? -1 : 1;
    }
    if (u.size() < v.size()) {
        return -1;
    }
    if (u.size() > v.size()) {
        return 1;
    }
    return 0;
}

std::vector<std::size_t> naive_match_all(const MatchInstance &inst) {
    std::vector<std::size_t> found;
    for (std::size_t d = 1; d <= inst.windows(); ++d) {
        if (inst.occurs_at(d)) {
            found.push_back(d);
        }
    }
    return found;
}

} // namespace qstrings
