// Copyright 2026 The weaksim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WEAKSIM_BITSTRING_HPP
#define WEAKSIM_BITSTRING_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace weaksim {

/// Fixed-length measurement record. Qubit 0 is the leftmost character when
/// rendered and the most significant bit of the integer encoding.
///
/// Bits are packed so that comparing the word vectors lexicographically
/// matches comparing the big-endian integers.
class BitString {
  public:
    BitString() = default;
    explicit BitString(std::size_t n_bits);

    /// Parses a string of '0'/'1' characters. Throws std::invalid_argument.
    static BitString from_string(std::string_view text);
    /// Big-endian decode of the low `n_bits` bits of `value` (n_bits <= 64).
    static BitString from_index(std::uint64_t value, std::size_t n_bits);

    std::size_t size() const noexcept {
        return n_bits_;
    }

    bool operator[](std::size_t q) const noexcept {
        return (words_[q >> 6] >> (63 - (q & 63))) & 1;
    }
    void set(std::size_t q, bool value) noexcept {
        std::uint64_t mask = std::uint64_t{1} << (63 - (q & 63));
        if (value) {
            words_[q >> 6] |= mask;
        } else {
            words_[q >> 6] &= ~mask;
        }
    }
    void flip(std::size_t q) noexcept {
        words_[q >> 6] ^= std::uint64_t{1} << (63 - (q & 63));
    }

    std::size_t popcount() const noexcept;

    /// Big-endian integer value. Requires size() <= 64.
    std::uint64_t to_index() const;
    std::string to_string() const;

    /// Bits at `qubits`, in that order, as a new string.
    BitString select(const std::vector<std::uint32_t> &qubits) const;

    BitString complement() const;

    bool operator==(const BitString &other) const = default;
    std::strong_ordering operator<=>(const BitString &other) const;

    std::size_t hash() const noexcept;

  private:
    std::size_t n_bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace weaksim

template <>
struct std::hash<weaksim::BitString> {
    std::size_t operator()(const weaksim::BitString &b) const noexcept {
        return b.hash();
    }
};

#endif
