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

#include "weaksim/bitstring.hpp"

#include <bit>

#include "weaksim/errors.hpp"

namespace weaksim {

BitString::BitString(std::size_t n_bits) : n_bits_(n_bits), words_((n_bits + 63) / 64, 0) {
}

BitString BitString::from_string(std::string_view text) {
    BitString result(text.size());
    for (std::size_t q = 0; q < text.size(); ++q) {
        if (text[q] == '1') {
            result.set(q, true);
        } else if (text[q] != '0') {
            throw InvalidSpec("bitstring may only contain '0' and '1': " + std::string(text));
        }
    }
    return result;
}

BitString BitString::from_index(std::uint64_t value, std::size_t n_bits) {
    if (n_bits > 64) {
        throw InvalidSpec("from_index supports at most 64 bits");
    }
    BitString result(n_bits);
    for (std::size_t q = 0; q < n_bits; ++q) {
        result.set(q, (value >> (n_bits - 1 - q)) & 1);
    }
    return result;
}

std::size_t BitString::popcount() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::uint64_t BitString::to_index() const {
    if (n_bits_ > 64) {
        throw InvalidSpec("to_index supports at most 64 bits");
    }
    if (n_bits_ == 0) {
        return 0;
    }
    return words_[0] >> (64 - n_bits_);
}

std::string BitString::to_string() const {
    std::string out(n_bits_, '0');
    for (std::size_t q = 0; q < n_bits_; ++q) {
        if ((*this)[q]) {
            out[q] = '1';
        }
    }
    return out;
}

BitString BitString::select(const std::vector<std::uint32_t> &qubits) const {
    BitString out(qubits.size());
    for (std::size_t k = 0; k < qubits.size(); ++k) {
        out.set(k, (*this)[qubits[k]]);
    }
    return out;
}

BitString BitString::complement() const {
    BitString out(*this);
    for (std::size_t q = 0; q < n_bits_; ++q) {
        out.flip(q);
    }
    return out;
}

std::strong_ordering BitString::operator<=>(const BitString &other) const {
    if (auto c = n_bits_ <=> other.n_bits_; c != 0) {
        return c;
    }
    for (std::size_t k = 0; k < words_.size(); ++k) {
        if (auto c = words_[k] <=> other.words_[k]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

std::size_t BitString::hash() const noexcept {
    std::size_t h = n_bits_ * 0x9E3779B97F4A7C15ull;
    for (auto w : words_) {
        h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace weaksim
