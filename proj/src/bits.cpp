// Copyright 2026 The prs-lab Authors
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

#include "prslab/bits.hpp"

#include <stdexcept>

#include "prslab/errors.hpp"

namespace prslab {

BitString BitString::from_uint(std::uint64_t value, std::size_t length) {
    if (length > 64) {
        throw DomainError("BitString::from_uint: length exceeds 64");
    }
    BitString out(length);
    for (std::size_t i = 0; i < length; ++i) {
        out.bits_[length - 1 - i] = static_cast<std::uint8_t>((value >> i) & 1u);
    }
    return out;
}

BitString BitString::from_string(std::string_view s) {
    BitString out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1') {
            throw DomainError("BitString::from_string: expected only '0'/'1'");
        }
        out.bits_[i] = static_cast<std::uint8_t>(s[i] == '1');
    }
    return out;
}

BitString BitString::from_bytes(const std::vector<std::uint8_t>& bytes, std::size_t length) {
    if (length > bytes.size() * 8) {
        throw ShapeError("BitString::from_bytes: not enough bytes");
    }
    BitString out(length);
    for (std::size_t i = 0; i < length; ++i) {
        out.bits_[i] = static_cast<std::uint8_t>((bytes[i / 8] >> (7 - i % 8)) & 1u);
    }
    return out;
}

std::uint64_t BitString::to_uint() const {
    if (bits_.size() > 64) {
        throw DomainError("BitString::to_uint: length exceeds 64");
    }
    std::uint64_t v = 0;
    for (std::uint8_t b : bits_) {
        v = (v << 1) | b;
    }
    return v;
}

std::string BitString::str() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) s[i] = '1';
    }
    return s;
}

std::vector<std::uint8_t> BitString::to_bytes() const {
    std::vector<std::uint8_t> out((bits_.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    }
    return out;
}

std::string BitString::hex() const { return to_hex(to_bytes()); }

BitString BitString::concat(const BitString& other) const {
    BitString out = *this;
    out.bits_.insert(out.bits_.end(), other.bits_.begin(), other.bits_.end());
    return out;
}

BitString BitString::slice(std::size_t begin, std::size_t length) const {
    if (begin + length > bits_.size()) {
        throw ShapeError("BitString::slice: out of range");
    }
    BitString out(length);
    for (std::size_t i = 0; i < length; ++i) out.bits_[i] = bits_[begin + i];
    return out;
}

BitString BitString::resized(std::size_t length) const {
    if (bits_.empty()) {
        return BitString(length);
    }
    BitString out(length);
    for (std::size_t i = 0; i < length; ++i) out.bits_[i] = bits_[i % bits_.size()];
    return out;
}

std::string to_hex(const std::vector<std::uint8_t>& bytes) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        s.push_back(kDigits[b >> 4]);
        s.push_back(kDigits[b & 0xf]);
    }
    return s;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) {
        throw DomainError("from_hex: odd length");
    }
    auto nibble = [](char c) -> std::uint8_t {
        if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<std::uint8_t>(c - 'A' + 10);
        throw DomainError("from_hex: invalid digit");
    };
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>((nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]));
    }
    return out;
}

}  // namespace prslab
