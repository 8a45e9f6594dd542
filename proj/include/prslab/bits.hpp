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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace prslab {

/// Fixed-length bit string. Bit 0 is the leftmost (most significant) bit, so
/// `from_uint(5, 3)` is "101" and indexes basis state |101> = |5>.
class BitString {
   public:
    BitString() = default;
    explicit BitString(std::size_t length) : bits_(length, 0) {}

    static BitString from_uint(std::uint64_t value, std::size_t length);
    static BitString from_string(std::string_view s);  // "0101"
    static BitString from_bytes(const std::vector<std::uint8_t>& bytes, std::size_t length);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    bool operator[](std::size_t i) const { return bits_[i] != 0; }
    void set(std::size_t i, bool v) { bits_[i] = v ? 1 : 0; }

    /// Value with bit 0 as MSB; requires size() <= 64.
    std::uint64_t to_uint() const;
    std::string str() const;
    /// Packed MSB-first bytes, zero padded at the end.
    std::vector<std::uint8_t> to_bytes() const;
    std::string hex() const;

    BitString concat(const BitString& other) const;
    BitString slice(std::size_t begin, std::size_t length) const;
    /// Truncate or cyclically extend to `length` bits.
    BitString resized(std::size_t length) const;

    bool operator==(const BitString&) const = default;

   private:
    std::vector<std::uint8_t> bits_;
};

std::string to_hex(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> from_hex(std::string_view hex);

}  // namespace prslab
