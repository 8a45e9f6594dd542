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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "prslab/bits.hpp"
#include "prslab/rng.hpp"

namespace prslab {

/// k in {0,1}^lambda, stored MSB-first with zero padding.
class PrfKey {
   public:
    PrfKey() = default;
    explicit PrfKey(BitString bits);

    static PrfKey from_uint(std::uint64_t value, std::size_t bits);
    static PrfKey from_hex(std::string_view hex, std::size_t bits);
    static PrfKey random(std::size_t bits, Rng& rng);

    std::size_t bits() const noexcept { return bits_.size(); }
    const BitString& bit_string() const noexcept { return bits_; }
    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
    std::string hex() const { return to_hex(bytes_); }
    /// Value of the key; requires bits() <= 64.
    std::uint64_t to_uint() const { return bits_.to_uint(); }

    bool operator==(const PrfKey&) const = default;

   private:
    BitString bits_;
    std::vector<std::uint8_t> bytes_;
};

enum class PrfVariant {
    /// Seeded splitmix64 mixer; bit-stable everywhere, not a PRF.
    Test,
    /// HMAC-SHA256 in counter mode.
    Crypto,
    /// Always outputs zeros.
    Zero,
};

std::string variant_name(PrfVariant v);
PrfVariant parse_variant(std::string_view name);

/// F : {0,1}^lambda x {0,1}^d -> {0,1}^m. `domain` separates otherwise equal
/// specifications (e.g. F1 and F2 of the keyed-subkey construction).
struct PrfSpec {
    PrfVariant variant = PrfVariant::Test;
    std::size_t in_bits = 1;
    std::size_t out_bits = 1;
    std::uint8_t domain = 0;
    std::uint64_t seed = 0;

    void validate() const;
};

BitString prf_eval(const PrfSpec& spec, const PrfKey& key, const BitString& input);
bool prf_bit(const PrfSpec& spec, const PrfKey& key, const BitString& input);

/// The byte string every variant absorbs; lengths are prefixed so that
/// distinct (lambda, d, m, input) never share an encoding.
std::vector<std::uint8_t> prf_encode(const PrfSpec& spec, const PrfKey& key, const BitString& input);

struct PrfVector {
    PrfKey key;
    BitString input;
    BitString output;
};

/// One vector per line: "<lambda> <key hex> <d> <input hex> <m> <output hex>".
/// Lines starting with '#' are comments; the header records variant and seed.
void write_prf_fixture(const std::filesystem::path& path, const PrfSpec& spec,
                       const std::vector<PrfVector>& vectors);
std::vector<PrfVector> read_prf_fixture(const std::filesystem::path& path);

}  // namespace prslab
