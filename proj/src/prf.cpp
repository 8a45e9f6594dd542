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

#include "prslab/prf.hpp"

#include <openssl/evp.h>
#include <openssl/hmac.h>

#include <array>
#include <fstream>
#include <sstream>

#include "prslab/errors.hpp"

namespace prslab {

namespace {

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 7; i >= 0; --i) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

BitString eval_test(const PrfSpec& spec, const std::vector<std::uint8_t>& msg) {
    std::uint64_t h = splitmix64(spec.seed ^ 0x5052462D54455354ull);
    for (std::uint8_t byte : msg) {
        h = splitmix64(h ^ byte);
    }
    std::vector<std::uint8_t> stream;
    stream.reserve((spec.out_bits + 63) / 64 * 8);
    for (std::uint64_t block = 0; stream.size() * 8 < spec.out_bits; ++block) {
        put_u64(stream, splitmix64(h + splitmix64(block)));
    }
    return BitString::from_bytes(stream, spec.out_bits);
}

BitString eval_crypto(const PrfSpec& spec, const PrfKey& key, std::vector<std::uint8_t> msg) {
    std::vector<std::uint8_t> stream;
    const std::size_t prefix = msg.size();
    std::array<std::uint8_t, EVP_MAX_MD_SIZE> mac{};
    for (std::uint64_t block = 0; stream.size() * 8 < spec.out_bits; ++block) {
        msg.resize(prefix);
        put_u64(msg, block);
        unsigned int len = 0;
        const std::uint8_t* k = key.bytes().empty() ? mac.data() : key.bytes().data();
        if (HMAC(EVP_sha256(), k, static_cast<int>(key.bytes().size()), msg.data(), msg.size(),
                 mac.data(), &len) == nullptr) {
            throw NumericError("HMAC-SHA256 evaluation failed");
        }
        stream.insert(stream.end(), mac.begin(), mac.begin() + len);
    }
    return BitString::from_bytes(stream, spec.out_bits);
}

}  // namespace

PrfKey::PrfKey(BitString bits) : bits_(std::move(bits)), bytes_(bits_.to_bytes()) {}

PrfKey PrfKey::from_uint(std::uint64_t value, std::size_t bits) {
    return PrfKey(BitString::from_uint(value, bits));
}

PrfKey PrfKey::from_hex(std::string_view hex, std::size_t bits) {
    return PrfKey(BitString::from_bytes(prslab::from_hex(hex), bits));
}

PrfKey PrfKey::random(std::size_t bits, Rng& rng) {
    BitString b(bits);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < bits; ++i) {
        if (i % 64 == 0) {
            word = rng.next_u64();
        }
        b.set(i, (word >> (63 - i % 64)) & 1u);
    }
    return PrfKey(std::move(b));
}

std::string variant_name(PrfVariant v) {
    switch (v) {
        case PrfVariant::Test:
            return "test";
        case PrfVariant::Crypto:
            return "hmac-sha256";
        case PrfVariant::Zero:
            return "zero";
    }
    return "unknown";
}

PrfVariant parse_variant(std::string_view name) {
    if (name == "test") return PrfVariant::Test;
    if (name == "hmac-sha256" || name == "crypto") return PrfVariant::Crypto;
    if (name == "zero") return PrfVariant::Zero;
    throw DomainError("unknown PRF variant '" + std::string(name) + "'");
}

void PrfSpec::validate() const {
    if (in_bits < 1 || out_bits < 1) {
        throw DomainError("PRF input and output lengths must be at least 1");
    }
}

std::vector<std::uint8_t> prf_encode(const PrfSpec& spec, const PrfKey& key, const BitString& input) {
    std::vector<std::uint8_t> msg;
    msg.push_back(spec.domain);
    put_u64(msg, key.bits());
    if (spec.variant != PrfVariant::Crypto) {
        msg.insert(msg.end(), key.bytes().begin(), key.bytes().end());
    }
    put_u64(msg, input.size());
    auto in = input.to_bytes();
    msg.insert(msg.end(), in.begin(), in.end());
    put_u64(msg, spec.out_bits);
    return msg;
}

BitString prf_eval(const PrfSpec& spec, const PrfKey& key, const BitString& input) {
    spec.validate();
    if (input.size() != spec.in_bits) {
        throw DomainError("PRF input has " + std::to_string(input.size()) + " bits, expected " +
                          std::to_string(spec.in_bits));
    }
    switch (spec.variant) {
        case PrfVariant::Zero:
            return BitString(spec.out_bits);
        case PrfVariant::Test:
            return eval_test(spec, prf_encode(spec, key, input));
        case PrfVariant::Crypto:
            return eval_crypto(spec, key, prf_encode(spec, key, input));
    }
    throw DomainError("unknown PRF variant");
}

bool prf_bit(const PrfSpec& spec, const PrfKey& key, const BitString& input) {
    PrfSpec one = spec;
    one.out_bits = 1;
    return prf_eval(one, key, input)[0];
}

void write_prf_fixture(const std::filesystem::path& path, const PrfSpec& spec,
                       const std::vector<PrfVector>& vectors) {
    std::ofstream out(path);
    if (!out) {
        throw ResourceError("cannot write " + path.string());
    }
    out << "# prs-lab prf fixture variant=" << variant_name(spec.variant) << " domain="
        << static_cast<int>(spec.domain) << " seed=0x" << std::hex << spec.seed << std::dec << "\n";
    for (const auto& v : vectors) {
        out << v.key.bits() << ' ' << v.key.hex() << ' ' << v.input.size() << ' ' << v.input.hex()
            << ' ' << v.output.size() << ' ' << v.output.hex() << '\n';
    }
}

std::vector<PrfVector> read_prf_fixture(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ResourceError("cannot read " + path.string());
    }
    std::vector<PrfVector> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream ss(line);
        std::size_t kb = 0, ib = 0, ob = 0;
        std::string kh, ih, oh;
        if (!(ss >> kb >> kh >> ib >> ih >> ob >> oh)) {
            throw DomainError("malformed fixture line: " + line);
        }
        out.push_back({PrfKey::from_hex(kh, kb), BitString::from_bytes(from_hex(ih), ib),
                       BitString::from_bytes(from_hex(oh), ob)});
    }
    return out;
}

}  // namespace prslab
