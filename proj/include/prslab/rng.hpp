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
#include <random>

namespace prslab {

/// SplitMix64 finalizer; used for seed derivation and the test PRF mixer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seeded random source. All sampling in the library goes through an Rng owned
/// by the caller; parallel tasks use `derive(index)` to get independent streams.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    /// Independent stream for task `index`. Depends only on (seed, index).
    Rng derive(std::uint64_t index) const { return Rng(splitmix64(seed_ ^ splitmix64(index + 1))); }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
    }

    bool bernoulli(double p) { return uniform() < p; }

    double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

    std::uint64_t binomial(std::uint64_t trials, double p);

    std::mt19937_64& engine() noexcept { return engine_; }

   private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace prslab
