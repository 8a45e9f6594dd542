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

#include <filesystem>
#include <functional>
#include <utility>
#include <vector>

#include "prslab/prf.hpp"
#include "prslab/quantum.hpp"

namespace prslab {

/// (d, n)-PRFS over lambda-bit keys. F1 derives lambda-bit subkeys from x,
/// F2 is the one-bit phase function on n-bit strings.
struct GeneratorParams {
    int lambda = 8;
    int d = 1;
    int n = 3;
    PrfVariant variant = PrfVariant::Test;
    std::uint64_t prf_seed = 0;

    void validate() const;
    std::size_t dimension() const { return std::size_t{1} << n; }
    PrfSpec subkey_spec() const;
    PrfSpec phase_spec() const;
};

/// Sign pattern of a binary-phase state, packed 64 entries per word.
struct PhaseTable {
    int n = 0;
    std::vector<std::uint64_t> words;

    bool bit(std::uint64_t x) const { return (words[x / 64] >> (x % 64)) & 1u; }
};

PhaseTable make_phase_table(int n, const std::function<bool(std::uint64_t)>& phase);
/// Phase table of y -> F2(key, y).
PhaseTable phase_table(const GeneratorParams& params, const PrfKey& key);
/// 2^{-n/2} sum_x (-1)^{phase(x)} |x>
qc::PureState binary_phase_state(const PhaseTable& table);
qc::PureState binary_phase_state(const std::function<bool(std::uint64_t)>& phase, int n);
/// <psi_f|psi_g> = 1 - 2 |f xor g| / 2^n, via the popcount kernel.
double phase_overlap(const PhaseTable& f, const PhaseTable& g);

/// Binary-phase PRS: phase y -> F2(key, y).
qc::PureState prs_generate(const GeneratorParams& params, const PrfKey& key);
/// k_x = F1(key, x) as a lambda-bit key.
PrfKey subkey(const GeneratorParams& params, const PrfKey& key, const BitString& x);
qc::PureState prfs_generate(const GeneratorParams& params, const PrfKey& key, const BitString& x);
PhaseTable prfs_phase_table(const GeneratorParams& params, const PrfKey& key, const BitString& x);

/// Success probability eta(k, x) of the abort wrapper.
class AbortModel {
   public:
    static AbortModel constant(double eta);
    /// eta drawn from [lo, hi] by a keyed hash of (k, x, salt).
    static AbortModel keyed(double lo, double hi, std::uint64_t salt);

    double eta(const PrfKey& key, const BitString& x) const;
    bool is_constant() const noexcept { return lo_ == hi_; }

   private:
    AbortModel(double lo, double hi, std::uint64_t salt) : lo_(lo), hi_(hi), salt_(salt) {}
    double lo_ = 1.0;
    double hi_ = 1.0;
    std::uint64_t salt_ = 0;
};

/// |bot> = |1>|0^n> as an (n+1)-qubit basis index.
std::uint64_t abort_index(int n);

struct AbortWrapped {
    double eta = 1.0;
    /// eta |0><0| (x) |psi><psi| + (1 - eta) |bot><bot|
    qc::DensityMatrix full;
    /// First qubit traced out: eta |psi><psi| + (1 - eta) |0^n><0^n|
    qc::DensityMatrix traced;
};

AbortWrapped abort_wrap(const qc::PureState& psi, double eta);
AbortWrapped abort_wrapped(const GeneratorParams& params, const PrfKey& key, const BitString& x,
                           const AbortModel& model);

struct TestOutcome {
    double accept_prob = 0.0;
    std::uint64_t accepts = 0;
    std::uint64_t shots = 0;
};

/// Acceptance <psi_{k,x}|rho|psi_{k,x}> and `shots` Bernoulli draws from it.
TestOutcome prfs_test(const GeneratorParams& params, const PrfKey& key, const BitString& x,
                      const qc::DensityMatrix& rho, std::uint64_t shots, Rng& rng);
/// <psi|rho|psi> for |psi> = (x)_i |psi_{k_i, x_i}>.
double prfs_test_product(const GeneratorParams& params,
                         const std::vector<std::pair<PrfKey, BitString>>& pairs,
                         const qc::DensityMatrix& rho);

/// Little-endian float64 (re, im) pairs, no header.
void write_state_fixture(const std::filesystem::path& path, const qc::PureState& psi);
qc::PureState read_state_fixture(const std::filesystem::path& path);

}  // namespace prslab
