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

#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "prslab/tomography.hpp"

namespace prslab::proto {

/// Every constant of the commitment and pseudo one-time pad in one place.
struct ProtocolParams {
    tomo::VerifyParams verify;
    AbortModel abort = AbortModel::constant(1.0);
    /// Seed of the verifier's private randomness (sampled-mode Verify).
    std::uint64_t verify_seed = 0x7665726966790001ull;
    unsigned workers = 1;
    /// Set when the preset violates m >= 3 lambda.
    bool binding_relaxed = false;

    int lambda() const { return verify.gen.lambda; }
    int d() const { return verify.gen.d; }
    int n() const { return verify.gen.n; }
    /// m = 2^d n
    int m() const { return (1 << d()) * n(); }
};

/// d = ceil(log lambda / log log lambda), n = ceil(3 log lambda); lambda >= 6.
ProtocolParams commitment_paper_preset(int lambda, tomo::Mode mode, PrfVariant variant = PrfVariant::Crypto);
/// Explicit (lambda, d, n) with desk-scale tomography.
ProtocolParams commitment_desk_preset(int lambda, int d, int n, tomo::Mode mode,
                                      PrfVariant variant = PrfVariant::Test);
/// d = n = ceil(log lambda) for the pseudo one-time pad (messages of 2^d bits).
ProtocolParams otp_paper_preset(int lambda, tomo::Mode mode, PrfVariant variant = PrfVariant::Crypto);
ProtocolParams otp_desk_preset(int lambda, int message_bits_log2, int n, tomo::Mode mode,
                               PrfVariant variant = PrfVariant::Test);

struct CommitmentTranscript {
    qc::PauliString P;  // m qubits, block x is P_x
    std::vector<tomo::Tomograph> M;  // indexed by x
    int lambda = 0;
    int d = 0;
    int n = 0;

    qc::PauliString block(std::size_t x) const { return P.block(x, static_cast<std::size_t>(n)); }
};

struct Opening {
    PrfKey k;
    int b = 0;
};

qc::PauliString receiver_sample_pauli(const ProtocolParams& params, Rng& rng);

struct CommitResult {
    PrfKey k;
    CommitmentTranscript transcript;
    bool failed = false;  // a tomography run aborted
};

CommitResult committer_commit(int b, const qc::PauliString& P, const ProtocolParams& params, Rng& rng);

/// b if every block verifies, nullopt for bottom. Verifier randomness is
/// derived from params.verify_seed and the transcript digest, so the result
/// is a function of (transcript, opening).
std::optional<int> reveal_verify(const CommitmentTranscript& transcript, const Opening& opening,
                                 const ProtocolParams& params);

/// Inefficient binding extractor: first (k', b') in lexicographic order that
/// opens every block. InfeasibleError above `cap` key bits.
std::optional<int> extractor(const CommitmentTranscript& transcript, const ProtocolParams& params, int cap = 14);

nlohmann::json transcript_to_json(const CommitmentTranscript& t);
CommitmentTranscript transcript_from_json(const nlohmann::json& j);
/// Canonical serialization (compact JSON, sorted keys).
std::string transcript_canonical(const CommitmentTranscript& t);
/// SHA-256 hex of the canonical serialization.
std::string transcript_digest(const CommitmentTranscript& t);

struct Ciphertext {
    std::vector<tomo::Tomograph> u;
};

Ciphertext otp_encrypt(const PrfKey& k, const BitString& msg, const ProtocolParams& params, Rng& rng);
BitString otp_decrypt(const PrfKey& k, const Ciphertext& ct, const ProtocolParams& params, Rng& rng);

struct BindingSearchResult {
    int lambda = 0;
    int d = 0;
    int n = 0;
    int m = 0;
    std::uint64_t paulis = 0;
    std::uint64_t pairs_per_pauli = 0;
    /// Paulis admitting some (k0, k1) above the overlap threshold for every x.
    std::uint64_t candidate_paulis = 0;
    /// Paulis admitting a concrete double opening (midpoint tomographs).
    std::uint64_t witnessed_paulis = 0;
    std::uint64_t candidate_pairs = 0;
    std::uint64_t witnessed_pairs = 0;
    /// Witnessed pairs with a block overlap below the implied bound (must stay 0).
    std::uint64_t bound_violations = 0;
    /// Smallest implied overlap bound over the searched (x, k0, k1).
    double implied_bound = 0.0;
    double delta = 542.0 / 729.0;
    double envelope = 0.0;

    double double_opening_rate() const {
        return paulis == 0 ? 0.0 : static_cast<double>(witnessed_paulis) / static_cast<double>(paulis);
    }
    nlohmann::json to_json() const;
};

/// Lower bound on |<psi_{k0,x}| P_x |psi_{k1,x}>|^2 forced by one matrix
/// passing Verify for both openings: both channel outputs lie within
/// r = sqrt(accept) + sqrt(guarantee) of it in Frobenius norm, hence
/// eta0^2 + eta1^2 - 2 eta0 eta1 F <= 4 r^2. Non-positive means vacuous.
double implied_overlap_bound(double accept_threshold, double guarantee, double eta0, double eta1);

/// Exhaustive (k0, k1) search over `paulis` random Paulis in analytic mode.
BindingSearchResult binding_search(const ProtocolParams& params, std::uint64_t paulis, Rng& rng);

/// delta^{-2^d} 2^{2 lambda - m}
double binding_envelope(int lambda, int d, int n, double delta = 542.0 / 729.0);

}  // namespace prslab::proto
