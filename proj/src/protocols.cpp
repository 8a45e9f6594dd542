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

#include "prslab/protocols.hpp"

#include <cmath>

#include "prslab/errors.hpp"
#include "prslab/parallel.hpp"
#include "prslab/wire.hpp"

namespace prslab::proto {

namespace {

int ceil_log2(double v) { return static_cast<int>(std::ceil(std::log2(v) - 1e-12)); }

GeneratorParams make_gen(int lambda, int d, int n, PrfVariant variant) {
    GeneratorParams g;
    g.lambda = lambda;
    g.d = d;
    g.n = n;
    g.variant = variant;
    g.validate();
    return g;
}

ProtocolParams finish(tomo::VerifyParams v) {
    ProtocolParams p;
    p.verify = std::move(v);
    p.binding_relaxed = p.m() < 3 * p.lambda();
    return p;
}

std::uint64_t hash_string(const std::string& s, std::uint64_t h) {
    for (unsigned char c : s) h = splitmix64(h ^ c);
    return h;
}

bool shapes_ok(const CommitmentTranscript& t, const ProtocolParams& params) {
    std::size_t blocks = std::size_t{1} << params.d();
    return t.lambda == params.lambda() && t.d == params.d() && t.n == params.n() && t.M.size() == blocks &&
           t.P.qubits() == params.m();
}

bool opens_all(const CommitmentTranscript& t, const PrfKey& k, int b, const ProtocolParams& params, Rng& rng) {
    for (std::size_t x = 0; x < t.M.size(); ++x) {
        tomo::ChannelFirstInput in{t.block(x), k, BitString::from_uint(x, static_cast<std::size_t>(t.d)), b};
        if (t.M[x].aborted || t.M[x].dimension() != params.verify.N()) {
            return false;
        }
        if (tomo::verify_first(in, t.M[x], params.verify, params.abort, rng).verdict != tomo::Verdict::Valid) {
            return false;
        }
    }
    return true;
}

Rng verifier_rng(const ProtocolParams& params, const std::string& digest, std::uint64_t salt) {
    return Rng(hash_string(digest, splitmix64(params.verify_seed ^ salt)));
}

}  // namespace

ProtocolParams commitment_paper_preset(int lambda, tomo::Mode mode, PrfVariant variant) {
    if (lambda < 6) {
        throw DomainError("paper commitment preset needs lambda >= 6 (d(lambda) is ill-defined below)");
    }
    double lg = std::log2(static_cast<double>(lambda));
    int d = static_cast<int>(std::ceil(lg / std::log2(lg)));
    int n = static_cast<int>(std::ceil(3.0 * lg - 1e-12));
    return finish(tomo::paper_preset(tomo::Instantiation::First, make_gen(lambda, d, n, variant), mode));
}

ProtocolParams commitment_desk_preset(int lambda, int d, int n, tomo::Mode mode, PrfVariant variant) {
    return finish(tomo::desk_preset(tomo::Instantiation::First, make_gen(lambda, d, n, variant), mode));
}

ProtocolParams otp_paper_preset(int lambda, tomo::Mode mode, PrfVariant variant) {
    if (lambda < 2) {
        throw DomainError("pseudo one-time pad preset needs lambda >= 2");
    }
    int d = ceil_log2(lambda);
    return finish(tomo::paper_preset(tomo::Instantiation::Second, make_gen(lambda, d + 1, d, variant), mode));
}

ProtocolParams otp_desk_preset(int lambda, int message_bits_log2, int n, tomo::Mode mode, PrfVariant variant) {
    return finish(
        tomo::desk_preset(tomo::Instantiation::Second, make_gen(lambda, message_bits_log2 + 1, n, variant), mode));
}

qc::PauliString receiver_sample_pauli(const ProtocolParams& params, Rng& rng) {
    return qc::pauli_sample(params.m(), rng);
}

CommitResult committer_commit(int b, const qc::PauliString& P, const ProtocolParams& params, Rng& rng) {
    if (b != 0 && b != 1) {
        throw DomainError("committed bit must be 0 or 1");
    }
    if (P.qubits() != params.m()) {
        throw ShapeError("receiver Pauli must act on m = 2^d n qubits");
    }
    CommitResult res;
    res.k = PrfKey::random(static_cast<std::size_t>(params.lambda()), rng);
    auto& t = res.transcript;
    t.P = P;
    t.lambda = params.lambda();
    t.d = params.d();
    t.n = params.n();
    std::size_t blocks = std::size_t{1} << params.d();
    t.M.resize(blocks);
    Rng master(rng.next_u64());
    parallel_for(blocks, params.workers, [&](std::size_t x) {
        Rng local = master.derive(x);
        tomo::ChannelFirstInput in{t.block(x), res.k, BitString::from_uint(x, static_cast<std::size_t>(t.d)), b};
        t.M[x] = tomo::tomograph_channel(tomo::channel_first(in, params.verify.gen, params.abort), params.verify,
                                         local);
    });
    for (const auto& m : t.M) res.failed = res.failed || m.aborted;
    return res;
}

std::optional<int> reveal_verify(const CommitmentTranscript& transcript, const Opening& opening,
                                 const ProtocolParams& params) {
    if (opening.b != 0 && opening.b != 1) {
        return std::nullopt;
    }
    if (!shapes_ok(transcript, params) || opening.k.bits() != static_cast<std::size_t>(params.lambda())) {
        return std::nullopt;
    }
    std::string digest = transcript_digest(transcript);
    Rng rng = verifier_rng(params, digest, hash_string(opening.k.hex(), static_cast<std::uint64_t>(opening.b)));
    if (opens_all(transcript, opening.k, opening.b, params, rng)) {
        return opening.b;
    }
    return std::nullopt;
}

std::optional<int> extractor(const CommitmentTranscript& transcript, const ProtocolParams& params, int cap) {
    if (params.lambda() > cap) {
        throw InfeasibleError("extractor enumerates 2^lambda keys; lambda = " + std::to_string(params.lambda()) +
                              " exceeds the cap " + std::to_string(cap));
    }
    if (!shapes_ok(transcript, params)) {
        return std::nullopt;
    }
    std::string digest = transcript_digest(transcript);
    std::uint64_t keys = std::uint64_t{1} << params.lambda();
    std::vector<std::uint8_t> opens(2 * keys, 0);
    parallel_for(keys, params.workers, [&](std::size_t k) {
        PrfKey key = PrfKey::from_uint(k, static_cast<std::size_t>(params.lambda()));
        for (int b = 0; b < 2; ++b) {
            Rng rng = verifier_rng(params, digest, hash_string(key.hex(), static_cast<std::uint64_t>(b)));
            opens[2 * k + static_cast<std::size_t>(b)] = opens_all(transcript, key, b, params, rng) ? 1 : 0;
        }
    });
    for (std::size_t i = 0; i < opens.size(); ++i) {
        if (opens[i]) return static_cast<int>(i % 2);
    }
    return std::nullopt;
}

nlohmann::json transcript_to_json(const CommitmentTranscript& t) {
    nlohmann::json blocks = nlohmann::json::array();
    for (std::size_t x = 0; x < t.M.size(); ++x) {
        const auto& m = t.M[x];
        blocks.push_back({{"x", x},
                          {"N", m.dimension()},
                          {"s", m.s},
                          {"copies", m.copies},
                          {"aborted", m.aborted},
                          {"matrix", wire::base64_encode(tomo::matrix_bytes(m.M))}});
    }
    return {{"lambda", t.lambda}, {"d", t.d}, {"n", t.n}, {"pauli", t.P.str()}, {"tomographs", blocks}};
}

CommitmentTranscript transcript_from_json(const nlohmann::json& j) {
    CommitmentTranscript t;
    t.lambda = j.at("lambda").get<int>();
    t.d = j.at("d").get<int>();
    t.n = j.at("n").get<int>();
    t.P = qc::PauliString::from_string(j.at("pauli").get<std::string>());
    for (const auto& b : j.at("tomographs")) {
        tomo::Tomograph m;
        m.s = b.at("s").get<double>();
        m.copies = b.at("copies").get<std::uint64_t>();
        m.aborted = b.at("aborted").get<bool>();
        m.M = tomo::matrix_from_bytes(wire::base64_decode(b.at("matrix").get<std::string>()),
                                      b.at("N").get<std::size_t>());
        t.M.push_back(std::move(m));
    }
    return t;
}

std::string transcript_canonical(const CommitmentTranscript& t) { return transcript_to_json(t).dump(); }

std::string transcript_digest(const CommitmentTranscript& t) { return wire::sha256_hex(transcript_canonical(t)); }

Ciphertext otp_encrypt(const PrfKey& k, const BitString& msg, const ProtocolParams& params, Rng& rng) {
    if (params.verify.inst != tomo::Instantiation::Second) {
        throw DomainError("pseudo one-time pad needs second-instantiation parameters");
    }
    auto ibits = static_cast<std::size_t>(params.d() - 1);
    if (msg.size() > (std::size_t{1} << ibits)) {
        throw ShapeError("message has more bits than the index space 2^(d-1)");
    }
    Ciphertext ct;
    ct.u.resize(msg.size());
    Rng master(rng.next_u64());
    parallel_for(msg.size(), params.workers, [&](std::size_t i) {
        Rng local = master.derive(i);
        tomo::ChannelSecondInput in{k, BitString::from_uint(i, ibits), msg[i] ? 1 : 0};
        ct.u[i] = tomo::tomograph_channel(tomo::channel_second(in, params.verify.gen), params.verify, local);
    });
    for (const auto& u : ct.u) {
        if (u.aborted) {
            throw NumericError("encryption failed: tomography aborted");
        }
    }
    return ct;
}

BitString otp_decrypt(const PrfKey& k, const Ciphertext& ct, const ProtocolParams& params, Rng& rng) {
    auto ibits = static_cast<std::size_t>(params.d() - 1);
    if (ct.u.size() > (std::size_t{1} << ibits)) {
        throw ShapeError("ciphertext longer than the index space");
    }
    BitString out(ct.u.size());
    Rng master(rng.next_u64());
    std::vector<std::uint8_t> bits(ct.u.size(), 0);
    parallel_for(ct.u.size(), params.workers, [&](std::size_t i) {
        Rng local = master.derive(i);
        tomo::ChannelSecondInput in{k, BitString::from_uint(i, ibits), 0};
        bits[i] = tomo::verify_second(in, ct.u[i], params.verify, local).verdict == tomo::Verdict::Valid ? 0 : 1;
    });
    for (std::size_t i = 0; i < bits.size(); ++i) out.set(i, bits[i] != 0);
    return out;
}

double binding_envelope(int lambda, int d, int n, double delta) {
    int m = (1 << d) * n;
    return std::pow(1.0 / delta, std::ldexp(1.0, d)) * std::ldexp(1.0, 2 * lambda - m);
}

nlohmann::json BindingSearchResult::to_json() const {
    return {{"lambda", lambda},
            {"d", d},
            {"n", n},
            {"m", m},
            {"paulis", paulis},
            {"pairs_per_pauli", pairs_per_pauli},
            {"candidate_paulis", candidate_paulis},
            {"witnessed_paulis", witnessed_paulis},
            {"candidate_pairs", candidate_pairs},
            {"witnessed_pairs", witnessed_pairs},
            {"bound_violations", bound_violations},
            {"implied_overlap_bound", implied_bound},
            {"double_opening_rate", double_opening_rate()},
            {"delta", delta},
            {"envelope", envelope},
            {"envelope_vacuous", envelope >= 1.0}};
}

double implied_overlap_bound(double accept_threshold, double guarantee, double eta0, double eta1) {
    double r = std::sqrt(accept_threshold) + std::sqrt(guarantee);
    return (eta0 * eta0 + eta1 * eta1 - 4.0 * r * r) / (2.0 * eta0 * eta1);
}

BindingSearchResult binding_search(const ProtocolParams& params, std::uint64_t paulis, Rng& rng) {
    if (params.lambda() > 10) {
        throw InfeasibleError("binding search enumerates 2^(2 lambda) key pairs; lambda must be <= 10");
    }
    const auto& vp = params.verify;
    if (vp.inst != tomo::Instantiation::First) {
        throw DomainError("binding search needs first-instantiation parameters");
    }
    BindingSearchResult res;
    res.lambda = params.lambda();
    res.d = params.d();
    res.n = params.n();
    res.m = params.m();
    res.paulis = paulis;
    res.envelope = binding_envelope(res.lambda, res.d, res.n, res.delta);
    std::uint64_t keys = std::uint64_t{1} << res.lambda;
    res.pairs_per_pauli = keys * keys;
    std::size_t blocks = std::size_t{1} << res.d;
    auto lam = static_cast<std::size_t>(res.lambda);

    // Pure states per (key, x) are independent of the Pauli.
    std::vector<std::vector<qc::Vector>> psi(blocks, std::vector<qc::Vector>(keys));
    for (std::size_t x = 0; x < blocks; ++x) {
        for (std::uint64_t k = 0; k < keys; ++k) {
            psi[x][k] = prfs_generate(vp.gen, PrfKey::from_uint(k, lam), BitString::from_uint(x, static_cast<std::size_t>(res.d)))
                            .amplitudes();
        }
    }
    tomo::VerifyParams analytic = vp;
    analytic.mode = tomo::Mode::Analytic;

    std::vector<double> eta(blocks * keys);
    for (std::size_t x = 0; x < blocks; ++x) {
        for (std::uint64_t k = 0; k < keys; ++k) {
            eta[x * keys + k] = params.abort.eta(PrfKey::from_uint(k, lam), BitString::from_uint(x, static_cast<std::size_t>(res.d)));
        }
    }
    std::vector<std::vector<std::vector<double>>> bound(
        blocks, std::vector<std::vector<double>>(keys, std::vector<double>(keys)));
    res.implied_bound = 1.0;
    for (std::size_t x = 0; x < blocks; ++x) {
        for (std::uint64_t k0 = 0; k0 < keys; ++k0) {
            for (std::uint64_t k1 = 0; k1 < keys; ++k1) {
                double b = implied_overlap_bound(vp.accept_threshold(), 0.0, eta[x * keys + k0], eta[x * keys + k1]);
                bound[x][k0][k1] = b;
                res.implied_bound = std::min(res.implied_bound, b);
            }
        }
    }

    for (std::uint64_t p = 0; p < paulis; ++p) {
        qc::PauliString P = receiver_sample_pauli(params, rng);
        // References: channel outputs for (k, x, 0) and (k, x, 1).
        std::vector<std::vector<tomo::Tomograph>> ref0(blocks, std::vector<tomo::Tomograph>(keys));
        auto ref1 = ref0;
        std::vector<std::vector<qc::Vector>> ppsi(blocks, std::vector<qc::Vector>(keys));
        Rng unused(0);
        for (std::size_t x = 0; x < blocks; ++x) {
            auto Px = P.block(x, static_cast<std::size_t>(res.n));
            for (std::uint64_t k = 0; k < keys; ++k) {
                PrfKey key = PrfKey::from_uint(k, lam);
                BitString xb = BitString::from_uint(x, static_cast<std::size_t>(res.d));
                ref0[x][k] = tomo::tomograph_channel(tomo::channel_first({Px, key, xb, 0}, vp.gen, params.abort),
                                                     analytic, unused);
                ref1[x][k] = tomo::tomograph_channel(tomo::channel_first({Px, key, xb, 1}, vp.gen, params.abort),
                                                     analytic, unused);
                ppsi[x][k] = qc::pauli_apply(Px, psi[x][k]);
            }
        }
        std::vector<std::uint64_t> cand(keys, 0), wit(keys, 0), viol(keys, 0);
        parallel_for(keys, params.workers, [&](std::size_t k0) {
            for (std::uint64_t k1 = 0; k1 < keys; ++k1) {
                bool candidate = true;
                bool witnessed = true;
                bool below_implied = false;
                for (std::size_t x = 0; x < blocks; ++x) {
                    double F = std::norm(psi[x][k0].dot(ppsi[x][k1]));
                    candidate = candidate && F >= res.delta;
                    below_implied = below_implied || F < bound[x][k0][k1] - 1e-12;
                    if (!witnessed) continue;
                    auto Px = P.block(x, static_cast<std::size_t>(res.n));
                    BitString xb = BitString::from_uint(x, static_cast<std::size_t>(res.d));
                    tomo::Tomograph mid{0.5 * (ref0[x][k0].M + ref1[x][k1].M), 0, vp.s, false};
                    auto v0 = tomo::verify_first_against({Px, PrfKey::from_uint(k0, lam), xb, 0}, mid, ref0[x][k0], vp);
                    auto v1 = tomo::verify_first_against({Px, PrfKey::from_uint(k1, lam), xb, 1}, mid, ref1[x][k1], vp);
                    witnessed = v0.verdict == tomo::Verdict::Valid && v1.verdict == tomo::Verdict::Valid;
                }
                cand[k0] += candidate ? 1 : 0;
                wit[k0] += witnessed ? 1 : 0;
                viol[k0] += (witnessed && below_implied) ? 1 : 0;
            }
        });
        std::uint64_t c = 0, w = 0;
        for (std::uint64_t k = 0; k < keys; ++k) {
            c += cand[k];
            w += wit[k];
            res.bound_violations += viol[k];
        }
        res.candidate_pairs += c;
        res.witnessed_pairs += w;
        res.candidate_paulis += c > 0 ? 1 : 0;
        res.witnessed_paulis += w > 0 ? 1 : 0;
    }
    return res;
}

}  // namespace prslab::proto
