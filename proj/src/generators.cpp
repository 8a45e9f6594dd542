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

#include "prslab/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

#include "prslab/errors.hpp"
#include "prslab/kernels.hpp"

namespace prslab {

void GeneratorParams::validate() const {
    if (lambda < 1 || d < 1 || n < 1) {
        throw DomainError("generator parameters lambda, d, n must all be >= 1");
    }
    if (n > qc::kMaxQubits - 1) {
        throw ResourceError("generator output width exceeds the simulator cap");
    }
}

PrfSpec GeneratorParams::subkey_spec() const {
    return PrfSpec{variant, static_cast<std::size_t>(d), static_cast<std::size_t>(lambda), 1, prf_seed};
}

PrfSpec GeneratorParams::phase_spec() const {
    return PrfSpec{variant, static_cast<std::size_t>(n), 1, 2, prf_seed};
}

PhaseTable make_phase_table(int n, const std::function<bool(std::uint64_t)>& phase) {
    PhaseTable t;
    t.n = n;
    std::uint64_t dim = std::uint64_t{1} << n;
    t.words.assign((dim + 63) / 64, 0);
    for (std::uint64_t x = 0; x < dim; ++x) {
        if (phase(x)) {
            t.words[x / 64] |= std::uint64_t{1} << (x % 64);
        }
    }
    return t;
}

PhaseTable phase_table(const GeneratorParams& params, const PrfKey& key) {
    params.validate();
    if (key.bits() != static_cast<std::size_t>(params.lambda)) {
        throw DomainError("key has " + std::to_string(key.bits()) + " bits, expected lambda = " +
                          std::to_string(params.lambda));
    }
    PrfSpec spec = params.phase_spec();
    auto n = static_cast<std::size_t>(params.n);
    return make_phase_table(params.n, [&](std::uint64_t y) {
        return prf_bit(spec, key, BitString::from_uint(y, n));
    });
}

qc::PureState binary_phase_state(const PhaseTable& table) {
    std::size_t dim = std::size_t{1} << table.n;
    double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    qc::Vector v(static_cast<Eigen::Index>(dim));
    for (std::size_t x = 0; x < dim; ++x) {
        v[static_cast<Eigen::Index>(x)] = table.bit(x) ? -amp : amp;
    }
    return qc::PureState::normalized(std::move(v));
}

qc::PureState binary_phase_state(const std::function<bool(std::uint64_t)>& phase, int n) {
    if (n < 1) {
        throw DomainError("binary_phase_state needs n >= 1");
    }
    return binary_phase_state(make_phase_table(n, phase));
}

double phase_overlap(const PhaseTable& f, const PhaseTable& g) {
    if (f.n != g.n) {
        throw ShapeError("phase_overlap: different widths");
    }
    auto diff = kernels::xor_popcount(f.words, g.words);
    return 1.0 - 2.0 * static_cast<double>(diff) / static_cast<double>(std::uint64_t{1} << f.n);
}

qc::PureState prs_generate(const GeneratorParams& params, const PrfKey& key) {
    return binary_phase_state(phase_table(params, key));
}

PrfKey subkey(const GeneratorParams& params, const PrfKey& key, const BitString& x) {
    params.validate();
    if (key.bits() != static_cast<std::size_t>(params.lambda)) {
        throw DomainError("key length does not match lambda");
    }
    if (x.size() != static_cast<std::size_t>(params.d)) {
        throw DomainError("input has " + std::to_string(x.size()) + " bits, expected d = " +
                          std::to_string(params.d));
    }
    return PrfKey(prf_eval(params.subkey_spec(), key, x));
}

PhaseTable prfs_phase_table(const GeneratorParams& params, const PrfKey& key, const BitString& x) {
    return phase_table(params, subkey(params, key, x));
}

qc::PureState prfs_generate(const GeneratorParams& params, const PrfKey& key, const BitString& x) {
    return binary_phase_state(prfs_phase_table(params, key, x));
}

AbortModel AbortModel::constant(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw DomainError("abort model eta must lie in [0, 1]");
    }
    return AbortModel(eta, eta, 0);
}

AbortModel AbortModel::keyed(double lo, double hi, std::uint64_t salt) {
    if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi)) {
        throw DomainError("keyed abort model needs 0 <= lo <= hi <= 1");
    }
    return AbortModel(lo, hi, salt);
}

double AbortModel::eta(const PrfKey& key, const BitString& x) const {
    if (lo_ == hi_) {
        return lo_;
    }
    std::uint64_t h = splitmix64(salt_);
    for (auto b : key.bytes()) h = splitmix64(h ^ b);
    h = splitmix64(h ^ key.bits());
    for (auto b : x.to_bytes()) h = splitmix64(h ^ b);
    h = splitmix64(h ^ x.size());
    double u = static_cast<double>(h >> 11) * 0x1.0p-53;
    return lo_ + (hi_ - lo_) * u;
}

std::uint64_t abort_index(int n) { return std::uint64_t{1} << n; }

AbortWrapped abort_wrap(const qc::PureState& psi, double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw DomainError("eta must lie in [0, 1]");
    }
    auto dim = static_cast<Eigen::Index>(psi.dimension());
    qc::Matrix full = qc::Matrix::Zero(2 * dim, 2 * dim);
    qc::Matrix proj = psi.amplitudes() * psi.amplitudes().adjoint();
    full.topLeftCorner(dim, dim) = eta * proj;
    full(dim, dim) = 1.0 - eta;
    qc::Matrix traced = eta * proj;
    traced(0, 0) += 1.0 - eta;
    return {eta, qc::DensityMatrix::trusted(std::move(full)), qc::DensityMatrix::trusted(std::move(traced))};
}

AbortWrapped abort_wrapped(const GeneratorParams& params, const PrfKey& key, const BitString& x,
                           const AbortModel& model) {
    return abort_wrap(prfs_generate(params, key, x), model.eta(key, x));
}

TestOutcome prfs_test(const GeneratorParams& params, const PrfKey& key, const BitString& x,
                      const qc::DensityMatrix& rho, std::uint64_t shots, Rng& rng) {
    if (rho.qubits() != params.n) {
        throw ShapeError("prfs_test: state has " + std::to_string(rho.qubits()) + " qubits, expected " +
                         std::to_string(params.n));
    }
    qc::PureState psi = prfs_generate(params, key, x);
    double p = std::clamp(qc::fidelity_overlap(psi, rho), 0.0, 1.0);
    return {p, rng.binomial(shots, p), shots};
}

double prfs_test_product(const GeneratorParams& params,
                         const std::vector<std::pair<PrfKey, BitString>>& pairs,
                         const qc::DensityMatrix& rho) {
    if (pairs.empty()) {
        throw DomainError("prfs_test_product needs at least one pair");
    }
    if (rho.qubits() != params.n * static_cast<int>(pairs.size())) {
        throw ShapeError("prfs_test_product: state width does not match t * n");
    }
    qc::Vector psi = prfs_generate(params, pairs[0].first, pairs[0].second).amplitudes();
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        psi = qc::kron(psi, prfs_generate(params, pairs[i].first, pairs[i].second).amplitudes());
    }
    return qc::fidelity_overlap(qc::PureState::normalized(std::move(psi)), rho);
}

void write_state_fixture(const std::filesystem::path& path, const qc::PureState& psi) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ResourceError("cannot write " + path.string());
    }
    for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i) {
        for (double part : {psi.amplitudes()[i].real(), psi.amplitudes()[i].imag()}) {
            auto bits = std::bit_cast<std::uint64_t>(part);
            char buf[8];
            for (int b = 0; b < 8; ++b) buf[b] = static_cast<char>((bits >> (8 * b)) & 0xFF);
            out.write(buf, 8);
        }
    }
}

qc::PureState read_state_fixture(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ResourceError("cannot read " + path.string());
    }
    std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (raw.size() % 16 != 0) {
        throw ShapeError("state fixture length is not a whole number of complex entries");
    }
    qc::Vector v(static_cast<Eigen::Index>(raw.size() / 16));
    auto read_f64 = [&](std::size_t off) {
        std::uint64_t bits = 0;
        for (int b = 0; b < 8; ++b) bits |= std::uint64_t{static_cast<unsigned char>(raw[off + b])} << (8 * b);
        return std::bit_cast<double>(bits);
    };
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v[i] = qc::cplx(read_f64(16 * i), read_f64(16 * i + 8));
    }
    return qc::PureState::from_amplitudes(std::move(v));
}

}  // namespace prslab
