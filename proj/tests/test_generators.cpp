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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "prslab/attacks.hpp"
#include "prslab/errors.hpp"
#include "prslab/generators.hpp"

using namespace prslab;
using namespace prslab::qc;

namespace {

std::vector<int> truth_table(const PrfSpec& spec, const PrfKey& key, int n) {
    std::vector<int> f(std::size_t{1} << n);
    for (std::uint64_t y = 0; y < f.size(); ++y) f[y] = prf_bit(spec, key, BitString::from_uint(y, n));
    return f;
}

}  // namespace

TEST(prs, binary_phase_amplitudes_match_truth_table) {
    GeneratorParams g{8, 1, 4, PrfVariant::Crypto, 0};
    auto key = PrfKey::from_uint(0x5a, 8);
    auto psi = prs_generate(g, key);
    EXPECT_LT((psi.amplitudes() - oracle::binary_phase(truth_table(g.phase_spec(), key, 4))).norm(), 1e-15);
}

TEST(prs, zero_prf_gives_uniform_superposition) {
    GeneratorParams g{8, 1, 3, PrfVariant::Zero, 0};
    auto psi = prs_generate(g, PrfKey::from_uint(1, 8));
    for (Eigen::Index i = 0; i < 8; ++i) EXPECT_NEAR(psi.amplitudes()(i).real(), 1 / std::sqrt(8.0), 1e-15);
}

TEST(prfs, uses_subkey_then_phase_function) {
    GeneratorParams g{8, 2, 3, PrfVariant::Test, 9};
    auto key = PrfKey::from_uint(0x33, 8);
    for (std::uint64_t x = 0; x < 4; ++x) {
        auto xb = BitString::from_uint(x, 2);
        auto kx = subkey(g, key, xb);
        EXPECT_EQ(kx.bit_string(), prf_eval(g.subkey_spec(), key, xb));
        auto expected = oracle::binary_phase(truth_table(g.phase_spec(), kx, 3));
        EXPECT_LT((prfs_generate(g, key, xb).amplitudes() - expected).norm(), 1e-15);
    }
}

TEST(phase_overlap, matches_inner_product) {
    GeneratorParams g{10, 1, 7, PrfVariant::Test, 1};
    for (std::uint64_t a = 0; a < 10; ++a) {
        auto ka = PrfKey::from_uint(a, 10), kb = PrfKey::from_uint(a * 7 + 3, 10);
        double direct = prs_generate(g, ka).inner(prs_generate(g, kb)).real();
        EXPECT_NEAR(phase_overlap(phase_table(g, ka), phase_table(g, kb)), direct, 1e-14);
    }
}

TEST(prs, frozen_fixture_states) {
    std::filesystem::path dir(PRSLAB_FIXTURE_DIR);
    GeneratorParams g{16, 2, 3, PrfVariant::Test, 0x0123};
    auto key = PrfKey::from_uint(0x0123, 16);
    auto prs = read_state_fixture(dir / "prs_0123_n3.bin");
    auto prfs = read_state_fixture(dir / "prfs_0123_n3_x10.bin");
    EXPECT_EQ((prs.amplitudes() - prs_generate(g, key).amplitudes()).norm(), 0.0);
    EXPECT_EQ((prfs.amplitudes() - prfs_generate(g, key, BitString::from_string("10")).amplitudes()).norm(), 0.0);
}

TEST(abort_wrap, structure_and_partial_trace) {
    Rng r(3);
    auto psi = haar_sample(2, r);
    for (double eta : {1.0, 0.7, 0.0}) {
        auto w = abort_wrap(psi, eta);
        const Matrix& f = w.full.matrix();
        EXPECT_NEAR(f.trace().real(), 1.0, 1e-14);
        EXPECT_NEAR(f(abort_index(2), abort_index(2)).real(), 1 - eta, 1e-14);
        EXPECT_LT((oracle::partial_trace_first(f, 2) - w.traced.matrix()).norm(), 1e-14);
        Matrix expected = eta * psi.amplitudes() * psi.amplitudes().adjoint();
        expected(0, 0) += 1 - eta;
        EXPECT_LT((w.traced.matrix() - expected).norm(), 1e-14);
    }
    EXPECT_THROW(abort_wrap(psi, 1.5), DomainError);
}

TEST(abort_model, keyed_is_deterministic_and_bounded) {
    auto m = AbortModel::keyed(0.4, 0.9, 77);
    Rng r(5);
    for (int i = 0; i < 50; ++i) {
        auto k = PrfKey::random(8, r);
        auto x = BitString::from_uint(i % 4, 2);
        double e = m.eta(k, x);
        EXPECT_GE(e, 0.4);
        EXPECT_LE(e, 0.9);
        EXPECT_EQ(e, m.eta(k, x));
    }
    EXPECT_TRUE(AbortModel::constant(0.5).is_constant());
}

TEST(abort_kappa, equals_one_minus_purity) {
    GeneratorParams g{8, 1, 3, PrfVariant::Test, 0};
    for (double eta : {0.25, 0.5, 0.9}) {
        double k = attacks::abort_kappa(eta, 3);
        double a = eta * eta + (1 - eta) * (1 - eta) + 2 * eta * (1 - eta) / 8.0;
        EXPECT_NEAR(k, 1 - a, 1e-15);
        auto w = abort_wrapped(g, PrfKey::from_uint(3, 8), BitString::from_uint(0, 1), AbortModel::constant(eta));
        EXPECT_NEAR(1 - w.traced.purity(), k, 1e-14);
    }
}

TEST(prfs_test, acceptance_is_overlap) {
    GeneratorParams g{8, 1, 3, PrfVariant::Test, 0};
    auto key = PrfKey::from_uint(42, 8);
    auto x = BitString::from_uint(1, 1);
    Rng r(7);
    auto own = DensityMatrix::from_pure(prfs_generate(g, key, x));
    auto out = prfs_test(g, key, x, own, 100, r);
    EXPECT_NEAR(out.accept_prob, 1.0, 1e-14);
    EXPECT_EQ(out.accepts, 100u);
    auto other = haar_sample(3, r);
    auto o2 = prfs_test(g, key, x, DensityMatrix::from_pure(other), 10, r);
    EXPECT_NEAR(o2.accept_prob, std::norm(prfs_generate(g, key, x).inner(other)), 1e-14);
    std::vector<std::pair<PrfKey, BitString>> pairs = {{key, x}, {key, BitString::from_uint(0, 1)}};
    auto prod = prfs_generate(g, key, x).tensor(prfs_generate(g, key, BitString::from_uint(0, 1)));
    EXPECT_NEAR(prfs_test_product(g, pairs, DensityMatrix::from_pure(prod)), 1.0, 1e-14);
}

TEST(generator_params, validation) {
    GeneratorParams g{8, 1, 0, PrfVariant::Test, 0};
    EXPECT_THROW(g.validate(), DomainError);
    GeneratorParams wide{8, 1, 21, PrfVariant::Test, 0};
    EXPECT_THROW(wide.validate(), ResourceError);
}
