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
#include "prslab/errors.hpp"
#include "prslab/tomography.hpp"

using namespace prslab;
using namespace prslab::tomo;

namespace {

Matrix pure_rho(int q, Rng& r) {
    auto v = qc::haar_vector(std::size_t{1} << q, r);
    return v * v.adjoint();
}

}  // namespace

TEST(tomography_base, analytic_mode_is_exact) {
    Rng r(1);
    for (int q = 1; q <= 3; ++q) {
        Matrix rho = pure_rho(q, r);
        auto t = tomography_base(DensitySource(rho), 64, r, Mode::Analytic);
        EXPECT_LT((t.M - rho).norm(), 1e-12);
        EXPECT_FALSE(t.aborted);
    }
}

TEST(tomography_base, sampled_mean_error_matches_variance_formula) {
    Rng r(2);
    for (int q : {1, 2}) {
        Matrix rho = pure_rho(q, r);
        double N = static_cast<double>(rho.rows()), s = 256;
        DensitySource src(rho);
        const int runs = 3000;
        double mean = 0;
        Matrix avg = Matrix::Zero(rho.rows(), rho.cols());
        for (int i = 0; i < runs; ++i) {
            auto t = tomography_base(src, s, r);
            mean += (t.M - rho).squaredNorm();
            avg += t.M;
        }
        mean /= runs;
        double expected = (N - rho.squaredNorm()) / s;
        EXPECT_NEAR(mean, expected, 0.06 * expected);
        EXPECT_LT(mean, N / s);
        EXPECT_LT((avg / runs - rho).cwiseAbs().maxCoeff(), 0.01);
    }
}

TEST(tomography_base, estimate_is_hermitian_with_unit_trace) {
    Rng r(3);
    auto t = tomography_base(DensitySource(pure_rho(2, r)), 10, r);
    EXPECT_LT((t.M - t.M.adjoint()).norm(), 1e-14);
    EXPECT_NEAR(t.M.trace().real(), 1.0, 1e-14);
    EXPECT_THROW(tomography_base(DensitySource(pure_rho(2, r)), 2.5, r), DomainError);
    EXPECT_THROW(tomography_base(DensitySource(pure_rho(2, r)), 0, r), DomainError);
}

TEST(boost_select, picks_first_majority_member) {
    Matrix a = Matrix::Identity(2, 2) / 2.0, b = a;
    b(0, 0) += 0.5;
    b(1, 1) -= 0.5;
    std::vector<Tomograph> runs = {{b, 0, 1, false}, {a, 0, 1, false}, {a, 0, 1, false}, {a, 0, 1, false}, {b, 0, 1, false}};
    auto sel = boost_select(runs, 0.1);
    ASSERT_TRUE(sel.index.has_value());
    EXPECT_EQ(*sel.index, 1u);
    EXPECT_EQ(sel.support.size(), 3u);
    std::vector<Tomograph> split = {{a, 0, 1, false}, {b, 0, 1, false}};
    EXPECT_FALSE(boost_select(split, 0.1).index.has_value());
}

TEST(tomography_boosted, honest_source_within_guarantee) {
    Rng r(4);
    Matrix rho = pure_rho(1, r);
    TomographyBudget budget{2, 2048, 16};
    int within = 0;
    for (int i = 0; i < 50; ++i) {
        auto t = tomography_boosted(DensitySource(rho), budget, r);
        ASSERT_FALSE(t.aborted);
        within += (t.M - rho).squaredNorm() <= budget.guarantee();
    }
    EXPECT_EQ(within, 50);
    EXPECT_EQ(budget.total_copies(), qc::BigInt(4) * 2048 * 4 * 16);
}

TEST(tomography_boosted, adversarial_source_aborts) {
    Rng r(5);
    Matrix zero = Matrix::Zero(2, 2), one = Matrix::Zero(2, 2);
    zero(0, 0) = 1;
    one(1, 1) = 1;
    CyclingSource src({zero, one});
    auto t = tomography_boosted(src, TomographyBudget{2, 4096, 4}, r);
    EXPECT_TRUE(t.aborted);
}

TEST(presets, thresholds_match_closed_forms) {
    GeneratorParams g{8, 1, 3, PrfVariant::Test, 0};
    auto p1 = paper_preset(Instantiation::First, g, Mode::Analytic);
    EXPECT_NEAR(p1.accept_threshold(), 4.0 / 729.0, 1e-15);
    EXPECT_NEAR(p1.guarantee(), 1.0 / 729.0, 1e-15);
    EXPECT_EQ(p1.reps, 8);
    GeneratorParams g2{8, 2, 3, PrfVariant::Test, 0};
    auto p2 = paper_preset(Instantiation::Second, g2, Mode::Analytic);
    EXPECT_NEAR(p2.accept_threshold(), 9.0 / 128.0, 1e-15);
    EXPECT_NEAR(9 * p2.guarantee(), 81.0 / 512.0, 1e-15);
    auto d1 = desk_preset(Instantiation::First, g, Mode::Sampled);
    EXPECT_EQ(d1.N(), 16u);
    EXPECT_EQ(d1.s, 2048.0);
    EXPECT_NEAR(d1.budget().cluster_radius(), 4.0 * 16 / 2048, 1e-15);
    for (const auto& id : check_budget_identities(3, 8)) EXPECT_TRUE(id.holds) << id.name << ": " << id.detail;
    for (const auto& id : check_budget_identities(9, 64)) EXPECT_TRUE(id.holds) << id.name << ": " << id.detail;
}

TEST(channels, first_channel_conjugation) {
    GeneratorParams g{8, 1, 3, PrfVariant::Test, 0};
    auto P = qc::PauliString::from_string("XYZ");
    auto key = PrfKey::from_uint(5, 8);
    auto x = BitString::from_uint(1, 1);
    auto abort = AbortModel::constant(0.8);
    auto r0 = channel_first({P, key, x, 0}, g, abort).matrix();
    auto r1 = channel_first({P, key, x, 1}, g, abort).matrix();
    Matrix IP = oracle::kron(oracle::pauli("I"), oracle::pauli("XYZ"));
    EXPECT_LT((r1 - IP * r0 * IP.adjoint()).norm(), 1e-14);
    EXPECT_NEAR(r0(8, 8).real(), 0.2, 1e-14);
}

TEST(channels, second_channel_input_length) {
    GeneratorParams g{8, 2, 3, PrfVariant::Test, 0};
    auto key = PrfKey::from_uint(5, 8);
    EXPECT_NO_THROW(channel_second({key, BitString::from_uint(1, 1), 0}, g));
    EXPECT_THROW(channel_second({key, BitString::from_uint(1, 2), 0}, g), ShapeError);
    EXPECT_THROW(channel_second({key, BitString::from_uint(1, 1), 2}, g), DomainError);
}

TEST(verify, same_input_valid_and_garbage_invalid) {
    GeneratorParams g{8, 1, 3, PrfVariant::Test, 0};
    auto vp = desk_preset(Instantiation::First, g, Mode::Sampled);
    auto abort = AbortModel::constant(1.0);
    Rng r(6);
    ChannelFirstInput in{qc::PauliString::from_string("XZY"), PrfKey::from_uint(9, 8), BitString::from_uint(0, 1), 1};
    auto M = tomograph_channel(channel_first(in, g, abort), vp, r);
    EXPECT_EQ(verify_first(in, M, vp, abort, r).verdict, Verdict::Valid);
    Tomograph zero{Matrix::Zero(16, 16), 0, vp.s, false};
    EXPECT_EQ(verify_first(in, zero, vp, abort, r).verdict, Verdict::Invalid);
    Tomograph aborted{Matrix(), 0, vp.s, true};
    EXPECT_EQ(verify_first(in, aborted, vp, abort, r).verdict, Verdict::Invalid);
}

TEST(verify, abort_mass_is_rejected) {
    GeneratorParams g{8, 1, 3, PrfVariant::Test, 0};
    auto vp = desk_preset(Instantiation::First, g, Mode::Analytic);
    Rng r(7);
    ChannelFirstInput in{qc::PauliString::from_string("IZI"), PrfKey::from_uint(9, 8), BitString::from_uint(0, 1), 0};
    auto low = AbortModel::constant(0.5);
    auto M = tomograph_channel(channel_first(in, g, low), vp, r);
    auto out = verify_first(in, M, vp, low, r);
    EXPECT_NEAR(out.abort_overlap, 0.5, 1e-12);
    EXPECT_EQ(out.verdict, Verdict::Invalid);
}

TEST(verify, second_instantiation_wrong_bit) {
    GeneratorParams g{8, 2, 3, PrfVariant::Test, 0};
    auto vp = desk_preset(Instantiation::Second, g, Mode::Analytic);
    Rng r(8);
    int good = 0, rejected = 0;
    for (std::uint64_t k = 0; k < 40; ++k) {
        ChannelSecondInput in{PrfKey::from_uint(k, 8), BitString::from_uint(1, 1), 0};
        auto M = tomograph_channel(channel_second(in, g), vp, r);
        EXPECT_EQ(verify_second(in, M, vp, r).verdict, Verdict::Valid);
        bool is_good = key_is_good(in.k, in.i, vp);
        good += is_good;
        auto wrong = verify_second({in.k, in.i, 1}, M, vp, r);
        if (is_good) {
            EXPECT_EQ(wrong.verdict, Verdict::Invalid);
        }
        rejected += wrong.verdict == Verdict::Invalid;
    }
    EXPECT_GE(good, 35);
    EXPECT_GE(rejected, good);
}

TEST(serialization, round_trip_and_frozen_fixture) {
    Rng r(9);
    Tomograph t{pure_rho(2, r), 1234, 64, false};
    auto path = std::filesystem::temp_directory_path() / "prslab_tomo_roundtrip.bin";
    write_tomograph(path, t, 8);
    auto back = read_tomograph(path);
    EXPECT_EQ((back.M - t.M).norm(), 0.0);
    EXPECT_EQ(back.copies, 1234u);
    EXPECT_EQ(matrix_bytes(back.M), matrix_bytes(t.M));

    std::filesystem::path dir(PRSLAB_FIXTURE_DIR);
    auto frozen = read_tomograph(dir / "tomograph_second_0123_i1_b0.bin");
    GeneratorParams g{16, 2, 3, PrfVariant::Test, 0x0123};
    auto vp = desk_preset(Instantiation::Second, g, Mode::Analytic);
    Rng unused(0);
    auto now = tomograph_channel(channel_second({PrfKey::from_uint(0x0123, 16), BitString::from_string("1"), 0}, g), vp, unused);
    EXPECT_LT((frozen.M - now.M).norm(), 1e-15);
}
