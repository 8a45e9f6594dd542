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

#include <algorithm>

#include "oracles.hpp"
#include "prslab/attacks.hpp"
#include "prslab/errors.hpp"

using namespace prslab;
using namespace prslab::attacks;

namespace {

std::vector<qc::Vector> generator_states(const GeneratorParams& g) {
    std::vector<qc::Vector> out;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << g.lambda); ++k) {
        out.push_back(prs_generate(g, PrfKey::from_uint(k, g.lambda)).amplitudes());
    }
    return out;
}

}  // namespace

TEST(choose_t, smallest_t_meeting_rank_condition) {
    for (auto [lambda, n] : {std::pair{8, 3}, {4, 2}, {10, 4}, {16, 5}}) {
        int t = choose_t(lambda, n);
        auto N = std::uint64_t{1} << n;
        double need = 6.0 * std::ldexp(1.0, lambda);
        EXPECT_GE(static_cast<double>(oracle::sym_dim(N, t)), need);
        EXPECT_LT(static_cast<double>(oracle::sym_dim(N, t - 1)), need);
    }
    EXPECT_EQ(choose_t(8, 3), 6);
    EXPECT_THROW(choose_t(40, 1, 100), InfeasibleError);
}

TEST(gram_oracle, matches_explicit_span_projector) {
    GeneratorParams g{4, 1, 2, PrfVariant::Test, 3};
    auto states = generator_states(g);
    for (int t : {1, 2, 3}) {
        GramOracle o(states, t);
        std::vector<oracle::Vec> powers;
        for (const auto& s : states) powers.push_back(oracle::tensor_power(s, t));
        oracle::Mat P = oracle::span_projector(powers);
        EXPECT_EQ(o.rank(), static_cast<std::size_t>(std::llround(P.trace().real())));
        EXPECT_LT((explicit_span_projector(states, t) - P).norm(), 1e-9);
        Rng r(t);
        for (int i = 0; i < 10; ++i) {
            auto theta = qc::haar_vector(4, r);
            oracle::Vec tt = oracle::tensor_power(theta, t);
            EXPECT_NEAR(o.accept(theta), tt.dot(P * tt).real(), 1e-9);
        }
    }
}

TEST(gram_oracle, enrolled_states_accept_with_certainty) {
    GeneratorParams g{6, 1, 3, PrfVariant::Test, 0};
    auto o = GramOracle::for_generator(g, 4);
    for (std::uint64_t k = 0; k < 64; k += 7) {
        EXPECT_NEAR(o.accept(prs_generate(g, PrfKey::from_uint(k, 6))), 1.0, 1e-9);
    }
    EXPECT_LE(o.residual(), GramOracle::kResidualTolerance);
}

TEST(gram_oracle, span_invariance_under_reorder_and_duplicates) {
    GeneratorParams g{5, 1, 3, PrfVariant::Test, 2};
    auto states = generator_states(g);
    auto shuffled = states;
    std::reverse(shuffled.begin(), shuffled.end());
    auto dup = states;
    dup.insert(dup.end(), states.begin(), states.begin() + 10);
    GramOracle a(states, 3), b(shuffled, 3), c(dup, 3);
    Rng r(9);
    for (int i = 0; i < 20; ++i) {
        auto theta = qc::haar_vector(8, r);
        EXPECT_NEAR(a.accept(theta), b.accept(theta), 1e-9);
        EXPECT_NEAR(a.accept(theta), c.accept(theta), 1e-9);
    }
}

TEST(gram_oracle, enrolling_more_keys_never_decreases_acceptance) {
    GeneratorParams g{5, 1, 3, PrfVariant::Test, 4};
    auto states = generator_states(g);
    Rng r(11);
    std::vector<qc::Vector> thetas;
    for (int i = 0; i < 10; ++i) thetas.push_back(qc::haar_vector(8, r));
    std::vector<double> prev(thetas.size(), 0.0);
    for (std::size_t m : {4u, 8u, 16u, 32u}) {
        GramOracle o(std::vector<qc::Vector>(states.begin(), states.begin() + m), 2);
        for (std::size_t i = 0; i < thetas.size(); ++i) {
            double a = o.accept(thetas[i]);
            EXPECT_GE(a, prev[i] - 1e-9);
            prev[i] = a;
        }
    }
}

TEST(gram_attack, deterministic_and_worker_independent) {
    ExperimentSpec s;
    s.params = GeneratorParams{6, 1, 3, PrfVariant::Test, 0};
    s.t = 5;
    s.trials = 200;
    s.seed = 3;
    auto a = gram_attack(s);
    s.workers = 4;
    auto b = gram_attack(s);
    EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
    EXPECT_NEAR(a.accept_gen, 1.0, 1e-6);
    EXPECT_LE(a.accept_haar, a.extra.at("haar_bound").get<double>() + 4 * a.haar_stderr);
}

TEST(gram_attack, null_case_has_no_advantage) {
    ExperimentSpec s;
    s.params = GeneratorParams{6, 1, 3, PrfVariant::Test, 0};
    s.t = 5;
    s.trials = 2000;
    s.seed = 5;
    s.null_case = true;
    auto a = gram_attack(s);
    EXPECT_LE(std::abs(a.advantage), 2 * a.ci95);
}

TEST(purity_attack, matches_analytic_rejection) {
    ExperimentSpec s;
    s.kind = AttackKind::Purity;
    s.params = GeneratorParams{8, 1, 3, PrfVariant::Test, 0};
    s.eta = 0.5;
    s.trials = 4000;
    s.seed = 2;
    auto a = purity_attack(s);
    double analytic = a.extra.at("reject_gen_analytic").get<double>();
    EXPECT_NEAR(a.extra.at("reject_gen").get<double>(), analytic, 4 * std::sqrt(analytic * (1 - analytic) / 4000));
    EXPECT_EQ(a.extra.at("reject_haar").get<double>(), 0.0);
    s.eta = 1.0;
    EXPECT_THROW(purity_attack(s), InfeasibleError);
}

TEST(attacks, parse_kind) {
    EXPECT_EQ(parse_attack_kind("gram"), AttackKind::Gram);
    EXPECT_EQ(parse_attack_kind("purity"), AttackKind::Purity);
    EXPECT_THROW(parse_attack_kind("swap"), DomainError);
}
