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
#include "prslab/hybrids.hpp"

using namespace prslab;
using namespace prslab::hybrids;

namespace {

const std::vector<std::pair<std::size_t, int>> kGrid = {{2, 2}, {2, 3}, {4, 2}, {8, 2}, {3, 3}, {4, 3}};

}  // namespace

TEST(types, histogram_and_states) {
    EXPECT_EQ(type_of({0, 2, 2, 1}, 3), (std::vector<int>{1, 1, 2}));
    auto v = type_state({1, 1, 0}, 3, 2);
    EXPECT_NEAR(v.norm(), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(v(0 * 3 + 1)), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_THROW(bintype_state({1, 0, 0}, 3, 2), DomainError);
}

TEST(collision_probability, matches_enumeration) {
    for (auto [N, t] : kGrid) EXPECT_NEAR(collision_probability(N, t), oracle::collision_probability(N, t), 1e-15);
}

TEST(hybrid2, matches_definition) {
    for (auto [N, t] : kGrid) {
        EXPECT_LT((hybrid_density(2, N, t) - oracle::hybrid2(N, t)).cwiseAbs().maxCoeff(), 1e-12) << N << "," << t;
    }
}

TEST(hybrid2, equals_random_sign_average) {
    for (auto [N, t] : kGrid) {
        EXPECT_LT((hybrid2_by_signs(N, t) - oracle::hybrid2(N, t)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(hybrid3, equals_hybrid2_entrywise) {
    for (auto [N, t] : kGrid) {
        EXPECT_LE((hybrid_density(3, N, t) - hybrid_density(2, N, t)).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(hybrid4, matches_definition) {
    for (auto [N, t] : kGrid) {
        if (N < static_cast<std::size_t>(t)) {
            EXPECT_THROW(hybrid_density(4, N, t), DomainError);
            continue;
        }
        EXPECT_LT((hybrid_density(4, N, t) - oracle::hybrid4(N, t)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(hybrid5, matches_definition) {
    for (auto [N, t] : kGrid) {
        EXPECT_LT((hybrid_density(5, N, t) - oracle::hybrid5(N, t)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(hybrid_td, three_four_is_collision_probability) {
    for (auto [N, t] : kGrid) {
        double td = hybrid_td(3, 4, N, t);
        double expected = oracle::collision_probability(N, t);
        EXPECT_NEAR(td, expected, 1e-9) << N << "," << t;
        EXPECT_LE(td, static_cast<double>(t * t) / static_cast<double>(N));
        if (N >= static_cast<std::size_t>(t)) {
            EXPECT_NEAR(td, oracle::trace_distance(oracle::hybrid2(N, t), oracle::hybrid4(N, t)), 1e-9);
        }
    }
}

TEST(hybrid_td, four_five_within_envelope) {
    for (auto [N, t] : {std::pair<std::size_t, int>{4, 2}, {8, 2}, {8, 3}}) {
        double td = hybrid_td(4, 5, N, t);
        EXPECT_NEAR(td, oracle::trace_distance(oracle::hybrid4(N, t), oracle::hybrid5(N, t)), 1e-9);
        EXPECT_LE(td, static_cast<double>(t * t) / static_cast<double>(N));
    }
}

TEST(hybrid1, zero_prf_gives_uniform_tensor_power) {
    HybridSource src{GeneratorParams{6, 1, 1, PrfVariant::Zero, 0}, 2};
    auto h1 = hybrid_density(1, 2, 2, &src);
    oracle::Vec plus = oracle::Vec::Constant(2, 1 / std::sqrt(2.0));
    oracle::Vec p2 = oracle::tensor_power(plus, 2);
    EXPECT_LT((h1 - p2 * p2.adjoint()).norm(), 1e-12);
}

TEST(hybrid1, is_density_matrix_in_symmetric_subspace) {
    HybridSource src{GeneratorParams{8, 1, 2, PrfVariant::Crypto, 0}, 4};
    auto h1 = hybrid_density(1, 4, 2, &src);
    EXPECT_NEAR(h1.trace().real(), 1.0, 1e-12);
    EXPECT_TRUE(qc::is_density_matrix(h1));
    Matrix sym = hybrid_density(5, 4, 2) * 10.0;
    EXPECT_LT((sym * h1 - h1).norm(), 1e-12);
    HybridSource single{GeneratorParams{8, 1, 2, PrfVariant::Crypto, 0}, 1};
    EXPECT_LT((hybrid_density(1, 4, 2, &single) - h1).norm(), 1e-14);
}

TEST(hybrid_report, flags_consistent) {
    auto r = hybrid_report(4, 2);
    EXPECT_TRUE(r.pass_23());
    EXPECT_TRUE(r.pass_34());
    EXPECT_TRUE(r.pass_45());
    EXPECT_TRUE(r.pass_25());
    EXPECT_LE(r.td_25, r.td_23 + r.td_34 + r.td_45 + 1e-12);
    auto small = hybrid_report(2, 3);
    EXPECT_FALSE(small.hybrid4_defined);
    EXPECT_EQ(small.td_34, 1.0);
}

TEST(hybrids, invalid_id_and_cap) {
    EXPECT_THROW(hybrid_density(6, 2, 2), DomainError);
    EXPECT_THROW(hybrid_density(1, 2, 2), DomainError);
    EXPECT_THROW(hybrid_density(2, 16, 4, nullptr, 4096), ResourceError);
}
