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

#include <numeric>

#include "oracles.hpp"
#include "prslab/errors.hpp"
#include "prslab/symmetric.hpp"

using namespace prslab;
using namespace prslab::qc;

TEST(sym_dim, matches_pascal_oracle) {
    for (std::uint64_t N = 1; N <= 9; ++N)
        for (std::uint64_t t = 1; t <= 9; ++t) EXPECT_EQ(sym_dim(N, t), BigInt(oracle::sym_dim(N, t))) << N << "," << t;
    EXPECT_EQ(sym_dim(8, 9), BigInt(11440));
    EXPECT_THROW(sym_dim(0, 2), DomainError);
    EXPECT_THROW(sym_dim(2, 0), DomainError);
}

TEST(sym_projector, projector_properties) {
    for (auto [N, t] : {std::pair{2, 2}, {2, 3}, {3, 2}, {4, 2}, {2, 4}}) {
        Matrix P = sym_projector(N, t);
        EXPECT_LT((P * P - P).norm(), 1e-12);
        EXPECT_LT((P - P.adjoint()).norm(), 1e-12);
        EXPECT_NEAR(P.trace().real(), sym_dim(N, t).convert_to<double>(), 1e-10);
        Matrix ref = oracle::hybrid5(N, t) * sym_dim(N, t).convert_to<double>();
        EXPECT_LT((P - ref).norm(), 1e-12);
    }
}

TEST(sym_projector, invariant_under_permutations) {
    std::size_t N = 3;
    int t = 3;
    Matrix P = sym_projector(N, t);
    std::vector<int> sigma = {0, 1, 2};
    do {
        Matrix S = permutation_operator(N, sigma);
        EXPECT_LT((S * P - P).norm(), 1e-12);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

TEST(sym_projector, contains_tensor_powers) {
    Rng r(3);
    Vector v = haar_vector(3, r);
    Vector vt = oracle::tensor_power(v, 3);
    EXPECT_LT((sym_projector(3, 3) * vt - vt).norm(), 1e-12);
}

TEST(sym_projector, cap_enforced) {
    EXPECT_THROW(sym_projector(16, 4, 4096), ResourceError);
    EXPECT_THROW(dense_dimension(2, 13, 4096), ResourceError);
    EXPECT_EQ(dense_dimension(2, 12, 4096), 4096u);
}

TEST(tuples, digits_round_trip) {
    for (std::size_t i = 0; i < 27; ++i) {
        auto d = tuple_digits(i, 3, 3);
        EXPECT_EQ(d, oracle::digits(i, 3, 3));
        EXPECT_EQ(tuple_index(d, 3), i);
    }
}
