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
#include "prslab/pauli.hpp"

using namespace prslab;
using namespace prslab::qc;

TEST(pauli_string, parse_and_index) {
    auto p = PauliString::from_string("IXYZ");
    EXPECT_EQ(p.str(), "IXYZ");
    EXPECT_EQ(p.qubits(), 4);
    EXPECT_EQ(p.y_count(), 1);
    EXPECT_FALSE(p.is_identity());
    EXPECT_TRUE(PauliString::from_string("III").is_identity());
    EXPECT_THROW(PauliString::from_string("IXA"), DomainError);
    for (std::uint64_t i = 0; i < 64; ++i) EXPECT_EQ(PauliString::from_index(i, 3), PauliString::from_index(i, 3));
    EXPECT_EQ(PauliString::from_index(0b011011, 3).str(), "XYZ");
}

TEST(pauli_string, matrix_matches_kron_oracle) {
    for (std::uint64_t i = 0; i < 64; ++i) {
        auto p = PauliString::from_index(i, 3);
        EXPECT_LT((p.matrix() - oracle::pauli(p.str())).norm(), 1e-15) << p.str();
    }
}

TEST(pauli_string, concat_block_split) {
    auto a = PauliString::from_string("XY"), b = PauliString::from_string("ZI");
    auto c = a.concat(b);
    EXPECT_EQ(c.str(), "XYZI");
    EXPECT_EQ(c.block(1, 2), b);
    auto parts = c.split(2);
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0], a);
}

TEST(pauli_apply, matches_matrix_product) {
    Rng r(3);
    for (std::uint64_t i = 0; i < 64; ++i) {
        auto p = PauliString::from_index(i, 3);
        Vector v = haar_vector(8, r);
        EXPECT_LT((pauli_apply(p, v) - oracle::pauli(p.str()) * v).norm(), 1e-14);
    }
}

TEST(pauli_conjugate, matches_matrix_product) {
    Rng r(5);
    Vector v = haar_vector(8, r);
    Matrix m = v * v.adjoint();
    for (std::uint64_t i = 0; i < 64; ++i) {
        auto p = PauliString::from_index(i, 3);
        Matrix P = oracle::pauli(p.str());
        EXPECT_LT((pauli_conjugate(p, m) - P * m * P.adjoint()).norm(), 1e-14);
        EXPECT_NEAR(std::abs(pauli_expectation(p, m) - (P * m).trace()), 0.0, 1e-14);
    }
    auto q = PauliString::from_string("XZ");
    Vector w = haar_vector(8, r);
    Matrix mw = w * w.adjoint();
    Matrix IP = oracle::kron(oracle::pauli("I"), oracle::pauli("XZ"));
    EXPECT_LT((pauli_conjugate_trailing(q, mw) - IP * mw * IP).norm(), 1e-14);
}

TEST(pauli, group_algebra) {
    for (std::uint64_t i = 0; i < 16; ++i) {
        Matrix P = PauliString::from_index(i, 2).matrix();
        EXPECT_LT((P * P - Matrix::Identity(4, 4)).norm(), 1e-15);
        EXPECT_LT((P - P.adjoint()).norm(), 1e-15);
        if (i != 0) {
            EXPECT_NEAR(std::abs(P.trace()), 0.0, 1e-15);
        }
    }
}

// Twirl identity: averaging |<psi|P|phi>|^2 over all 4^n Paulis gives 2^{-n}.
TEST(pauli, twirl_identity_full_enumeration) {
    Rng r(7);
    for (int n = 1; n <= 3; ++n) {
        for (int pair = 0; pair < 20; ++pair) {
            auto psi = haar_sample(n, r), phi = haar_sample(n, r);
            double sum = 0;
            std::uint64_t count = std::uint64_t{1} << (2 * n);
            for (std::uint64_t i = 0; i < count; ++i) {
                sum += std::norm(psi.inner(pauli_apply(PauliString::from_index(i, n), phi)));
            }
            EXPECT_NEAR(sum / static_cast<double>(count), std::ldexp(1.0, -n), 1e-10);
        }
    }
}

TEST(pauli, sample_is_uniform_over_labels) {
    Rng r(11);
    std::vector<int> hist(4, 0);
    for (int i = 0; i < 8000; ++i) {
        auto p = pauli_sample(2, r);
        hist[static_cast<int>(p[0])]++;
    }
    for (int c : hist) EXPECT_NEAR(c / 8000.0, 0.25, 0.025);
}
