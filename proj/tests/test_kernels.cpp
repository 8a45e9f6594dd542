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

#include <complex>
#include <random>
#include <vector>

#include "prslab/kernels.hpp"

using namespace prslab::kernels;

namespace {

std::vector<cplx> random_vec(std::size_t n, std::mt19937_64& g) {
    std::normal_distribution<double> d;
    std::vector<cplx> v(n);
    for (auto& x : v) x = {d(g), d(g)};
    return v;
}

class KernelEquivalence : public ::testing::TestWithParam<std::size_t> {};

}  // namespace

TEST(kernels, dispatch_reports_a_table) {
    const auto& t = active();
    EXPECT_TRUE(t.isa == Isa::Scalar || t.isa == Isa::Avx2);
    EXPECT_TRUE(select(Isa::Scalar));
    EXPECT_EQ(active().isa, Isa::Scalar);
    if (avx2_table() && cpu_has_avx2()) {
        EXPECT_TRUE(select(Isa::Avx2));
        EXPECT_EQ(active().isa, Isa::Avx2);
    }
}

TEST_P(KernelEquivalence, avx2_matches_scalar) {
    const KernelTable* simd = avx2_table();
    if (simd == nullptr || !cpu_has_avx2()) GTEST_SKIP() << "AVX2 variants unavailable";
    const KernelTable& ref = scalar_table();
    std::size_t n = GetParam();
    std::mt19937_64 g(n + 1);
    auto a = random_vec(n, g), b = random_vec(n, g);
    double scale = static_cast<double>(n) + 1.0;

    cplx c0 = ref.cdot(a.data(), b.data(), n), c1 = simd->cdot(a.data(), b.data(), n);
    EXPECT_NEAR(c0.real(), c1.real(), 1e-12 * scale);
    EXPECT_NEAR(c0.imag(), c1.imag(), 1e-12 * scale);
    EXPECT_NEAR(ref.sqdist(a.data(), b.data(), n), simd->sqdist(a.data(), b.data(), n), 1e-12 * scale);

    std::vector<cplx> m0 = random_vec(n * n, g), m1 = m0;
    ref.her_rank1(m0.data(), a.data(), 0.37, n);
    simd->her_rank1(m1.data(), a.data(), 0.37, n);
    for (std::size_t i = 0; i < n * n; ++i) ASSERT_NEAR(std::abs(m0[i] - m1[i]), 0.0, 1e-12 * scale);

    std::vector<std::uint64_t> u(n + 3), w(n + 3);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = g(), w[i] = g();
    EXPECT_EQ(ref.xor_popcount(u.data(), w.data(), u.size()), simd->xor_popcount(u.data(), w.data(), u.size()));
}

INSTANTIATE_TEST_SUITE_P(lengths, KernelEquivalence, ::testing::Values(0, 1, 2, 3, 4, 5, 7, 8, 9, 16, 31, 64, 257));

TEST(kernels, scalar_matches_direct_formulas) {
    const KernelTable& ref = scalar_table();
    std::vector<cplx> a = {{1, 2}, {3, -1}}, b = {{0, 1}, {2, 2}};
    cplx expected = std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
    EXPECT_EQ(ref.cdot(a.data(), b.data(), 2), expected);
    EXPECT_DOUBLE_EQ(ref.sqdist(a.data(), b.data(), 2), std::norm(a[0] - b[0]) + std::norm(a[1] - b[1]));
    std::vector<cplx> m(4, 0.0);
    ref.her_rank1(m.data(), a.data(), 2.0, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) EXPECT_EQ(m[j * 2 + i], 2.0 * a[i] * std::conj(a[j]));
    std::uint64_t x[2] = {0xF0, 0x1}, y[2] = {0x0F, 0x1};
    EXPECT_EQ(ref.xor_popcount(x, y, 2), 8u);
}
