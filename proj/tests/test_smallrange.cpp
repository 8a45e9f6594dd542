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

#include <boost/math/distributions/binomial.hpp>
#include <cmath>
#include <set>

#include "oracles.hpp"
#include "prslab/smallrange.hpp"

using namespace prslab;
using namespace prslab::sr;

namespace {

const std::function<int(Rng&)> kUniform16 = [](Rng& r) { return static_cast<int>(r.below(16)); };

}  // namespace

TEST(small_range, rejects_empty_range) {
    Rng r(1);
    EXPECT_THROW(sr_sample<int>(0, 8, kUniform16, r), DomainError);
}

TEST(small_range, range_one_is_constant) {
    Rng r(2);
    auto t = sr_sample<int>(1, 64, kUniform16, r);
    for (std::size_t x = 0; x < 64; ++x) EXPECT_EQ(t(x), t(0));
    EXPECT_EQ(sr_statistics(t).distinct_images, 1u);
}

TEST(small_range, reproducible_and_bounded) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng a(seed), b(seed);
        auto ta = sr_sample<int>(8, 100, kUniform16, a);
        auto tb = sr_sample<int>(8, 100, kUniform16, b);
        EXPECT_EQ(ta.indices(), tb.indices());
        EXPECT_EQ(ta.samples(), tb.samples());
        auto st = sr_statistics(ta);
        EXPECT_LE(st.distinct_images, 8u);
        std::set<int> images;
        for (std::size_t x = 0; x < 100; ++x) images.insert(ta(x));
        EXPECT_LE(images.size(), st.distinct_images);
        std::size_t total = 0;
        for (auto c : st.bucket_sizes) total += c;
        EXPECT_EQ(total, 100u);
    }
}

TEST(small_range, expected_distinct_closed_form) {
    EXPECT_DOUBLE_EQ(expected_distinct(1, 10), 1.0);
    EXPECT_NEAR(expected_distinct(2, 2), 1.5, 1e-15);
    EXPECT_NEAR(expected_distinct(4, 3), 4 * (1 - 27.0 / 64), 1e-15);
    Rng r(3);
    const int tables = 4000;
    double mean = 0;
    for (int i = 0; i < tables; ++i) mean += sr_statistics(sr_sample<int>(8, 32, kUniform16, r)).distinct_images;
    mean /= tables;
    EXPECT_NEAR(mean, expected_distinct(8, 32), 0.03);
}

TEST(small_range, bucket_sizes_follow_binomial) {
    const std::size_t r = 16, domain = 256;
    boost::math::binomial_distribution<double> bin(domain, 1.0 / r);
    Rng rng(4);
    const int tables = 100;
    std::vector<double> observed(9, 0.0), expected(9, 0.0);
    for (int t = 0; t < tables; ++t) {
        auto st = sr_statistics(sr_sample<int>(r, domain, kUniform16, rng));
        for (auto c : st.bucket_sizes) {
            std::size_t bin_idx = c <= 10 ? 0 : c >= 24 ? 8 : (c - 11) / 2 + 1;
            observed[bin_idx] += 1;
        }
    }
    for (std::size_t c = 0; c <= domain; ++c) {
        std::size_t bin_idx = c <= 10 ? 0 : c >= 24 ? 8 : (c - 11) / 2 + 1;
        expected[bin_idx] += tables * r * boost::math::pdf(bin, static_cast<double>(c));
    }
    auto chi = chi_square(observed, expected);
    EXPECT_EQ(chi.dof, 8.0);
    EXPECT_GT(chi.p_value, 0.001) << chi.statistic;
}

TEST(small_range, pairwise_collision_rate_is_one_over_r) {
    Rng rng(5);
    const int tables = 20000;
    int hits = 0;
    for (int t = 0; t < tables; ++t) {
        auto tab = sr_sample<int>(8, 2, kUniform16, rng);
        hits += tab.index_of(0) == tab.index_of(1);
    }
    double p = static_cast<double>(hits) / tables;
    EXPECT_NEAR(p, 1.0 / 8, 4 * std::sqrt(0.125 * 0.875 / tables));
}

TEST(chi_square, known_statistic) {
    auto c = chi_square({10, 20, 30}, {20, 20, 20});
    EXPECT_DOUBLE_EQ(c.statistic, 10.0);
    EXPECT_EQ(c.dof, 2.0);
    EXPECT_NEAR(c.p_value, std::exp(-5.0), 1e-12);
    auto perfect = chi_square({5, 5}, {5, 5});
    EXPECT_DOUBLE_EQ(perfect.p_value, 1.0);
}

TEST(small_range, index_statistics_histogram) {
    auto st = index_statistics({0, 0, 1, 3, 3, 3}, 4);
    EXPECT_EQ(st.distinct_images, 3u);
    EXPECT_EQ(st.max_bucket, 3u);
    EXPECT_EQ(st.bucket_sizes, (std::vector<std::size_t>{2, 1, 0, 3}));
    ASSERT_GE(st.collision_histogram.size(), 4u);
    EXPECT_EQ(st.collision_histogram[0], 1u);
    EXPECT_EQ(st.collision_histogram[1], 1u);
    EXPECT_EQ(st.collision_histogram[2], 1u);
    EXPECT_EQ(st.collision_histogram[3], 1u);
}
