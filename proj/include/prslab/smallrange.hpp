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

#pragma once

#include <cstdint>
#include <functional>
#include <nlohmann/json.hpp>
#include <vector>

#include "prslab/errors.hpp"
#include "prslab/rng.hpp"

namespace prslab::sr {

/// SR_r^D(X): r i.i.d. draws from D, each domain point mapped to one of them
/// by an i.i.d. uniform index. X is identified with [0, |X|).
template <typename T>
class SmallRangeTable {
   public:
    SmallRangeTable(std::vector<std::size_t> index, std::vector<T> samples)
        : index_(std::move(index)), samples_(std::move(samples)) {
        for (std::size_t i : index_) {
            if (i >= samples_.size()) throw DomainError("small-range index out of range");
        }
    }

    std::size_t range() const noexcept { return samples_.size(); }
    std::size_t domain_size() const noexcept { return index_.size(); }
    std::size_t index_of(std::size_t x) const { return index_.at(x); }
    const T& operator()(std::size_t x) const { return samples_[index_.at(x)]; }
    const std::vector<std::size_t>& indices() const noexcept { return index_; }
    const std::vector<T>& samples() const noexcept { return samples_; }

   private:
    std::vector<std::size_t> index_;
    std::vector<T> samples_;
};

/// Draws the r base samples first, then the |X| indices, from one stream.
template <typename T>
SmallRangeTable<T> sr_sample(std::size_t r, std::size_t domain_size, const std::function<T(Rng&)>& base,
                             Rng& rng) {
    if (r == 0) {
        throw DomainError("small-range distribution needs r >= 1");
    }
    std::vector<T> samples;
    samples.reserve(r);
    for (std::size_t i = 0; i < r; ++i) samples.push_back(base(rng));
    std::vector<std::size_t> index(domain_size);
    for (auto& i : index) i = static_cast<std::size_t>(rng.below(r));
    return SmallRangeTable<T>(std::move(index), std::move(samples));
}

struct SrStats {
    std::size_t r = 0;
    std::size_t domain_size = 0;
    /// Number of distinct indices in use (an upper bound on distinct images).
    std::size_t distinct_images = 0;
    std::size_t max_bucket = 0;
    /// bucket_sizes[i] = |{x : i_x = i}|
    std::vector<std::size_t> bucket_sizes;
    /// collision_histogram[c] = number of buckets holding exactly c points
    std::vector<std::size_t> collision_histogram;

    nlohmann::json to_json() const;
};

SrStats index_statistics(const std::vector<std::size_t>& index, std::size_t r);

template <typename T>
SrStats sr_statistics(const SmallRangeTable<T>& table) {
    return index_statistics(table.indices(), table.range());
}

/// r (1 - (1 - 1/r)^{|X|})
double expected_distinct(std::size_t r, std::size_t domain_size);

struct ChiSquare {
    double statistic = 0.0;
    double dof = 0.0;
    double p_value = 1.0;
};

/// Pearson goodness of fit; bins with zero expectation must have zero counts.
ChiSquare chi_square(const std::vector<double>& observed, const std::vector<double>& expected);

}  // namespace prslab::sr
