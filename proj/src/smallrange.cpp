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

#include "prslab/smallrange.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>

namespace prslab::sr {

SrStats index_statistics(const std::vector<std::size_t>& index, std::size_t r) {
    SrStats s;
    s.r = r;
    s.domain_size = index.size();
    s.bucket_sizes.assign(r, 0);
    for (std::size_t i : index) {
        if (i >= r) throw DomainError("index outside [0, r)");
        ++s.bucket_sizes[i];
    }
    s.collision_histogram.assign(index.size() + 1, 0);
    for (std::size_t b : s.bucket_sizes) {
        if (b > 0) ++s.distinct_images;
        s.max_bucket = std::max(s.max_bucket, b);
        ++s.collision_histogram[b];
    }
    s.collision_histogram.resize(s.max_bucket + 1);
    return s;
}

nlohmann::json SrStats::to_json() const {
    return {{"r", r},
            {"domain_size", domain_size},
            {"distinct_images", distinct_images},
            {"expected_distinct", expected_distinct(r, domain_size)},
            {"max_bucket", max_bucket},
            {"collision_histogram", collision_histogram}};
}

double expected_distinct(std::size_t r, std::size_t domain_size) {
    double rr = static_cast<double>(r);
    return rr * (1.0 - std::pow(1.0 - 1.0 / rr, static_cast<double>(domain_size)));
}

ChiSquare chi_square(const std::vector<double>& observed, const std::vector<double>& expected) {
    if (observed.size() != expected.size() || observed.empty()) {
        throw ShapeError("chi_square needs equally sized, nonempty bins");
    }
    ChiSquare c;
    std::size_t bins = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0.0) {
            if (observed[i] != 0.0) {
                c.statistic = std::numeric_limits<double>::infinity();
                c.p_value = 0.0;
                return c;
            }
            continue;
        }
        double diff = observed[i] - expected[i];
        c.statistic += diff * diff / expected[i];
        ++bins;
    }
    c.dof = static_cast<double>(bins) - 1.0;
    if (c.dof < 1.0) {
        c.p_value = 1.0;
        return c;
    }
    boost::math::chi_squared dist(c.dof);
    c.p_value = boost::math::cdf(boost::math::complement(dist, c.statistic));
    return c;
}

}  // namespace prslab::sr
