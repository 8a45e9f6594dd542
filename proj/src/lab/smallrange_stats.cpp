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

#include <cmath>

#include "common.hpp"
#include "prslab/smallrange.hpp"

namespace prslab::lab {

using detail::num;

Report run_smallrange_stats(const ExperimentConfig& config) {
    Params p(config.params);
    auto r_count = static_cast<std::size_t>(detail::int_param(p, "r", 8, 1, 1 << 20));
    auto base_size = static_cast<std::size_t>(detail::int_param(p, "base_size", 16, 1, 1 << 16));
    auto domain = static_cast<std::size_t>(detail::int_param(p, "domain", 32, 2, 1 << 20));
    auto point = static_cast<std::size_t>(detail::int_param(p, "point", 0, 0, static_cast<int>(domain) - 1));
    auto shape = p.string("base", "linear");
    std::vector<double> weights(base_size);
    for (std::size_t i = 0; i < base_size; ++i) {
        if (shape == "linear") weights[i] = static_cast<double>(i + 1);
        else if (shape == "uniform") weights[i] = 1.0;
        else if (shape == "geometric") weights[i] = std::pow(0.8, static_cast<double>(i));
        else throw ConfigError(p.path("base") + ": expected 'linear', 'uniform' or 'geometric'");
    }
    std::discrete_distribution<std::size_t> dist(weights.begin(), weights.end());
    std::vector<double> probs = dist.probabilities();
    std::function<std::size_t(Rng&)> base = [&dist](Rng& rng) {
        auto d = dist;
        return d(rng.engine());
    };
    std::uint64_t tables = config.trials.value_or(10000);
    Rng master(*config.seed);

    std::vector<double> observed(base_size, 0.0);
    std::vector<std::vector<double>> all_points(domain, std::vector<double>(base_size, 0.0));
    std::uint64_t index_collisions = 0;
    double distinct_sum = 0.0, distinct_sq = 0.0;
    std::vector<double> bucket_hist(domain + 1, 0.0);
    for (std::uint64_t t = 0; t < tables; ++t) {
        Rng rng = master.derive(t);
        auto table = sr::sr_sample<std::size_t>(r_count, domain, base, rng);
        for (std::size_t x = 0; x < domain; ++x) all_points[x][table(x)] += 1.0;
        observed[table(point)] += 1.0;
        index_collisions += table.index_of(0) == table.index_of(1);
        auto stats = sr::sr_statistics(table);
        auto dv = static_cast<double>(stats.distinct_images);
        distinct_sum += dv;
        distinct_sq += dv * dv;
        for (std::size_t c = 0; c < stats.collision_histogram.size() && c <= domain; ++c) {
            bucket_hist[c] += static_cast<double>(stats.collision_histogram[c]);
        }
    }
    auto T = static_cast<double>(tables);
    std::vector<double> expected(base_size);
    for (std::size_t i = 0; i < base_size; ++i) expected[i] = probs[i] * T;
    auto chi = sr::chi_square(observed, expected);
    double min_p = 1.0;
    for (const auto& counts : all_points) min_p = std::min(min_p, sr::chi_square(counts, expected).p_value);

    double coll_rate = static_cast<double>(index_collisions) / T;
    double q = 1.0 / static_cast<double>(r_count);
    double coll_sigma = std::sqrt(q * (1.0 - q) / T);
    double distinct_mean = distinct_sum / T;
    double distinct_se = std::sqrt(std::max(0.0, distinct_sq / T - distinct_mean * distinct_mean) / T);
    double distinct_expected = sr::expected_distinct(r_count, domain);

    Report r;
    r.metrics = {{"r", r_count},
                 {"base_size", base_size},
                 {"base", shape},
                 {"domain", domain},
                 {"tables", tables},
                 {"point", point},
                 {"chi_square", {{"statistic", chi.statistic}, {"dof", chi.dof}, {"p_value", chi.p_value}}},
                 {"min_p_value_over_points", min_p},
                 {"index_collision_rate", coll_rate},
                 {"index_collision_expected", q},
                 {"index_collision_sigma", coll_sigma},
                 {"distinct_indices_mean", distinct_mean},
                 {"distinct_indices_expected", distinct_expected},
                 {"bucket_size_histogram", bucket_hist}};
    r.flags.push_back(flag_ge("marginal_chi_square_p_value", chi.p_value, 0.01,
                              "each evaluation point is distributed exactly as the base distribution"));
    r.flags.push_back(flag_le("index_collision_deviation", std::abs(coll_rate - q), 3.0 * coll_sigma,
                              "two distinct points share an index with probability 1/r"));
    r.flags.push_back(flag_le("distinct_indices_deviation", std::abs(distinct_mean - distinct_expected),
                              4.0 * distinct_se + 1e-12, "expected distinct indices r (1 - (1 - 1/r)^|X|)"));

    r.table = Table{{"value", "probability", "observed", "expected"}, {}};
    Series so{"observed frequency", {}, {}}, se{"base probability", {}, {}};
    for (std::size_t i = 0; i < base_size; ++i) {
        r.table->rows.push_back({std::to_string(i), num(probs[i]), num(observed[i]), num(expected[i])});
        so.x.push_back(static_cast<double>(i)), so.y.push_back(observed[i] / T);
        se.x.push_back(static_cast<double>(i)), se.y.push_back(probs[i]);
    }
    r.chart = Chart{"Single-point marginal of SR_r^D", "base value", "probability", {so, se}, false};
    return r;
}

}  // namespace prslab::lab
