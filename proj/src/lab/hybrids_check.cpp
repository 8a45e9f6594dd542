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
#include "prslab/hybrids.hpp"

namespace prslab::lab {

using detail::num;

Report run_hybrids_check(const ExperimentConfig& config) {
    Params p(config.params);
    std::vector<std::pair<std::size_t, int>> grid = {{2, 2}, {2, 3}, {4, 2}, {8, 2}, {4, 3}, {8, 3}};
    if (p.has("grid")) {
        grid.clear();
        const auto& g = p.raw("grid");
        if (!g.is_array()) throw ConfigError(p.path("grid") + ": expected an array of [N, t] pairs");
        for (std::size_t i = 0; i < g.size(); ++i) {
            const auto& e = g[i];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
                e[0].get<int>() < 1 || e[1].get<int>() < 1) {
                throw ConfigError(p.path("grid") + "[" + std::to_string(i) + "]: expected [N, t] with N, t >= 1");
            }
            grid.emplace_back(e[0].get<std::size_t>(), e[1].get<int>());
        }
    }
    auto cap = static_cast<std::size_t>(p.integer("dimension_cap", static_cast<std::int64_t>(qc::kDefaultDimensionCap)));
    bool with_h1 = p.boolean("hybrid1", false);
    Params h1 = p.child("generator");
    hybrids::HybridSource source{detail::generator_params(h1, 8, 1, 1), config.workers};

    Report r;
    r.table = Table{{"N", "t", "max_abs_h2_h3", "td_h3_h4", "collision", "t2_over_N", "td_h4_h5", "td_h2_h5", "td_h1_h2"}, {}};
    Chart chart{"Hybrid distances against the t^2/N envelope", "grid point", "trace distance", {}, false};
    Series s34{"TD(H3,H4)", {}, {}}, scol{"collision prob.", {}, {}}, s45{"TD(H4,H5)", {}, {}}, senv{"t^2/N (clipped at 1)", {}, {}};
    nlohmann::json points = nlohmann::json::array();
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        auto [N, t] = grid[gi];
        const hybrids::HybridSource* src = nullptr;
        if (with_h1 && (std::size_t{1} << source.params.n) == N) src = &source;
        auto h = hybrids::hybrid_report(N, t, src, cap);
        std::string at = "[N=" + std::to_string(N) + ",t=" + std::to_string(t) + "]";
        r.flags.push_back(flag_le("h2_equals_h3" + at, h.max_abs_23, 1e-10,
                                  "parity-class hybrid equals the binary-type hybrid entrywise"));
        r.flags.push_back(flag_eq("td_h3_h4_equals_collision" + at, h.td_34, h.collision, 1e-9,
                                  "TD(H3,H4) is the probability that t draws from [N] collide"));
        r.flags.push_back(flag_le("td_h3_h4_le_t2_over_N" + at, h.td_34, h.envelope + 1e-12,
                                  "collision probability is at most t^2/N"));
        if (h.hybrid4_defined) {
            r.flags.push_back(flag_le("td_h4_h5_le_t2_over_N" + at, h.td_45, h.envelope + 1e-12,
                                      "distinct-type hybrid is t^2/N-close to the symmetric-subspace state"));
        }
        points.push_back(h.to_json());
        r.table->rows.push_back({std::to_string(N), std::to_string(t), num(h.max_abs_23), num(h.td_34),
                                 num(h.collision), num(h.envelope), h.hybrid4_defined ? num(h.td_45) : "",
                                 num(h.td_25), h.td_12 ? num(*h.td_12) : ""});
        double x = static_cast<double>(gi);
        s34.x.push_back(x), s34.y.push_back(h.td_34);
        scol.x.push_back(x), scol.y.push_back(h.collision);
        senv.x.push_back(x), senv.y.push_back(std::min(1.0, h.envelope));
        if (h.hybrid4_defined) s45.x.push_back(x), s45.y.push_back(h.td_45);
    }
    chart.series = {s34, scol, s45, senv};
    r.chart = chart;
    r.metrics["points"] = points;
    return r;
}

}  // namespace prslab::lab
