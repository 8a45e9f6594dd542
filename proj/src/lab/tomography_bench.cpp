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

#include <algorithm>
#include <cmath>

#include "common.hpp"
#include "prslab/parallel.hpp"
#include "prslab/tomography.hpp"

namespace prslab::lab {

using detail::num;

namespace {

qc::Matrix bench_state(const Params& p, const std::string& key, std::size_t N, Rng rng) {
    int q = 0;
    try {
        q = qc::qubits_for_dimension(N);
    } catch (const std::exception&) {
        throw ConfigError(p.path("N") + ": expected a power of two");
    }
    auto kind = p.string(key, "haar");
    if (kind == "haar") return qc::DensityMatrix::from_pure(qc::haar_sample(q, rng)).matrix();
    if (kind == "zero") return qc::DensityMatrix::from_pure(qc::PureState::basis(q, 0)).matrix();
    if (kind == "mixed") return qc::DensityMatrix::maximally_mixed(q).matrix();
    throw ConfigError(p.path(key) + ": expected 'haar', 'zero' or 'mixed'");
}

tomo::Mode mode_param(const Params& p, const std::string& fallback) {
    try {
        return tomo::parse_mode(p.string("mode", fallback));
    } catch (const std::exception& e) {
        throw ConfigError(p.path("mode") + ": " + e.what());
    }
}

}  // namespace

Report run_tomography_bench(const ExperimentConfig& config) {
    Params p(config.params);
    auto N = static_cast<std::size_t>(detail::int_param(p, "N", 2, 2, 64));
    double s = p.number("s", 4096);
    if (!(s >= 1.0) || s != std::floor(s)) throw ConfigError(p.path("s") + ": expected an integer >= 1");
    auto mode = mode_param(p, "sampled");
    std::uint64_t trials = config.trials.value_or(200);
    Rng master(*config.seed);
    auto rho = bench_state(p, "state", N, master.derive(~0ull));
    tomo::DensitySource source(rho);

    std::vector<double> err(trials);
    parallel_for(trials, config.workers, [&](std::size_t i) {
        Rng rng = master.derive(i);
        auto t = tomo::tomography_base(source, s, rng, mode);
        err[i] = qc::frobenius_sq(t.M, rho);
    });
    double eps = static_cast<double>(N) / s;
    double mean = 0.0;
    std::uint64_t far = 0;
    for (double e : err) {
        mean += e;
        if (e >= 4.0 * eps) ++far;
    }
    mean /= static_cast<double>(trials);

    Params b = p.child("boosted");
    tomo::TomographyBudget budget;
    budget.N = static_cast<std::size_t>(detail::int_param(b, "N", 2, 2, 64));
    budget.s = b.number("s", 2048);
    budget.reps = detail::int_param(b, "reps", 16, 1, 1024);
    auto bmode = mode_param(b, "sampled");
    try {
        budget.validate();
    } catch (const std::exception& e) {
        throw ConfigError(b.path("s") + ": " + e.what());
    }
    auto btrials = static_cast<std::uint64_t>(detail::int_param(b, "trials", 100, 1, 1000000));
    Rng bmaster = master.derive(0x626f6f7374ull);
    auto brho = bench_state(b, "state", budget.N, bmaster.derive(~0ull));
    tomo::DensitySource bsource(brho);
    std::vector<double> berr(btrials);
    std::vector<char> aborted(btrials, 0);
    parallel_for(btrials, config.workers, [&](std::size_t i) {
        Rng rng = bmaster.derive(i);
        auto t = tomo::tomography_boosted(bsource, budget, rng, bmode, 1);
        aborted[i] = t.aborted;
        berr[i] = t.aborted ? INFINITY : qc::frobenius_sq(t.M, brho);
    });
    std::uint64_t within = 0, aborts = 0;
    for (std::size_t i = 0; i < btrials; ++i) {
        aborts += aborted[i] ? 1 : 0;
        if (!aborted[i] && berr[i] <= budget.guarantee()) ++within;
    }
    double within_rate = detail::rate(within, btrials);

    Report r;
    r.metrics = {{"base",
                  {{"N", N}, {"s", s}, {"mode", tomo::mode_name(mode)}, {"trials", trials},
                   {"mean_frobenius_sq", mean}, {"N_over_s", eps},
                   {"exact_expectation", (static_cast<double>(N) - rho.squaredNorm()) / s},
                   {"max_frobenius_sq", *std::max_element(err.begin(), err.end())},
                   {"fraction_ge_4N_over_s", detail::rate(far, trials)}}},
                 {"boosted",
                  {{"N", budget.N}, {"s", budget.s}, {"reps", budget.reps}, {"mode", tomo::mode_name(bmode)},
                   {"trials", btrials}, {"guarantee_9N_over_s", budget.guarantee()},
                   {"within_guarantee_rate", within_rate}, {"aborts", aborts},
                   {"total_copies", budget.total_copies().str()}}}};
    r.flags.push_back(flag_le("mean_error_le_1.5_N_over_s", mean, 1.5 * eps,
                              "Pauli tomography has expected squared Frobenius error below N/s"));
    r.flags.push_back(flag_ge("boosted_within_9N_over_s", within_rate, 0.99,
                              "median-style boosting reaches 9N/s except with probability exponentially small in reps"));
    r.flags.push_back(flag_eq("boosted_aborts", static_cast<double>(aborts), 0.0, 0.0,
                              "boosting on an honest source never aborts"));

    r.table = Table{{"trial", "frobenius_sq"}, {}};
    std::vector<double> sorted = err;
    std::sort(sorted.begin(), sorted.end());
    Series q{"empirical quantile", {}, {}}, lm{"mean", {}, {}}, lb{"1.5 N/s", {}, {}};
    for (std::size_t i = 0; i < trials; ++i) {
        r.table->rows.push_back({std::to_string(i), num(err[i])});
        double x = (static_cast<double>(i) + 0.5) / static_cast<double>(trials);
        q.x.push_back(x), q.y.push_back(sorted[i]);
    }
    lm.x = lb.x = {0.0, 1.0};
    lm.y = {mean, mean};
    lb.y = {1.5 * eps, 1.5 * eps};
    r.chart = Chart{"Base tomography squared Frobenius error", "quantile", "||M - rho||_F^2", {q, lm, lb}, false};
    return r;
}

}  // namespace prslab::lab
