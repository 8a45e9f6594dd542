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
#include "prslab/attacks.hpp"

namespace prslab::lab {

using detail::num;

Report run_attack(const ExperimentConfig& config) {
    Params p(config.params);
    attacks::ExperimentSpec spec;
    try {
        spec.kind = attacks::parse_attack_kind(p.string("kind", "gram"));
    } catch (const std::exception& e) {
        throw ConfigError(p.path("kind") + ": " + e.what());
    }
    bool gram = spec.kind == attacks::AttackKind::Gram;
    spec.params = detail::generator_params(p, 8, 1, 3);
    if (gram && spec.params.lambda > 16) throw ConfigError(p.path("lambda") + ": Gram attack enrolls every key, lambda <= 16");
    spec.eta = p.number("eta", gram ? 1.0 : 0.5);
    if (!(spec.eta >= 0.0 && spec.eta <= 1.0)) throw ConfigError(p.path("eta") + ": expected a value in [0, 1]");
    spec.t = detail::int_param(p, "t", 0, 0, 4096);
    spec.trials = config.trials.value_or(gram ? 10000 : 1000);
    spec.seed = *config.seed;
    spec.workers = config.workers;
    spec.null_case = p.boolean("null", false);

    auto a = attacks::run_distinguishing_experiment(spec);
    Report r;
    r.metrics = a.to_json();
    if (spec.null_case) {
        r.flags.push_back(flag_le("null_advantage_within_noise", std::abs(a.advantage), 2.0 * a.ci95,
                                  "two Haar ensembles are indistinguishable (|advantage| within 2 x CI95)"));
    } else if (gram) {
        double bound = a.extra.at("haar_bound").get<double>();
        double min_gen = a.extra.at("min_accept_gen").get<double>();
        r.flags.push_back(flag_ge("generator_acceptance_is_one", min_gen, 1.0 - 1e-6,
                                  "enrolled states lie in the projected span"));
        r.flags.push_back(flag_le("haar_acceptance_le_rank_bound", a.accept_haar, bound + 3.0 * a.haar_stderr,
                                  "Haar acceptance is at most 2^lambda / dim Sym^t (plus 3 sigma)"));
        r.flags.push_back(flag_ge("advantage_ge_one_third", a.advantage, 1.0 / 3.0,
                                  "symmetric-subspace attack distinguishes with advantage at least 1/3"));
        r.flags.push_back(flag_le("pseudo_inverse_residual", a.extra.at("pinv_residual").get<double>(), 1e-6,
                                  "Gram pseudo-inverse reproduces the projector on the span"));
    } else {
        double rej_gen = a.extra.at("reject_gen").get<double>();
        double rej_haar = a.extra.at("reject_haar").get<double>();
        r.flags.push_back(flag_ge("generator_rejection_ge_one_third", rej_gen, 1.0 / 3.0,
                                  "SWAP tests reject the mixed abort state with frequency at least 1/3"));
        r.flags.push_back(flag_eq("haar_rejection_is_zero", rej_haar, 0.0, 0.0,
                                  "pure states pass every SWAP test"));
    }
    r.table = Table{{"kind", "lambda", "n", "t", "trials", "accept_gen", "accept_haar", "advantage", "ci95"},
                    {{a.kind, std::to_string(a.lambda), std::to_string(a.n), std::to_string(a.t),
                      std::to_string(a.trials), num(a.accept_gen), num(a.accept_haar), num(a.advantage),
                      num(a.ci95)}}};
    return r;
}

}  // namespace prslab::lab
