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

#include "common.hpp"
#include "prslab/protocols.hpp"

namespace prslab::lab {

Report run_binding_search(const ExperimentConfig& config) {
    Params p(config.params);
    auto gen = detail::generator_params(p, 6, 1, 3);
    if (gen.lambda > 10) throw ConfigError(p.path("lambda") + ": exhaustive pair search needs lambda <= 10");
    auto params = proto::commitment_desk_preset(gen.lambda, gen.d, gen.n, tomo::Mode::Analytic, gen.variant);
    params.verify.gen.prf_seed = gen.prf_seed;
    params.workers = config.workers;
    std::uint64_t paulis = config.trials.value_or(16);
    Rng rng(*config.seed);
    auto res = proto::binding_search(params, paulis, rng);

    Report r;
    r.metrics = res.to_json();
    r.metrics["binding_relaxed"] = params.binding_relaxed;
    r.metrics["envelope_vacuous"] = res.envelope >= 1.0;
    r.metrics["delta_candidate_rate"] = detail::rate(res.candidate_paulis, res.paulis);
    r.flags.push_back(flag_eq("witnessed_pairs_below_implied_overlap_bound", static_cast<double>(res.bound_violations),
                              0.0, 0.0,
                              "a matrix opening both bits forces every block overlap above "
                              "(eta0^2 + eta1^2 - 4 r^2) / (2 eta0 eta1), r^2 the acceptance threshold"));
    r.table = Table{{"paulis", "pairs_per_pauli", "candidate_paulis", "witnessed_paulis", "double_opening_rate",
                     "envelope"},
                    {{std::to_string(res.paulis), std::to_string(res.pairs_per_pauli),
                      std::to_string(res.candidate_paulis), std::to_string(res.witnessed_paulis),
                      detail::num(res.double_opening_rate()), detail::num(res.envelope)}}};
    return r;
}

}  // namespace prslab::lab
