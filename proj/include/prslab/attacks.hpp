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

#include <functional>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "prslab/generators.hpp"
#include "prslab/quantum.hpp"

namespace prslab::attacks {

/// Smallest t with 6 * 2^lambda <= C(2^n + t - 1, t); InfeasibleError past max_t.
int choose_t(int lambda, int n, int max_t = 4096);

/// Projector onto span{|psi_k>^{(x) t}} represented through the Gram matrix
/// of the enrolled states, so the N^t space is never formed.
class GramOracle {
   public:
    /// Pseudo-inverse rank cutoff relative to the largest eigenvalue.
    static constexpr double kRankCutoff = 1e-8;
    static constexpr double kResidualTolerance = 1e-6;

    GramOracle(const std::vector<qc::Vector>& states, int copies);
    /// Enrolls every lambda-bit key of a binary-phase PRS (lambda <= 16).
    static GramOracle for_generator(const GeneratorParams& params, int copies);

    /// ||P |theta>^{(x) t}||^2 = v^dag (G o t)^+ v with v_k = <psi_k|theta>^t.
    double accept(const qc::Vector& theta) const;
    double accept(const qc::PureState& theta) const { return accept(theta.amplitudes()); }

    int copies() const noexcept { return copies_; }
    std::size_t enrolled() const noexcept { return static_cast<std::size_t>(states_.cols()); }
    std::size_t rank() const noexcept { return static_cast<std::size_t>(whiten_.rows()); }
    const qc::Matrix& gram() const noexcept { return gram_; }
    double residual() const noexcept { return residual_; }

   private:
    qc::Matrix states_;  // columns are |psi_k>
    qc::Matrix gram_;    // <psi_k|psi_l>
    qc::Matrix whiten_;  // Lambda^{-1/2} V^dag over the kept spectrum of G o t
    int copies_ = 1;
    double residual_ = 0.0;
};

/// Explicit projector onto span{|psi_k>^{(x) t}}; tiny dimensions only.
qc::Matrix explicit_span_projector(const std::vector<qc::Vector>& states, int copies,
                                   std::size_t cap = qc::kDefaultDimensionCap);

struct AttackReport {
    std::string kind;
    int lambda = 0;
    int n = 0;
    int t = 0;
    double accept_gen = 0.0;
    double accept_haar = 0.0;
    double advantage = 0.0;
    double ci95 = 0.0;
    /// Standard error of the Haar-ensemble mean.
    double haar_stderr = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    nlohmann::json extra = nlohmann::json::object();

    nlohmann::json to_json() const;
};

enum class AttackKind { Gram, Purity };

AttackKind parse_attack_kind(std::string_view name);

struct ExperimentSpec {
    AttackKind kind = AttackKind::Gram;
    GeneratorParams params;
    double eta = 1.0;
    /// Copies; 0 selects choose_t (Gram) or ceil(4 / kappa) (purity).
    int t = 0;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    /// Replace the generator ensemble by a second Haar ensemble.
    bool null_case = false;
};

/// SWAP-test purity distinguisher: floor(t/2) pairwise tests per trial,
/// reject if any fails. The generator state is the abort-traced PRS.
AttackReport purity_attack(const ExperimentSpec& spec);
AttackReport gram_attack(const ExperimentSpec& spec);
AttackReport run_distinguishing_experiment(const ExperimentSpec& spec);

/// 1 - Tr(rho^2) of eta |psi><psi| + (1 - eta)|0><0| for a binary-phase psi on n qubits.
double abort_kappa(double eta, int n);

}  // namespace prslab::attacks
