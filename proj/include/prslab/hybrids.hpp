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

#include <nlohmann/json.hpp>
#include <optional>
#include <vector>

#include "prslab/generators.hpp"
#include "prslab/quantum.hpp"

namespace prslab::hybrids {

using qc::Matrix;

/// Frequency histogram of a tuple over [N]; entries are 0-based.
std::vector<int> type_of(const std::vector<int>& v, std::size_t N);

/// Uniform superposition over {v in [N]^t : type(v) = T}.
qc::Vector type_state(const std::vector<int>& T, std::size_t N, int t);
/// Uniform superposition over {v in [N]^t : type(v) mod 2 = T}, T in {0,1}^N.
qc::Vector bintype_state(const std::vector<int>& T, std::size_t N, int t);

/// 1 - N! / ((N - t)! N^t): chance that t uniform draws from [N] collide.
double collision_probability(std::size_t N, int t);

struct HybridSource {
    /// Generator whose keys are enumerated for Hybrid 1; requires 2^n = N.
    GeneratorParams params;
    /// Worker threads for key enumeration (0 = hardware).
    unsigned workers = 1;
};

/// Density matrix of Hybrid `id` on (C^N)^{(x) t}.
///   1: E_k |psi_k><psi_k|^{(x) t} by enumerating every key (lambda <= 12)
///   2: N^{-t} sum over type(x) = type(y) mod 2 of |x><y|
///   3: E_w of |bintype_{type(w) mod 2}><.|
///   4: E over weight-t binary T of |type_T><type_T|; DomainError when N < t
///   5: Pi_sym / C(N + t - 1, t)
Matrix hybrid_density(int id, std::size_t N, int t, const HybridSource* source = nullptr,
                      std::size_t cap = qc::kDefaultDimensionCap);

/// Hybrid 2 by averaging |psi_alpha><psi_alpha|^{(x) t} over all 2^N sign vectors.
Matrix hybrid2_by_signs(std::size_t N, int t, std::size_t cap = qc::kDefaultDimensionCap);

/// Exact trace distance. For (3, 4) with N < t there are no collision-free
/// tuples, Hybrid 3 lies entirely in the collision block and 1 is returned.
double hybrid_td(int i, int j, std::size_t N, int t, const HybridSource* source = nullptr,
                 std::size_t cap = qc::kDefaultDimensionCap);

struct HybridReport {
    std::size_t N = 0;
    int t = 0;
    double max_abs_23 = 0.0;
    double td_23 = 0.0;
    double td_34 = 0.0;
    double td_45 = 0.0;
    double td_25 = 0.0;
    std::optional<double> td_12;
    double collision = 0.0;
    double envelope = 0.0;  // t^2 / N
    bool hybrid4_defined = true;

    bool pass_23() const { return max_abs_23 <= 1e-10; }
    bool pass_34() const { return std::abs(td_34 - collision) <= 1e-9 && td_34 <= envelope + 1e-12; }
    bool pass_45() const { return !hybrid4_defined || td_45 <= envelope + 1e-12; }
    bool pass_25() const;
    nlohmann::json to_json() const;
};

HybridReport hybrid_report(std::size_t N, int t, const HybridSource* source = nullptr,
                           std::size_t cap = qc::kDefaultDimensionCap);

}  // namespace prslab::hybrids
