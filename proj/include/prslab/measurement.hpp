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
#include <vector>

#include "prslab/quantum.hpp"

namespace prslab::qc {

/// Acceptance probability of the two-copy SWAP test: (1 + Tr rho^2) / 2.
double swap_test_accept_prob(const DensityMatrix& rho);
/// Number of accepting runs among `shots` independent SWAP tests.
std::uint64_t swap_test_sample(const DensityMatrix& rho, std::uint64_t shots, Rng& rng);

/// Outcome probabilities diag(U rho U^dagger).
std::vector<double> outcome_probabilities(const DensityMatrix& rho, const Matrix& basis);

/// Multinomial histogram of `shots` measurements in the basis given by the rows
/// of U (outcome i has probability <i|U rho U^dagger|i>).
std::vector<std::uint64_t> measure_shots(const DensityMatrix& rho, const Matrix& basis,
                                         std::uint64_t shots, Rng& rng);

/// Multinomial draw via sequential conditional binomials. NumericError if the
/// probabilities do not sum to 1 within 1e-6.
std::vector<std::uint64_t> sample_multinomial(const std::vector<double>& probs,
                                              std::uint64_t shots, Rng& rng);

}  // namespace prslab::qc
