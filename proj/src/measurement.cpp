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

#include "prslab/measurement.hpp"

#include <cmath>
#include <string>

#include "prslab/errors.hpp"

namespace prslab::qc {

double swap_test_accept_prob(const DensityMatrix& rho) { return 0.5 * (1.0 + rho.purity()); }

std::uint64_t swap_test_sample(const DensityMatrix& rho, std::uint64_t shots, Rng& rng) {
    return rng.binomial(shots, swap_test_accept_prob(rho));
}

std::vector<double> outcome_probabilities(const DensityMatrix& rho, const Matrix& basis) {
    if (basis.rows() != basis.cols() || basis.rows() != rho.matrix().rows()) {
        throw ShapeError("measurement basis does not match the state dimension");
    }
    Matrix rotated = basis * rho.matrix() * basis.adjoint();
    std::vector<double> probs(static_cast<std::size_t>(rotated.rows()));
    for (Eigen::Index i = 0; i < rotated.rows(); ++i) {
        probs[static_cast<std::size_t>(i)] = rotated(i, i).real();
    }
    return probs;
}

std::vector<std::uint64_t> sample_multinomial(const std::vector<double>& probs, std::uint64_t shots,
                                              Rng& rng) {
    double total = 0.0;
    for (double p : probs) {
        if (p < -1e-6 || !std::isfinite(p)) {
            throw NumericError("outcome probability " + std::to_string(p) + " is invalid");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-6) {
        throw NumericError("outcome probabilities sum to " + std::to_string(total));
    }
    std::vector<std::uint64_t> counts(probs.size(), 0);
    std::uint64_t left = shots;
    double mass_left = 1.0;
    for (std::size_t i = 0; i < probs.size() && left > 0; ++i) {
        if (i + 1 == probs.size()) {
            counts[i] = left;
            break;
        }
        double p = std::max(probs[i], 0.0);
        double q = mass_left > 0.0 ? std::min(1.0, p / mass_left) : 1.0;
        counts[i] = rng.binomial(left, q);
        left -= counts[i];
        mass_left -= p;
    }
    return counts;
}

std::vector<std::uint64_t> measure_shots(const DensityMatrix& rho, const Matrix& basis,
                                         std::uint64_t shots, Rng& rng) {
    return sample_multinomial(outcome_probabilities(rho, basis), shots, rng);
}

}  // namespace prslab::qc
