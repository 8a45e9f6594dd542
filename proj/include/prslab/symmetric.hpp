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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <vector>

#include "prslab/quantum.hpp"

namespace prslab::qc {

using BigInt = boost::multiprecision::cpp_int;

/// Dimension of the symmetric subspace of (C^N)^{(x) t}: C(N + t - 1, t).
BigInt sym_dim(std::uint64_t local_dim, std::uint64_t copies);

/// N^t, or ResourceError if it exceeds `cap`.
std::size_t dense_dimension(std::size_t local_dim, int copies,
                            std::size_t cap = kDefaultDimensionCap);

/// Mixed-radix digits of a basis index of (C^N)^{(x) t}; digit 0 is the first factor.
std::vector<int> tuple_digits(std::size_t index, std::size_t local_dim, int copies);
std::size_t tuple_index(std::span<const int> digits, std::size_t local_dim);

/// Operator sending |x_1..x_t> to |y> with y_{sigma(j)} = x_j.
/// `sigma` is a permutation of 0..t-1.
Matrix permutation_operator(std::size_t local_dim, std::span<const int> sigma,
                            std::size_t cap = kDefaultDimensionCap);

/// (1/t!) sum_sigma P(sigma).
Matrix sym_projector(std::size_t local_dim, int copies, std::size_t cap = kDefaultDimensionCap);

}  // namespace prslab::qc
