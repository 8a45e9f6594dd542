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

#include "prslab/symmetric.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "prslab/errors.hpp"

namespace prslab::qc {

BigInt sym_dim(std::uint64_t local_dim, std::uint64_t copies) {
    if (local_dim < 1 || copies < 1) {
        throw DomainError("sym_dim needs N >= 1 and t >= 1");
    }
    // C(N + t - 1, t) built incrementally; each partial product is itself a binomial.
    BigInt acc = 1;
    for (std::uint64_t i = 1; i <= copies; ++i) {
        acc *= BigInt(local_dim - 1 + i);
        acc /= BigInt(i);
    }
    return acc;
}

std::size_t dense_dimension(std::size_t local_dim, int copies, std::size_t cap) {
    if (local_dim < 1 || copies < 1) {
        throw DomainError("dense_dimension needs N >= 1 and t >= 1");
    }
    std::size_t dim = 1;
    for (int c = 0; c < copies; ++c) {
        if (dim > cap / local_dim) {
            throw ResourceError("dimension " + std::to_string(local_dim) + "^" + std::to_string(copies) +
                                " exceeds cap " + std::to_string(cap));
        }
        dim *= local_dim;
    }
    return dim;
}

std::vector<int> tuple_digits(std::size_t index, std::size_t local_dim, int copies) {
    std::vector<int> digits(static_cast<std::size_t>(copies));
    for (int i = copies - 1; i >= 0; --i) {
        digits[static_cast<std::size_t>(i)] = static_cast<int>(index % local_dim);
        index /= local_dim;
    }
    return digits;
}

std::size_t tuple_index(std::span<const int> digits, std::size_t local_dim) {
    std::size_t idx = 0;
    for (int d : digits) {
        idx = idx * local_dim + static_cast<std::size_t>(d);
    }
    return idx;
}

Matrix permutation_operator(std::size_t local_dim, std::span<const int> sigma, std::size_t cap) {
    int t = static_cast<int>(sigma.size());
    std::vector<int> check(sigma.begin(), sigma.end());
    std::sort(check.begin(), check.end());
    for (int i = 0; i < t; ++i) {
        if (check[static_cast<std::size_t>(i)] != i) {
            throw DomainError("permutation_operator: sigma is not a permutation of 0..t-1");
        }
    }
    std::size_t dim = dense_dimension(local_dim, t, cap);
    Matrix p = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    std::vector<int> y(static_cast<std::size_t>(t));
    for (std::size_t col = 0; col < dim; ++col) {
        auto x = tuple_digits(col, local_dim, t);
        for (int j = 0; j < t; ++j) {
            y[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])] = x[static_cast<std::size_t>(j)];
        }
        p(static_cast<Eigen::Index>(tuple_index(y, local_dim)), static_cast<Eigen::Index>(col)) = 1.0;
    }
    return p;
}

Matrix sym_projector(std::size_t local_dim, int copies, std::size_t cap) {
    std::size_t dim = dense_dimension(local_dim, copies, cap);
    Matrix pi = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    std::vector<int> sigma(static_cast<std::size_t>(copies));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<int> y(static_cast<std::size_t>(copies));
    double count = 0;
    do {
        for (std::size_t col = 0; col < dim; ++col) {
            auto x = tuple_digits(col, local_dim, copies);
            for (std::size_t j = 0; j < sigma.size(); ++j) {
                y[static_cast<std::size_t>(sigma[j])] = x[j];
            }
            pi(static_cast<Eigen::Index>(tuple_index(y, local_dim)), static_cast<Eigen::Index>(col)) += 1.0;
        }
        count += 1;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return pi / count;
}

}  // namespace prslab::qc
