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

#include "kernels_impl.hpp"

#include <bit>

namespace prslab::kernels::scalar {

cplx cdot(const cplx* a, const cplx* b, std::size_t n) noexcept {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

double sqdist(const cplx* a, const cplx* b, std::size_t n) noexcept {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dr = a[i].real() - b[i].real();
        const double di = a[i].imag() - b[i].imag();
        acc += dr * dr + di * di;
    }
    return acc;
}

void her_rank1(cplx* a, const cplx* x, double w, std::size_t n) noexcept {
    for (std::size_t col = 0; col < n; ++col) {
        const cplx s = w * std::conj(x[col]);
        cplx* column = a + col * n;
        for (std::size_t row = 0; row < n; ++row) {
            column[row] += x[row] * s;
        }
    }
}

std::uint64_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t words) noexcept {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < words; ++i) {
        total += static_cast<std::uint64_t>(std::popcount(a[i] ^ b[i]));
    }
    return total;
}

}  // namespace prslab::kernels::scalar
