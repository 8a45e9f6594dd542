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

// AVX2/FMA variants. Compiled with per-function target attributes so that no
// inline code from shared headers is emitted with AVX2 encodings.

#include "kernels_impl.hpp"

#if defined(PRSLAB_HAVE_AVX2)

#include <immintrin.h>

#include <bit>

#define PRSLAB_AVX2 __attribute__((target("avx2,fma")))

namespace prslab::kernels::avx2 {
namespace {

PRSLAB_AVX2 inline double hsum(__m256d v) noexcept {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

// Two complex numbers per register, interleaved [re0, im0, re1, im1].
PRSLAB_AVX2 cplx cdot(const cplx* a, const cplx* b, std::size_t n) noexcept {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    __m256d prod = _mm256_setzero_pd();
    __m256d cross = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        prod = _mm256_fmadd_pd(va, vb, prod);
        cross = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), cross);
    }
    // prod lanes: ar*br, ai*bi; cross lanes: ar*bi, ai*br
    const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
    double re = hsum(prod);
    double im = hsum(_mm256_mul_pd(cross, sign));
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

PRSLAB_AVX2 double sqdist(const cplx* a, const cplx* b, std::size_t n) noexcept {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    const std::size_t len = 2 * n;
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i));
        const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(pa + i + 4), _mm256_loadu_pd(pb + i + 4));
        acc0 = _mm256_fmadd_pd(d0, d0, acc0);
        acc1 = _mm256_fmadd_pd(d1, d1, acc1);
    }
    for (; i + 4 <= len; i += 4) {
        const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i));
        acc0 = _mm256_fmadd_pd(d0, d0, acc0);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < len; ++i) {
        const double d = pa[i] - pb[i];
        acc += d * d;
    }
    return acc;
}

PRSLAB_AVX2 void her_rank1(cplx* a, const cplx* x, double w, std::size_t n) noexcept {
    const double* px = reinterpret_cast<const double*>(x);
    for (std::size_t col = 0; col < n; ++col) {
        const cplx s = w * std::conj(x[col]);
        const __m256d sr = _mm256_set1_pd(s.real());
        const __m256d si = _mm256_set1_pd(s.imag());
        double* column = reinterpret_cast<double*>(a + col * n);
        std::size_t row = 0;
        for (; row + 2 <= n; row += 2) {
            const __m256d vx = _mm256_loadu_pd(px + 2 * row);
            const __m256d swapped = _mm256_mul_pd(_mm256_permute_pd(vx, 0b0101), si);
            // even lanes: xr*sr - xi*si, odd lanes: xi*sr + xr*si
            const __m256d prod = _mm256_fmaddsub_pd(vx, sr, swapped);
            _mm256_storeu_pd(column + 2 * row, _mm256_add_pd(_mm256_loadu_pd(column + 2 * row), prod));
        }
        for (; row < n; ++row) {
            a[col * n + row] += x[row] * s;
        }
    }
}

// Nibble-table popcount (Mula et al.), reduced per 64-bit lane with SAD.
PRSLAB_AVX2 std::uint64_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b,
                                       std::size_t words) noexcept {
    const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                           0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        const __m256i v = _mm256_xor_si256(va, vb);
        const __m256i lo = _mm256_and_si256(v, low_mask);
        const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
        const __m256i counts =
            _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(counts, _mm256_setzero_si256()));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < words; ++i) {
        total += static_cast<std::uint64_t>(std::popcount(a[i] ^ b[i]));
    }
    return total;
}

}  // namespace prslab::kernels::avx2

#endif  // PRSLAB_HAVE_AVX2
