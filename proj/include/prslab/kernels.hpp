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

// Data-parallel inner loops shared by every module. Each kernel has a scalar
// reference implementation and, where the build and CPU allow it, an AVX2
// variant. The active variant is chosen once at startup from CPUID and can be
// pinned with the PRS_LAB_ISA environment variable ("scalar" or "avx2").

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace prslab::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// Sum_i conj(a_i) * b_i.
using CdotFn = cplx (*)(const cplx* a, const cplx* b, std::size_t n) noexcept;
/// Sum_i |a_i - b_i|^2.
using SqdistFn = double (*)(const cplx* a, const cplx* b, std::size_t n) noexcept;
/// Column-major n x n: A += w * x x^dagger.
using HerRank1Fn = void (*)(cplx* a, const cplx* x, double w, std::size_t n) noexcept;
/// Sum_i popcount(a_i xor b_i).
using XorPopcountFn = std::uint64_t (*)(const std::uint64_t* a, const std::uint64_t* b,
                                        std::size_t words) noexcept;

struct KernelTable {
    Isa isa;
    CdotFn cdot;
    SqdistFn sqdist;
    HerRank1Fn her_rank1;
    XorPopcountFn xor_popcount;
};

const KernelTable& scalar_table() noexcept;
/// nullptr when the AVX2 variants were not compiled in.
const KernelTable* avx2_table() noexcept;
bool cpu_has_avx2() noexcept;

/// Table selected at first use; honours PRS_LAB_ISA.
const KernelTable& active() noexcept;
/// Override the selection (tests). Returns false if `isa` is unavailable.
bool select(Isa isa) noexcept;

inline cplx cdot(std::span<const cplx> a, std::span<const cplx> b) noexcept {
    return active().cdot(a.data(), b.data(), a.size());
}
inline double sqdist(std::span<const cplx> a, std::span<const cplx> b) noexcept {
    return active().sqdist(a.data(), b.data(), a.size());
}
inline void her_rank1(std::span<cplx> a, std::span<const cplx> x, double w) noexcept {
    active().her_rank1(a.data(), x.data(), w, x.size());
}
inline std::uint64_t xor_popcount(std::span<const std::uint64_t> a,
                                  std::span<const std::uint64_t> b) noexcept {
    return active().xor_popcount(a.data(), b.data(), a.size());
}

}  // namespace prslab::kernels
