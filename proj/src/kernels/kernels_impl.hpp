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

#include "prslab/kernels.hpp"

namespace prslab::kernels::scalar {
cplx cdot(const cplx* a, const cplx* b, std::size_t n) noexcept;
double sqdist(const cplx* a, const cplx* b, std::size_t n) noexcept;
void her_rank1(cplx* a, const cplx* x, double w, std::size_t n) noexcept;
std::uint64_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t words) noexcept;
}  // namespace prslab::kernels::scalar

#if defined(PRSLAB_HAVE_AVX2)
namespace prslab::kernels::avx2 {
cplx cdot(const cplx* a, const cplx* b, std::size_t n) noexcept;
double sqdist(const cplx* a, const cplx* b, std::size_t n) noexcept;
void her_rank1(cplx* a, const cplx* x, double w, std::size_t n) noexcept;
std::uint64_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t words) noexcept;
}  // namespace prslab::kernels::avx2
#endif
