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

#include <atomic>
#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"

namespace prslab::kernels {
namespace {

constexpr KernelTable kScalar{Isa::Scalar, scalar::cdot, scalar::sqdist, scalar::her_rank1,
                              scalar::xor_popcount};

#if defined(PRSLAB_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::Avx2, avx2::cdot, avx2::sqdist, avx2::her_rank1,
                            avx2::xor_popcount};
#endif

const KernelTable* detect() noexcept {
    const char* env = std::getenv("PRS_LAB_ISA");
    if (env != nullptr && std::string(env) == "scalar") {
        return &kScalar;
    }
    if (const KernelTable* t = avx2_table(); t != nullptr && cpu_has_avx2()) {
        return t;
    }
    return &kScalar;
}

std::atomic<const KernelTable*>& current() noexcept {
    static std::atomic<const KernelTable*> table{detect()};
    return table;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar:
            return "scalar";
        case Isa::Avx2:
            return "avx2";
    }
    return "unknown";
}

const KernelTable& scalar_table() noexcept { return kScalar; }

const KernelTable* avx2_table() noexcept {
#if defined(PRSLAB_HAVE_AVX2)
    return &kAvx2;
#else
    return nullptr;
#endif
}

bool cpu_has_avx2() noexcept {
#if defined(PRSLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable& active() noexcept { return *current().load(std::memory_order_relaxed); }

bool select(Isa isa) noexcept {
    if (isa == Isa::Scalar) {
        current().store(&kScalar);
        return true;
    }
    const KernelTable* t = avx2_table();
    if (t == nullptr || !cpu_has_avx2()) {
        return false;
    }
    current().store(t);
    return true;
}

}  // namespace prslab::kernels
