// Copyright 2026 The skewbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skewbound/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace skewbound::kernels {

namespace {

const KernelTable kScalar{Isa::Scalar, scalar::gemm, scalar::gemv, scalar::dotc, scalar::axpy};

#if defined(SKEWBOUND_HAVE_AVX2)
const KernelTable kAvx2{Isa::Avx2, avx2::gemm, avx2::gemv, avx2::dotc, avx2::axpy};
#endif

const KernelTable* detect() noexcept
{
    const char* env = std::getenv("SKEWBOUND_KERNELS");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return &kScalar;
    if (isa_available(Isa::Avx2)) return &table_for(Isa::Avx2);
    return &kScalar;
}

std::atomic<const KernelTable*>& slot() noexcept
{
    static std::atomic<const KernelTable*> current{detect()};
    return current;
}

}  // namespace

bool isa_available(Isa isa) noexcept
{
    switch (isa) {
    case Isa::Scalar:
        return true;
    case Isa::Avx2:
#if defined(SKEWBOUND_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    }
    return false;
}

const char* isa_name(Isa isa) noexcept
{
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

const KernelTable& table_for(Isa isa) noexcept
{
#if defined(SKEWBOUND_HAVE_AVX2)
    if (isa == Isa::Avx2 && isa_available(Isa::Avx2)) return kAvx2;
#else
    (void)isa;
#endif
    return kScalar;
}

const KernelTable& active() noexcept
{
    return *slot().load(std::memory_order_acquire);
}

void select(Isa isa) noexcept
{
    slot().store(&table_for(isa), std::memory_order_release);
}

}  // namespace skewbound::kernels
