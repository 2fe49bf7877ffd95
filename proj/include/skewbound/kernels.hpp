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

#pragma once

#include <complex>
#include <cstddef>

namespace skewbound::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

// C = A * B for square row-major n x n matrices. C must not alias A or B.
using GemmFn = void (*)(std::size_t n, const cplx* a, const cplx* b, cplx* c);
// y = A * x, row-major n x n.
using GemvFn = void (*)(std::size_t n, const cplx* a, const cplx* x, cplx* y);
// sum conj(x_i) * y_i
using DotcFn = cplx (*)(std::size_t n, const cplx* x, const cplx* y);
// y += alpha * x
using AxpyFn = void (*)(std::size_t n, cplx alpha, const cplx* x, cplx* y);

struct KernelTable {
    Isa isa;
    GemmFn gemm;
    GemvFn gemv;
    DotcFn dotc;
    AxpyFn axpy;
};

namespace scalar {
void gemm(std::size_t n, const cplx* a, const cplx* b, cplx* c);
void gemv(std::size_t n, const cplx* a, const cplx* x, cplx* y);
cplx dotc(std::size_t n, const cplx* x, const cplx* y);
void axpy(std::size_t n, cplx alpha, const cplx* x, cplx* y);
}  // namespace scalar

#if defined(SKEWBOUND_HAVE_AVX2)
namespace avx2 {
void gemm(std::size_t n, const cplx* a, const cplx* b, cplx* c);
void gemv(std::size_t n, const cplx* a, const cplx* x, cplx* y);
cplx dotc(std::size_t n, const cplx* x, const cplx* y);
void axpy(std::size_t n, cplx alpha, const cplx* x, cplx* y);
}  // namespace avx2
#endif

bool isa_available(Isa isa) noexcept;
const char* isa_name(Isa isa) noexcept;

// Table for a specific ISA; falls back to scalar when unavailable.
const KernelTable& table_for(Isa isa) noexcept;

// Active table. Chosen once from CPU features; SKEWBOUND_KERNELS=scalar forces
// the reference path.
const KernelTable& active() noexcept;

// Overrides the active table. Not thread-safe against concurrent kernel use.
void select(Isa isa) noexcept;

}  // namespace skewbound::kernels
