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

namespace skewbound::kernels::scalar {

void gemm(std::size_t n, const cplx* a, const cplx* b, cplx* c)
{
    for (std::size_t i = 0; i < n * n; ++i) c[i] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cplx* crow = c + i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            if (aik == 0.0) continue;
            const cplx* brow = b + k * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

void gemv(std::size_t n, const cplx* a, const cplx* x, cplx* y)
{
    for (std::size_t i = 0; i < n; ++i) {
        double re = 0.0, im = 0.0;
        const cplx* row = a + i * n;
        for (std::size_t j = 0; j < n; ++j) {
            re += row[j].real() * x[j].real() - row[j].imag() * x[j].imag();
            im += row[j].real() * x[j].imag() + row[j].imag() * x[j].real();
        }
        y[i] = {re, im};
    }
}

cplx dotc(std::size_t n, const cplx* x, const cplx* y)
{
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

void axpy(std::size_t n, cplx alpha, const cplx* x, cplx* y)
{
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace skewbound::kernels::scalar
