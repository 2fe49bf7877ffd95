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

#include <immintrin.h>

// Complex values are interleaved (re, im); one __m256d holds two of them.

namespace skewbound::kernels::avx2 {

namespace {

inline double hsum(__m256d v)
{
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// (even lanes) - (odd lanes)
inline double hsub_pairs(__m256d v)
{
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_sub_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

void axpy(std::size_t n, cplx alpha, const cplx* x, cplx* y)
{
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    const __m256d are = _mm256_set1_pd(alpha.real());
    const __m256d aim = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        __m256d t = _mm256_mul_pd(aim, _mm256_permute_pd(xv, 0x5));
        __m256d prod = _mm256_fmaddsub_pd(are, xv, t);
        _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(_mm256_loadu_pd(yp + 2 * i), prod));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void gemm(std::size_t n, const cplx* a, const cplx* b, cplx* c)
{
    for (std::size_t i = 0; i < n * n; ++i) c[i] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cplx* crow = c + i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            if (aik == 0.0) continue;
            axpy(n, aik, b + k * n, crow);
        }
    }
}

cplx dotc(std::size_t n, const cplx* x, const cplx* y)
{
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    __m256d same = _mm256_setzero_pd();
    __m256d cross = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        same = _mm256_fmadd_pd(xv, yv, same);
        cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0x5), cross);
    }
    double re = hsum(same);
    double im = hsub_pairs(cross);
    for (; i < n; ++i) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

void gemv(std::size_t n, const cplx* a, const cplx* x, cplx* y)
{
    const double* xp = reinterpret_cast<const double*>(x);
    for (std::size_t r = 0; r < n; ++r) {
        const double* ap = reinterpret_cast<const double*>(a + r * n);
        __m256d same = _mm256_setzero_pd();
        __m256d cross = _mm256_setzero_pd();
        std::size_t i = 0;
        for (; i + 2 <= n; i += 2) {
            __m256d av = _mm256_loadu_pd(ap + 2 * i);
            __m256d xv = _mm256_loadu_pd(xp + 2 * i);
            same = _mm256_fmadd_pd(av, xv, same);
            cross = _mm256_fmadd_pd(av, _mm256_permute_pd(xv, 0x5), cross);
        }
        double re = hsub_pairs(same);
        double im = hsum(cross);
        for (; i < n; ++i) {
            const cplx ai = a[r * n + i];
            re += ai.real() * x[i].real() - ai.imag() * x[i].imag();
            im += ai.real() * x[i].imag() + ai.imag() * x[i].real();
        }
        y[r] = {re, im};
    }
}

}  // namespace skewbound::kernels::avx2
