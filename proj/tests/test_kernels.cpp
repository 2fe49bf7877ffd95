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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "skewbound/bounds.hpp"
#include "skewbound/kernels.hpp"

using namespace skewbound;
namespace k = skewbound::kernels;

namespace {

std::vector<cplx> random_block(std::size_t n, Rng& rng)
{
    std::vector<cplx> v(n);
    for (auto& x : v) x = rng.complex_normal();
    return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_CASE("variants agree with the scalar reference")
{
    if (!k::isa_available(k::Isa::Avx2)) {
        MESSAGE("avx2 unavailable; only the scalar path is exercised");
    }
    const auto& ref = k::table_for(k::Isa::Scalar);
    const auto& alt = k::table_for(k::Isa::Avx2);
    Rng rng(1);
    // Odd sizes hit the remainder loops.
    for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 9u, 16u, 25u, 33u}) {
        const auto a = random_block(n * n, rng), b = random_block(n * n, rng), x = random_block(n, rng);
        std::vector<cplx> c1(n * n), c2(n * n), y1(n), y2(n);
        ref.gemm(n, a.data(), b.data(), c1.data());
        alt.gemm(n, a.data(), b.data(), c2.data());
        CHECK(max_diff(c1, c2) < 1e-12 * static_cast<double>(n));
        ref.gemv(n, a.data(), x.data(), y1.data());
        alt.gemv(n, a.data(), x.data(), y2.data());
        CHECK(max_diff(y1, y2) < 1e-12 * static_cast<double>(n));
        CHECK(std::abs(ref.dotc(n * n, a.data(), b.data()) - alt.dotc(n * n, a.data(), b.data())) <
              1e-11 * static_cast<double>(n));
        std::vector<cplx> z1 = b, z2 = b;
        ref.axpy(n * n, {0.3, -1.2}, a.data(), z1.data());
        alt.axpy(n * n, {0.3, -1.2}, a.data(), z2.data());
        CHECK(max_diff(z1, z2) < 1e-13);
    }
}

TEST_CASE("scalar gemm matches a naive product")
{
    Rng rng(4);
    const std::size_t n = 6;
    const auto a = random_block(n * n, rng), b = random_block(n * n, rng);
    std::vector<cplx> c(n * n);
    k::scalar::gemm(n, a.data(), b.data(), c.data());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx acc = 0.0;
            for (std::size_t l = 0; l < n; ++l) acc += a[i * n + l] * b[l * n + j];
            CHECK(std::abs(acc - c[i * n + j]) < 1e-12);
        }
}

TEST_CASE("library results do not depend on the selected variant")
{
    OperatorSet ops = OperatorSet::spin(2);
    const auto rho = random_density(3, 3, 17);
    const auto before = k::active().isa;

    k::select(k::Isa::Scalar);
    const double s1 = sum_wyd_skew(ops, rho, 0.3);
    const auto b1 = bound_wy(ops, rho);
    k::select(k::Isa::Avx2);
    const double s2 = sum_wyd_skew(ops, rho, 0.3);
    const auto b2 = bound_wy(ops, rho);
    k::select(before);

    CHECK(std::abs(s1 - s2) < 1e-12);
    CHECK(std::abs(b1.epsilon1 - b2.epsilon1) < 1e-10);
    CHECK(std::abs(b1.bound - b2.bound) < 1e-10);
}

TEST_CASE("environment override forces the reference path")
{
    const char* env = std::getenv("SKEWBOUND_KERNELS");
    if (env != nullptr && std::string(env) == "scalar") CHECK(k::active().isa == k::Isa::Scalar);
    CHECK(std::string(k::isa_name(k::Isa::Scalar)) == "scalar");
    CHECK(std::string(k::isa_name(k::Isa::Avx2)) == "avx2");
}
