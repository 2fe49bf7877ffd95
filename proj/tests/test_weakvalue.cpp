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

#include <cmath>

#include "golden.hpp"
#include "skewbound/operators.hpp"
#include "skewbound/sweeps.hpp"
#include "skewbound/weakvalue.hpp"

using namespace skewbound;

TEST_CASE("single weak values")
{
    const double r = std::sqrt(0.5);
    const ComplexVector up{1.0, 0.0}, down{0.0, 1.0}, plus{r, r};
    CHECK(std::abs(weak_value(pauli_z(), up, up) - 1.0) < 1e-14);
    CHECK(std::abs(weak_value(pauli_z(), plus, up) - 1.0) < 1e-14);
    CHECK_THROWS_AS(weak_value(pauli_x(), up, down), Error);
}

TEST_CASE("reconstruction")
{
    const auto rho = DensityOperator::from_matrix(ComplexMatrix::diagonal(std::vector<double>{0.3, 0.7}));
    const auto rec = reconstruct_skew(pauli_x(), rho, 0.5, computational_basis(2));
    CHECK(rec.value == doctest::Approx(golden::kWySigmaX).epsilon(1e-10));
    CHECK(rec.imag_residual < 1e-10);
    CHECK(std::abs(reconstruct_skew(pauli_z(), rho, 0.5, computational_basis(2)).value) < 1e-14);

    Rng rng(12);
    const auto full = random_density(3, 3, rng);
    const ComplexMatrix a = random_hermitian(3, rng);
    const auto basis = columns_of(random_unitary(3, rng));
    const auto r3 = reconstruct_skew(a, full, 0.3, basis);
    CHECK(std::abs(r3.value - wyd_skew(a, full, 0.3)) < 1e-9);
    // Change of postselection basis.
    const auto r3b = reconstruct_skew(a, full, 0.3, columns_of(random_unitary(3, rng)));
    CHECK(std::abs(r3.value - r3b.value) < 1e-9);

    std::vector<ComplexVector> bad{ComplexVector{1.0, 0.0}, ComplexVector{1.0, 0.0}};
    CHECK_THROWS_AS(reconstruct_skew(pauli_x(), rho, 0.5, bad), Error);
}

TEST_CASE("rank-deficient states use the pre-cancellation form")
{
    Rng rng(3);
    const auto rho = random_density(3, 2, rng);
    const ComplexMatrix a = random_hermitian(3, rng);
    const auto pure = DensityOperator::pure(ComplexVector{1.0, 0.0});
    const auto rec = reconstruct_skew(pauli_x(), pure, 0.5, computational_basis(2));
    CHECK(rec.table.undefined_count() > 0);
    CHECK(rec.value == doctest::Approx(1.0));
    CHECK_THROWS_AS(reconstruct_skew(pauli_x(), pure, 0.5, computational_basis(2), true), Error);
    const auto r = reconstruct_skew(a, rho, 0.4, columns_of(rho.eigenvectors()));
    CHECK(std::abs(r.value - wyd_skew(a, rho, 0.4)) < 1e-9);
}

TEST_CASE("subsystem identities")
{
    const auto rho = DensityOperator::from_matrix(ComplexMatrix::diagonal(std::vector<double>{0.3, 0.7}));
    const auto rep = subsystem_weak_values(pauli_x(), rho, 0.5, computational_basis(2));
    CHECK(rep.collapse_residual < 1e-10);
    CHECK(rep.conjugate_residual < 1e-10);
    CHECK(rep.checked > 0);

    // Pure preselection: the collapsed vector is the same state for every postselection.
    const ComplexVector psi = normalized(ComplexVector{0.6, cplx(0.0, 0.8)});
    const ComplexVector product = kron(psi, conj(psi));
    for (const auto& v : computational_basis(2)) {
        const ComplexVector c = normalized(collapse_second(product, v));
        CHECK(std::abs(std::abs(inner(c, psi)) - 1.0) < 1e-12);
    }
}

TEST_CASE("weak value sweep")
{
    const auto res = sweep_weakvalue(100, 9);
    for (const auto& c : res.checks) {
        INFO(c.name);
        CHECK(c.max_residual < 1e-9);
    }
}
