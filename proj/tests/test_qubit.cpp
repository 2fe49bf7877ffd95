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
#include "skewbound/qubit.hpp"
#include "skewbound/sweeps.hpp"

using namespace skewbound;

namespace {

DensityOperator diag37()
{
    return DensityOperator::from_matrix(ComplexMatrix::diagonal(std::vector<double>{0.3, 0.7}));
}

const Direction kX{1, 0, 0}, kY{0, 1, 0}, kZ{0, 0, 1};

}  // namespace

TEST_CASE("Bloch states")
{
    const BlochState b{{0.0, 0.0, -0.4}};
    CHECK(max_abs_diff(b.density().matrix(), diag37().matrix()) < 1e-14);
    const auto back = BlochState::from_density(diag37());
    CHECK(back.r[2] == doctest::Approx(-0.4));
    CHECK_THROWS_AS((BlochState{{1.0, 0.5, 0.0}}.density()), Error);
}

TEST_CASE("closed form")
{
    CHECK(qubit_gen_skew_closed(pauli_x(), diag37(), MeanOrder::zero()) ==
          doctest::Approx(golden::kWySigmaX).epsilon(1e-12));
    CHECK(qubit_gen_skew_closed(pauli_x(), diag37(), MeanOrder::minus_infinity()) == doctest::Approx(0.4));
    const auto pure = DensityOperator::pure(ComplexVector{0.6, 0.8});
    CHECK(qubit_gen_skew_closed(pauli_x(), pure, MeanOrder::finite(-2.0)) ==
          doctest::Approx(variance(pauli_x(), pure)));
}

TEST_CASE("brackets and factors")
{
    CHECK(mean_bracket(DensityOperator::pure(ComplexVector{1.0, 0.0}), MeanOrder::zero()) == 1.0);
    CHECK(std::abs(mean_bracket(DensityOperator::maximally_mixed(2), MeanOrder::finite(-1.0))) < 1e-14);
    CHECK_THROWS_AS(fisher_wy_ratio(DensityOperator::maximally_mixed(2)), Error);
    CHECK_THROWS_AS(gamma_factor(DensityOperator::maximally_mixed(2), MeanOrder::zero()), Error);
    CHECK(fisher_wy_ratio(diag37()) ==
          doctest::Approx(4.0 * golden::kFisherQuarterSigmaX / golden::kWySigmaX).epsilon(1e-10));
}

TEST_CASE("order bounds for four qubit operators")
{
    const std::vector<MeanOrder> orders{MeanOrder::zero(), MeanOrder::finite(-1.0), MeanOrder::finite(-2.0),
                                        MeanOrder::minus_infinity()};
    for (std::size_t i = 0; i < orders.size(); ++i) {
        const double b = prop3_skew_bound({orders[i]}, diag37(), golden::kQubitSymmetricL);
        CHECK(b == doctest::Approx(golden::kQubitOrderBounds[i]).epsilon(1e-9));
        CHECK(std::abs(b - golden::kQubitRoundedOrderBounds[i]) < 1e-3);
    }
    const std::vector<OrderedOperator> zs{{pauli_z(), MeanOrder::zero()}, {pauli_z(), MeanOrder::finite(-1.0)}};
    CHECK(prop3_lhs(zs, diag37()) == doctest::Approx(0.0));
}

TEST_CASE("mixed skew and variance bound")
{
    const auto r = prop4_check({{pauli_x(), MeanOrder::zero()}}, {pauli_z()}, diag37(), 41);
    CHECK(r.lhs >= r.bound - 1e-10);
    CHECK(r.bound > 0.0);
}

TEST_CASE("two-direction inequality")
{
    const auto par = observation2_check(kX, kX, diag37(), MeanOrder::zero());
    CHECK(par.bound == doctest::Approx(0.0));
    const auto perp = observation2_check(kX, kY, DensityOperator::maximally_mixed(2), MeanOrder::zero());
    CHECK(perp.bound == doctest::Approx(0.25));
    CHECK(perp.lhs >= perp.bound - 1e-12);
}

TEST_CASE("qubit triple equalities")
{
    CHECK_THROWS_AS(require_orthonormal(kX, kX, kZ), Error);
    const auto r = prop5_equality(kX, kY, kZ, diag37(), {MeanOrder::zero(), MeanOrder::finite(-1.0),
                                                         MeanOrder::minus_infinity()});
    CHECK(r.rhs == 0.5);
    CHECK(std::abs(r.residual) < 1e-10);
    const auto f = prop5_equality(kX, kY, kZ, diag37(), {MeanOrder::finite(-1.0), MeanOrder::finite(-1.0),
                                                         MeanOrder::finite(-1.0)});
    CHECK(std::abs(f.residual) < 1e-10);

    const auto six = prop6_equalities(kX, kY, kZ, diag37(), {MeanOrder::zero(), MeanOrder::zero()});
    CHECK(std::abs(six.one_skew.residual) < 1e-10);
    CHECK(std::abs(six.two_skew.residual) < 1e-10);
    CHECK(std::abs(six.variance_identity_residual) < 1e-10);
    CHECK(std::abs(six.purity_residual) < 1e-10);
    CHECK(std::abs(fisher_variance_residual(kX, diag37())) < 1e-10);
}

TEST_CASE("qubit sweep")
{
    const auto res = sweep_qubit(300, 3);
    for (const auto& c : res.checks) {
        INFO(c.name);
        CHECK(c.max_residual < 1e-9);
    }
}
