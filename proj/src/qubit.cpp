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

#include "skewbound/qubit.hpp"

#include <algorithm>
#include <cmath>

namespace skewbound {

namespace {

void require_qubit(const DensityOperator& rho)
{
    if (rho.dim() != 2) fail(ErrorCode::DimensionMismatch, "qubit routine needs a 2-dimensional state");
}

double dot(const Direction& a, const Direction& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double bracket_checked(const DensityOperator& rho, const MeanOrder& order, const Tolerances& tol)
{
    const double b = mean_bracket(rho, order);
    if (b < tol.residual) {
        fail(ErrorCode::DegenerateDenominator, "1 - 2 m_nu vanishes for order " + order.label() + " (rho = I/2)");
    }
    return b;
}

double variance_in_lower_eigenvector(const ComplexMatrix& sigma, const DensityOperator& rho, const Tolerances& tol)
{
    const ComplexVector v = rho.eigenvector(0);
    return variance(sigma, DensityOperator::pure(v), tol);
}

double product_l1l2(const DensityOperator& rho)
{
    const auto& l = rho.eigenvalues();
    return l[0] * l[1];
}

EqualityReport finish(double lhs, double rhs)
{
    EqualityReport r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual = lhs - rhs;
    return r;
}

}  // namespace

DensityOperator BlochState::density(const Tolerances& tol) const
{
    const double len = std::sqrt(dot(r, r));
    if (len > 1.0 + tol.psd) fail(ErrorCode::InvalidState, "Bloch vector longer than 1");
    ComplexMatrix m = ComplexMatrix::identity(2);
    m += r[0] * pauli_x();
    m += r[1] * pauli_y();
    m += r[2] * pauli_z();
    m *= 0.5;
    return DensityOperator::from_matrix(std::move(m), tol);
}

BlochState BlochState::from_density(const DensityOperator& rho)
{
    require_qubit(rho);
    return {{rho.expectation(pauli_x()).real(), rho.expectation(pauli_y()).real(), rho.expectation(pauli_z()).real()}};
}

double mean_bracket(const DensityOperator& rho, const MeanOrder& order)
{
    require_qubit(rho);
    const auto& l = rho.eigenvalues();
    return 1.0 - 2.0 * support_mean(l[0], l[1], order);
}

double qubit_gen_skew_closed(const ComplexMatrix& sigma, const DensityOperator& rho, const MeanOrder& order,
                             const Tolerances& tol)
{
    require_qubit(rho);
    if (sigma.dim() != 2) fail(ErrorCode::DimensionMismatch, "qubit closed form needs a 2x2 operator");
    return mean_bracket(rho, order) * variance_in_lower_eigenvector(sigma, rho, tol);
}

double fisher_wy_ratio(const DensityOperator& rho, const Tolerances& tol)
{
    require_qubit(rho);
    const double p = product_l1l2(rho);
    const double den = 1.0 - 2.0 * std::sqrt(p);
    if (den < tol.residual) fail(ErrorCode::DegenerateDenominator, "Fisher/WY ratio undefined at rho = I/2");
    return 4.0 * (1.0 - 4.0 * p) / den;
}

double gamma_factor(const DensityOperator& rho, const MeanOrder& order, const Tolerances& tol)
{
    return (1.0 - 4.0 * product_l1l2(rho)) / bracket_checked(rho, order, tol);
}

double prop3_lhs(const std::vector<OrderedOperator>& ops, const DensityOperator& rho, const Tolerances& tol)
{
    require_qubit(rho);
    double t = 0.0;
    for (const auto& [sigma, order] : ops) t += gen_skew(sigma, rho, order, tol) / bracket_checked(rho, order, tol);
    return t;
}

double prop3_skew_bound(const std::vector<MeanOrder>& orders, const DensityOperator& rho, double pure_bound)
{
    if (orders.empty()) fail(ErrorCode::DomainError, "no mean orders given");
    double b = 1.0;
    for (const auto& o : orders) b = std::min(b, mean_bracket(rho, o));
    return std::max(0.0, b) * pure_bound;
}

Prop4Result prop4_check(const std::vector<OrderedOperator>& skew_ops, const std::vector<ComplexMatrix>& var_ops,
                        const DensityOperator& rho, std::size_t grid_points, unsigned jobs, const Tolerances& tol)
{
    require_qubit(rho);
    Prop4Result r;
    OperatorSet combined;
    for (const auto& [sigma, order] : skew_ops) combined.add(sigma);
    for (const auto& omega : var_ops) {
        combined.add(omega);
        r.lhs += variance(omega, rho, tol);
    }
    r.lhs += prop3_lhs(skew_ops, rho, tol);
    r.pure = pure_state_bound(combined, grid_points, jobs);
    r.bound = r.pure.best;
    return r;
}

Observation2Result observation2_check(const Direction& a, const Direction& b, const DensityOperator& rho,
                                      const MeanOrder& order, const Tolerances& tol)
{
    require_qubit(rho);
    (void)order;  // Gamma_nu I^nu is independent of nu for a qubit
    const ComplexMatrix sa = spin_half_along(a), sb = spin_half_along(b);
    Observation2Result r;
    r.lhs = (1.0 - 4.0 * product_l1l2(rho)) * variance_in_lower_eigenvector(sa, rho, tol) + variance(sb, rho, tol);
    r.bound = 0.25 * (1.0 - std::abs(dot(a, b)) / std::sqrt(dot(a, a) * dot(b, b)));
    return r;
}

void require_orthonormal(const Direction& n1, const Direction& n2, const Direction& n3)
{
    const std::array<const Direction*, 3> n{&n1, &n2, &n3};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (std::abs(dot(*n[i], *n[j]) - (i == j ? 1.0 : 0.0)) > 1e-10) {
                fail(ErrorCode::NotOrthonormal, "direction triple is not orthonormal");
            }
        }
    }
}

EqualityReport prop5_equality(const Direction& n1, const Direction& n2, const Direction& n3,
                              const DensityOperator& rho, const std::array<MeanOrder, 3>& orders,
                              const Tolerances& tol)
{
    require_qubit(rho);
    require_orthonormal(n1, n2, n3);
    const std::array<Direction, 3> n{n1, n2, n3};
    double lhs = 0.0;
    for (int k = 0; k < 3; ++k) {
        lhs += gen_skew(spin_half_along(n[k]), rho, orders[k], tol) / bracket_checked(rho, orders[k], tol);
    }
    return finish(lhs, 0.5);
}

Prop6Report prop6_equalities(const Direction& n1, const Direction& n2, const Direction& n3,
                             const DensityOperator& rho, const std::array<MeanOrder, 2>& orders,
                             const Tolerances& tol)
{
    require_qubit(rho);
    require_orthonormal(n1, n2, n3);
    const ComplexMatrix s1 = spin_half_along(n1), s2 = spin_half_along(n2), s3 = spin_half_along(n3);
    const double g1 = gamma_factor(rho, orders[0], tol) * gen_skew(s1, rho, orders[0], tol);
    const double g2 = gamma_factor(rho, orders[1], tol) * gen_skew(s2, rho, orders[1], tol);
    const double v2 = variance(s2, rho, tol), v3 = variance(s3, rho, tol);
    const double purity = rho.purity();

    Prop6Report r;
    r.one_skew = finish(g1 + v2 + v3, 0.5);
    r.two_skew = finish(g1 + g2 + v3, 0.5 * purity);

    const double mixed = 0.5 * (1.0 - purity);
    r.variance_identity_residual = std::max(std::abs(variance(s1, rho, tol) - g1 - mixed), std::abs(v2 - g2 - mixed));

    const BlochState b = BlochState::from_density(rho);
    const double proj = dot(n1, b.r) * dot(n1, b.r) + dot(n2, b.r) * dot(n2, b.r) + dot(n3, b.r) * dot(n3, b.r);
    r.purity_residual = purity - 0.5 * (1.0 + proj);
    return r;
}

double fisher_variance_residual(const Direction& n, const DensityOperator& rho, const Tolerances& tol)
{
    require_qubit(rho);
    const ComplexMatrix s = spin_half_along(n);
    const double fisher = 4.0 * gen_skew(s, rho, MeanOrder::finite(-1.0), tol);
    return variance(s, rho, tol) - (0.25 * fisher + 0.5 * (1.0 - rho.purity()));
}

}  // namespace skewbound
