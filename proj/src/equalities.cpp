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

#include "skewbound/equalities.hpp"

#include <cmath>

namespace skewbound {

namespace {

void check_pair(const ComplexMatrix& a, const ComplexMatrix& b, const DensityOperator& rho)
{
    require_same_dim(a, b, "equality operands");
    if (a.dim() != rho.dim()) fail(ErrorCode::DimensionMismatch, "operator and state dimensions differ");
}

ComplexMatrix centered(const ComplexMatrix& x, const DensityOperator& rho)
{
    return x - rho.expectation(x) * ComplexMatrix::identity(x.dim());
}

double ev(const ComplexMatrix& x, const DensityOperator& rho)
{
    return rho.expectation(x).real();
}

// <i([A^dagger, B] + [A, B^dagger])>, real for any A, B.
ComplexMatrix total_commutator(const ComplexMatrix& a, const ComplexMatrix& b)
{
    return commutator(a.adjoint(), b) + commutator(a, b.adjoint());
}

int sign_for(double term, double tol)
{
    return (term < 0.0 && std::abs(term) >= tol) ? -1 : 1;
}

// 1/2 <M^dagger M + N N^dagger> with M = A - i s B - <>, N = A + i s B - <>.
double correction_pair(const ComplexMatrix& a, const ComplexMatrix& b, int sign, const DensityOperator& rho)
{
    const cplx is(0.0, static_cast<double>(sign));
    const ComplexMatrix m = centered(a - is * b, rho);
    const ComplexMatrix n = centered(a + is * b, rho);
    return ev(m.adjoint() * m + n * n.adjoint(), rho);
}

void finish(EqualityReport& r)
{
    r.residual = r.lhs - r.rhs;
}

struct Deviations {
    double da;
    double db;
};

Deviations positive_deviations(const ComplexMatrix& a, const ComplexMatrix& b, const DensityOperator& rho,
                               const Tolerances& tol)
{
    const double da = std_dev(a, rho, tol);
    const double db = std_dev(b, rho, tol);
    if (da <= tol.residual || db <= tol.residual) fail(ErrorCode::ZeroDeviation, "standard deviation is zero");
    return {da, db};
}

void require_hermitian(const ComplexMatrix& x, const Tolerances& tol)
{
    if (!is_hermitian(x, tol.herm)) fail(ErrorCode::NotHermitian, "observable must be Hermitian");
}

}  // namespace

EqualityReport sum_equality(const ComplexMatrix& a, const ComplexMatrix& b, const DensityOperator& rho,
                            const Tolerances& tol)
{
    check_pair(a, b, rho);
    EqualityReport r;
    r.lhs = variance(a, rho, tol) + variance(b, rho, tol);
    const double half = 0.5 * (kI * rho.expectation(total_commutator(a, b))).real();
    r.sign_choice = sign_for(half, tol.residual);
    r.commutator_term = r.sign_choice * half;
    r.correction_term = 0.5 * correction_pair(a, b, r.sign_choice, rho);
    r.rhs = r.commutator_term + r.correction_term;
    finish(r);
    return r;
}

EqualityReport product_equality(const ComplexMatrix& a, const ComplexMatrix& b, const DensityOperator& rho,
                                const Tolerances& tol)
{
    check_pair(a, b, rho);
    const auto [da, db] = positive_deviations(a, b, rho, tol);
    EqualityReport r;
    r.lhs = da * db;
    const double quarter = 0.25 * (kI * rho.expectation(total_commutator(a, b))).real();
    r.sign_choice = sign_for(quarter, tol.residual);
    r.commutator_term = r.sign_choice * quarter;
    const ComplexMatrix as = a * cplx(1.0 / da);
    const ComplexMatrix bs = b * cplx(1.0 / db);
    r.correction_term = 1.0 - 0.25 * correction_pair(as, bs, r.sign_choice, rho);
    if (std::abs(r.correction_term) < tol.residual) {
        fail(ErrorCode::DegenerateDenominator, "product equality denominator vanishes");
    }
    r.rhs = r.commutator_term / r.correction_term;
    finish(r);
    return r;
}

EqualityReport product_equality_nontrivial(const ComplexMatrix& a, const ComplexMatrix& b, const DensityOperator& rho,
                                           const Tolerances& tol)
{
    check_pair(a, b, rho);
    const auto [da, db] = positive_deviations(a, b, rho, tol);
    EqualityReport r;
    r.lhs = da * db;
    const double quarter = 0.25 * (kI * rho.expectation(total_commutator(a, b))).real();
    r.sign_choice = sign_for(quarter, tol.residual);
    r.commutator_term = r.sign_choice * quarter;
    const ComplexMatrix as = a * cplx(std::sqrt(db / da));
    const ComplexMatrix bs = b * cplx(std::sqrt(da / db));
    r.correction_term = 0.25 * correction_pair(as, bs, r.sign_choice, rho);
    r.rhs = r.commutator_term + r.correction_term;
    finish(r);
    return r;
}

namespace {

struct Triple {
    std::array<ComplexMatrix, 3> centered;
    std::array<double, 3> var;
    std::array<double, 3> y;  // Y12, Y23, Y31
    std::array<int, 3> r;
};

Triple analyse_triple(const ComplexMatrix& x1, const ComplexMatrix& x2, const ComplexMatrix& x3,
                      const DensityOperator& rho, const Tolerances& tol)
{
    const std::array<const ComplexMatrix*, 3> xs{&x1, &x2, &x3};
    for (const auto* x : xs) {
        require_hermitian(*x, tol);
        if (x->dim() != rho.dim()) fail(ErrorCode::DimensionMismatch, "operator and state dimensions differ");
    }
    Triple t;
    for (std::size_t k = 0; k < 3; ++k) {
        t.centered[k] = centered(*xs[k], rho);
        t.var[k] = variance(*xs[k], rho, tol);
    }
    for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t l = (k + 1) % 3;
        t.y[k] = 0.5 * (kI * rho.expectation(commutator(*xs[k], *xs[l]))).real();
        t.r[k] = sign_for(t.y[k], tol.residual);
    }
    return t;
}

// <M^dagger M> for M = u - i r v.
double pair_norm(const ComplexMatrix& u, const ComplexMatrix& v, int r, const DensityOperator& rho)
{
    const ComplexMatrix m = u - cplx(0.0, static_cast<double>(r)) * v;
    return ev(m.adjoint() * m, rho);
}

}  // namespace

EqualityReport three_observable_sum_equality(const ComplexMatrix& x1, const ComplexMatrix& x2, const ComplexMatrix& x3,
                                             const DensityOperator& rho, const Tolerances& tol)
{
    const Triple t = analyse_triple(x1, x2, x3, rho, tol);
    EqualityReport r;
    r.lhs = t.var[0] + t.var[1] + t.var[2];
    double corr = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t l = (k + 1) % 3;
        r.commutator_term += t.r[k] * t.y[k];
        corr += pair_norm(t.centered[k], t.centered[l], t.r[k], rho);
    }
    r.correction_term = 0.5 * corr;
    r.pair_signs = t.r;
    r.sign_choice = t.r[0];
    r.rhs = r.commutator_term + r.correction_term;
    finish(r);
    return r;
}

EqualityReport three_observable_product_equality(const ComplexMatrix& x1, const ComplexMatrix& x2,
                                                 const ComplexMatrix& x3, const DensityOperator& rho,
                                                 const Tolerances& tol)
{
    const Triple t = analyse_triple(x1, x2, x3, rho, tol);
    std::array<double, 3> sd{};
    for (std::size_t k = 0; k < 3; ++k) {
        sd[k] = std::sqrt(t.var[k]);
        if (sd[k] <= tol.residual) fail(ErrorCode::ZeroDeviation, "standard deviation is zero");
    }
    const double prod = sd[0] * sd[1] * sd[2];
    const double root = std::sqrt(prod);
    EqualityReport r;
    r.lhs = prod;
    double corr = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t l = (k + 1) % 3;
        const std::size_t m = (k + 2) % 3;
        r.commutator_term += t.r[k] * t.y[k] * sd[m];
        const ComplexMatrix u = t.centered[k] * cplx(root / sd[k]);
        const ComplexMatrix v = t.centered[l] * cplx(root / sd[l]);
        corr += pair_norm(u, v, t.r[k], rho);
    }
    r.commutator_term /= 3.0;
    r.correction_term = corr / 6.0;
    r.pair_signs = t.r;
    r.sign_choice = t.r[0];
    r.rhs = r.commutator_term + r.correction_term;
    finish(r);
    return r;
}

EqualityReport skew_product_equality(const ComplexMatrix& a, const ComplexMatrix& b, const DensityOperator& rho,
                                     double s, const Tolerances& tol)
{
    check_pair(a, b, rho);
    if (!(s > 0.0 && s < 1.0)) fail(ErrorCode::DomainError, "skew parameter s must lie in (0, 1)");
    const double ia = wyd_skew(a, rho, s, tol);
    const double ib = wyd_skew(b, rho, s, tol);
    if (ia <= tol.residual || ib <= tol.residual) fail(ErrorCode::ZeroSkew, "skew information is zero");

    for (double l : rho.eigenvalues()) {
        if (l > 0.0 && std::pow(l, s) - l < -tol.psd) fail(ErrorCode::InvalidState, "rho^s - rho is not PSD");
    }

    const std::size_t d = rho.dim();
    const ComplexMatrix id = ComplexMatrix::identity(d);
    const ComplexMatrix rs = matrix_power(rho, s);
    const ComplexMatrix r1 = matrix_power(rho, 1.0 - s);
    const ComplexMatrix ad = a.adjoint(), bd = b.adjoint();

    cplx energy = 0.0;
    if (s != 0.5) {
        energy = trace_product(r1, bd * rs * a) + trace_product(r1, b * rs * ad) - trace_product(r1, a * rs * bd) -
                 trace_product(r1, ad * rs * b);
    }
    // The quotient identity holds with the energy term entering with a minus sign.
    const cplx q = trace_product(total_commutator(a, b), rs) - energy;
    const double raw = (0.25 * kI * q).real();

    EqualityReport r;
    r.sign_choice = sign_for(raw, tol.residual);
    r.commutator_term = r.sign_choice * raw;

    const double na = 1.0 / std::sqrt(ia), nb = 1.0 / std::sqrt(ib);
    const cplx is(0.0, static_cast<double>(r.sign_choice));
    const ComplexMatrix p = na * a + is * nb * b;
    const ComplexMatrix m = na * a - is * nb * b;
    const ComplexMatrix xi = p.adjoint() * rs * p;
    const ComplexMatrix eta = m * rs * m.adjoint();
    const ComplexMatrix sigma = rs - rho.matrix();
    const double omega = trace_product(anticommutator(ad, a), sigma).real() / (4.0 * ia) +
                         trace_product(anticommutator(bd, b), sigma).real() / (4.0 * ib);
    const double tr = trace_product(xi + eta, id - r1).real();

    r.correction_term = 1.0 + omega - 0.25 * tr;
    if (std::abs(r.correction_term) < tol.residual) {
        fail(ErrorCode::DegenerateDenominator, "skew product equality denominator vanishes");
    }
    r.lhs = std::sqrt(ia * ib);
    r.rhs = r.commutator_term / r.correction_term;
    finish(r);

    const double b7_rhs = 2.0 + 2.0 * omega - (static_cast<double>(r.sign_choice) * 0.5 * kI * q).real() / r.lhs;
    r.secondary_residual = 0.5 * tr - b7_rhs;
    return r;
}

ChainReport corollary1_chain(const ComplexMatrix& a, const ComplexMatrix& b, const DensityOperator& rho, double s,
                             const Tolerances& tol)
{
    require_hermitian(a, tol);
    require_hermitian(b, tol);
    check_pair(a, b, rho);
    ChainReport c;
    c.vv = std_dev(a, rho, tol) * std_dev(b, rho, tol);
    c.ss = std::sqrt(wyd_skew(a, rho, 0.5, tol) * wyd_skew(b, rho, 0.5, tol));
    c.bound = skew_product_equality(a, b, rho, s, tol).rhs;
    return c;
}

bool is_intelligent_state(const ComplexMatrix& a, const ComplexMatrix& b, const DensityOperator& rho,
                          const Tolerances& tol)
{
    check_pair(a, b, rho);
    const double half = 0.5 * (kI * rho.expectation(total_commutator(a, b))).real();
    const int sign = sign_for(half, tol.residual);
    const cplx is(0.0, static_cast<double>(sign));
    const ComplexMatrix m = centered(a - is * b, rho);
    const ComplexMatrix n = centered(a + is * b, rho);
    const ComplexMatrix root = matrix_power(rho, 0.5);
    return max_abs(root * m.adjoint()) < tol.recon && max_abs(root * n) < tol.recon;
}

}  // namespace skewbound
