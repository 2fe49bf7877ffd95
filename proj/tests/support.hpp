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

// Test-side helpers. The oracle namespace recomputes quantities straight from
// their defining formulas with Eigen, independent of the library code paths.
#pragma once

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "skewbound/bounds.hpp"

namespace testing {

using skewbound::ComplexMatrix;
using skewbound::cplx;
using MatX = Eigen::MatrixXcd;

inline MatX to_eigen(const ComplexMatrix& m)
{
    MatX out(m.dim(), m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = m(r, c);
    return out;
}

inline ComplexMatrix from_eigen(const MatX& m)
{
    ComplexMatrix out(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
    return out;
}

namespace oracle {

inline MatX psd_power(const MatX& rho, double s)
{
    Eigen::SelfAdjointEigenSolver<MatX> es(rho);
    Eigen::VectorXd w = es.eigenvalues();
    for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = w(i) > 1e-10 ? std::pow(w(i), s) : 0.0;
    return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
}

// 1/2 Tr([rho^s, A]^dagger [rho^(1-s), A])
inline double wyd(const MatX& a, const MatX& rho, double s)
{
    const MatX ps = psd_power(rho, s), pt = psd_power(rho, 1.0 - s);
    const MatX c1 = ps * a - a * ps, c2 = pt * a - a * pt;
    return 0.5 * (c1.adjoint() * c2).trace().real();
}

inline double variance(const MatX& a, const MatX& rho)
{
    const MatX sym = 0.5 * (a.adjoint() * a + a * a.adjoint());
    return (rho * sym).trace().real() - std::norm((rho * a).trace());
}

inline double mean(double x, double y, double nu)
{
    if (x <= 1e-10 || y <= 1e-10) return 0.0;
    if (nu == 0.0) return std::sqrt(x * y);
    if (std::isinf(nu)) return std::min(x, y);
    return std::pow(0.5 * (std::pow(x, nu) + std::pow(y, nu)), 1.0 / nu);
}

// Generalized skew information written as the double sum over eigenpairs.
inline double gen_skew(const MatX& a, const MatX& rho, double nu)
{
    Eigen::SelfAdjointEigenSolver<MatX> es(rho);
    const MatX& v = es.eigenvectors();
    const MatX ad = v.adjoint() * a.adjoint() * v, ap = v.adjoint() * a * v;
    double t = 0.5 * (rho * (a.adjoint() * a + a * a.adjoint())).trace().real();
    for (Eigen::Index i = 0; i < ap.rows(); ++i)
        for (Eigen::Index j = 0; j < ap.rows(); ++j)
            t -= 0.5 * mean(es.eigenvalues()(i), es.eigenvalues()(j), nu) * (std::norm(ad(i, j)) + std::norm(ap(i, j)));
    return t;
}

}  // namespace oracle

inline double mean_nu(const skewbound::MeanOrder& o)
{
    switch (o.kind()) {
    case skewbound::MeanOrder::Kind::Zero: return 0.0;
    case skewbound::MeanOrder::Kind::MinusInfinity: return -INFINITY;
    default: return o.nu();
    }
}

inline ComplexMatrix projector(std::size_t dim, std::size_t k)
{
    ComplexMatrix p(dim);
    p(k, k) = 1.0;
    return p;
}

}  // namespace testing
