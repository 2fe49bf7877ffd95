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

#include "skewbound/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

namespace skewbound {

DensityOperator DensityOperator::from_matrix(ComplexMatrix m, const Tolerances& tol)
{
    if (m.empty()) fail(ErrorCode::InvalidState, "density matrix must have positive dimension");
    if (!is_hermitian(m, tol.herm)) fail(ErrorCode::NotHermitian, "density matrix is not Hermitian");
    const cplx tr = m.trace();
    if (std::abs(tr - 1.0) > tol.trace) {
        fail(ErrorCode::InvalidState, "density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
    }

    EigenSystem es = hermitian_eigen(m, tol);
    if (es.values.front() < -tol.psd) {
        fail(ErrorCode::InvalidState, "density matrix has eigenvalue " + std::to_string(es.values.front()));
    }

    const std::size_t d = m.dim();
    ComplexMatrix recon(d);
    for (std::size_t k = 0; k < d; ++k) {
        const ComplexVector v = es.vectors.column(k);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) recon(i, j) += es.values[k] * v[i] * std::conj(v[j]);
    }
    if (max_abs_diff(recon, m) > tol.recon) fail(ErrorCode::InvalidState, "spectral reconstruction failed");

    for (double& l : es.values) {
        if (l < tol.psd) l = 0.0;
        l = std::min(l, 1.0);
    }

    DensityOperator rho;
    rho.matrix_ = std::move(m);
    rho.values_ = std::move(es.values);
    rho.vectors_ = std::move(es.vectors);
    return rho;
}

DensityOperator DensityOperator::pure(std::span<const cplx> psi, const Tolerances& tol)
{
    const ComplexVector u = normalized(psi);
    return from_matrix(ComplexMatrix::outer(u, u), tol);
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim)
{
    return from_matrix(ComplexMatrix::identity(dim) * cplx(1.0 / static_cast<double>(dim)));
}

std::size_t DensityOperator::rank() const noexcept
{
    return static_cast<std::size_t>(std::count_if(values_.begin(), values_.end(), [](double l) { return l > 0.0; }));
}

double DensityOperator::purity() const noexcept
{
    double p = 0.0;
    for (double l : values_) p += l * l;
    return p;
}

double DensityOperator::trace_power(double p) const noexcept
{
    double t = 0.0;
    for (double l : values_)
        if (l > 0.0) t += std::pow(l, p);
    return t;
}

cplx DensityOperator::expectation(const ComplexMatrix& a) const
{
    return trace_product(matrix_, a);
}

ComplexMatrix matrix_power(const DensityOperator& rho, double s)
{
    if (!(s > 0.0 && s <= 1.0)) fail(ErrorCode::DomainError, "matrix power exponent must lie in (0, 1]");
    const std::size_t d = rho.dim();
    ComplexMatrix out(d);
    const auto& vals = rho.eigenvalues();
    const auto& vecs = rho.eigenvectors();
    for (std::size_t k = 0; k < d; ++k) {
        if (vals[k] <= 0.0) continue;
        const double w = std::pow(vals[k], s);
        for (std::size_t i = 0; i < d; ++i) {
            const cplx vi = w * vecs(i, k);
            for (std::size_t j = 0; j < d; ++j) out(i, j) += vi * std::conj(vecs(j, k));
        }
    }
    return out;
}

Rng Rng::stream(std::uint64_t seed, std::uint64_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x5eedu};
    std::mt19937_64 engine(seq);
    return Rng(engine());
}

std::uint64_t Rng::below(std::uint64_t n)
{
    std::uniform_int_distribution<std::uint64_t> dist(0, n - 1);
    return dist(engine_);
}

cplx Rng::complex_normal()
{
    const double re = normal();
    const double im = normal();
    return {re, im};
}

DensityOperator random_density(std::size_t dim, std::size_t rank, std::uint64_t seed)
{
    Rng rng(seed);
    return random_density(dim, rank, rng);
}

DensityOperator random_density(std::size_t dim, std::size_t rank, Rng& rng)
{
    if (dim == 0 || rank == 0 || rank > dim) {
        fail(ErrorCode::DomainError, "random_density requires 1 <= rank <= dim");
    }
    std::vector<cplx> g(dim * rank);
    for (cplx& z : g) z = rng.complex_normal();
    ComplexMatrix m(dim);
    double tr = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < rank; ++k) s += g[i * rank + k] * std::conj(g[j * rank + k]);
            m(i, j) = s;
        }
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = m(i, i).real();
        tr += m(i, i).real();
    }
    m *= cplx(1.0 / tr);
    return DensityOperator::from_matrix(std::move(m));
}

ComplexVector random_pure_vector(std::size_t dim, Rng& rng)
{
    ComplexVector v(dim);
    for (cplx& z : v) z = rng.complex_normal();
    return normalized(v);
}

ComplexMatrix random_matrix(std::size_t dim, Rng& rng)
{
    std::vector<cplx> e(dim * dim);
    for (cplx& z : e) z = rng.complex_normal();
    return ComplexMatrix(dim, std::move(e));
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng)
{
    const ComplexMatrix g = random_matrix(dim, rng);
    return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng)
{
    const ComplexMatrix g = random_matrix(dim, rng);
    Eigen::MatrixXcd a(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = g(i, j);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    ComplexMatrix u(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        const cplx rjj = r(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j));
        const cplx ph = std::abs(rjj) > 0.0 ? rjj / std::abs(rjj) : cplx(1.0);
        for (std::size_t i = 0; i < dim; ++i) u(i, j) = q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * ph;
    }
    return u;
}

}  // namespace skewbound
