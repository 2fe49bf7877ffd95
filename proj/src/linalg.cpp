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

#include "skewbound/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "skewbound/kernels.hpp"

namespace skewbound {

namespace {

using RowMajorXcd = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMajorXcd> as_eigen(const ComplexMatrix& m)
{
    return {m.data(), static_cast<Eigen::Index>(m.dim()), static_cast<Eigen::Index>(m.dim())};
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, cplx{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries) : dim_(dim), data_(std::move(entries))
{
    if (data_.size() != dim_ * dim_) {
        fail(ErrorCode::DimensionMismatch,
             "expected " + std::to_string(dim_ * dim_) + " entries, got " + std::to_string(data_.size()));
    }
    for (const cplx& z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) fail(ErrorCode::DomainError, "non-finite matrix entry");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim)
{
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag)
{
    ComplexMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows)
{
    const std::size_t d = rows.size();
    std::vector<cplx> entries;
    entries.reserve(d * d);
    for (const auto& row : rows) {
        if (row.size() != d) fail(ErrorCode::DimensionMismatch, "matrix rows must all have length " + std::to_string(d));
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return ComplexMatrix(d, std::move(entries));
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> u, std::span<const cplx> v)
{
    if (u.size() != v.size()) fail(ErrorCode::DimensionMismatch, "outer product of unequal lengths");
    ComplexMatrix m(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
    return m;
}

ComplexVector ComplexMatrix::column(std::size_t c) const
{
    ComplexVector v(dim_);
    for (std::size_t r = 0; r < dim_; ++r) v[r] = (*this)(r, c);
    return v;
}

void ComplexMatrix::set_column(std::size_t c, std::span<const cplx> v)
{
    for (std::size_t r = 0; r < dim_; ++r) (*this)(r, c) = v[r];
}

ComplexMatrix ComplexMatrix::adjoint() const
{
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const
{
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

ComplexMatrix ComplexMatrix::conj() const
{
    ComplexMatrix out(*this);
    for (cplx& z : out.data_) z = std::conj(z);
    return out;
}

cplx ComplexMatrix::trace() const noexcept
{
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o)
{
    require_same_dim(*this, o, "matrix addition");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o)
{
    require_same_dim(*this, o, "matrix subtraction");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx a) noexcept
{
    for (cplx& z : data_) z *= a;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b)
{
    require_same_dim(a, b, "matrix product");
    ComplexMatrix c(a.dim());
    kernels::active().gemm(a.dim(), a.data(), b.data(), c.data());
    return c;
}

ComplexVector operator*(const ComplexMatrix& a, std::span<const cplx> x)
{
    if (x.size() != a.dim()) fail(ErrorCode::DimensionMismatch, "matrix-vector product");
    ComplexVector y(a.dim());
    kernels::active().gemv(a.dim(), a.data(), x.data(), y.data());
    return y;
}

ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x)
{
    return a * std::span<const cplx>(x);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b)
{
    require_same_dim(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    return m;
}

double max_abs(const ComplexMatrix& a) noexcept
{
    double m = 0.0;
    for (const cplx& z : a.entries()) m = std::max(m, std::abs(z));
    return m;
}

bool is_hermitian(const ComplexMatrix& a, double tol)
{
    const std::size_t d = a.dim();
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = r; c < d; ++c)
            if (std::abs(a(r, c) - std::conj(a(c, r))) > tol) return false;
    return true;
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* where)
{
    if (a.dim() != b.dim()) {
        fail(ErrorCode::DimensionMismatch,
             std::string(where) + ": " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b)
{
    return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b)
{
    return a * b + b * a;
}

cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b)
{
    require_same_dim(a, b, "trace_product");
    // Tr(AB) = sum_ij A_ij B_ji = <conj(A) | B^T> as flat vectors.
    const ComplexMatrix bt = b.transpose();
    return kernels::active().dotc(a.entries().size(), a.conj().data(), bt.data());
}

cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b)
{
    require_same_dim(a, b, "frobenius_inner");
    return kernels::active().dotc(a.entries().size(), a.data(), b.data());
}

cplx inner(std::span<const cplx> u, std::span<const cplx> v)
{
    if (u.size() != v.size()) fail(ErrorCode::DimensionMismatch, "inner product of unequal lengths");
    return kernels::active().dotc(u.size(), u.data(), v.data());
}

double norm(std::span<const cplx> v)
{
    return std::sqrt(std::max(0.0, inner(v, v).real()));
}

ComplexVector normalized(std::span<const cplx> v)
{
    const double n = norm(v);
    if (n == 0.0) fail(ErrorCode::DomainError, "cannot normalize the zero vector");
    ComplexVector out(v.begin(), v.end());
    for (cplx& z : out) z /= n;
    return out;
}

ComplexVector kron(std::span<const cplx> u, std::span<const cplx> v)
{
    ComplexVector out(u.size() * v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i * v.size() + j] = u[i] * v[j];
    return out;
}

ComplexVector conj(std::span<const cplx> v)
{
    ComplexVector out(v.begin(), v.end());
    for (cplx& z : out) z = std::conj(z);
    return out;
}

EigenSystem hermitian_eigen(const ComplexMatrix& m, const Tolerances& tol)
{
    if (m.empty()) fail(ErrorCode::DomainError, "empty matrix");
    if (!is_hermitian(m, tol.herm)) fail(ErrorCode::NotHermitian, "eigendecomposition requires a Hermitian matrix");

    const std::size_t d = m.dim();
    // Symmetrize so round-off in the input cannot leak into the solver.
    Eigen::MatrixXcd h = as_eigen(m);
    h = (0.5 * (h + h.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) fail(ErrorCode::ConvergenceFailure, "Hermitian eigensolver did not converge");

    EigenSystem out;
    out.values.resize(d);
    out.vectors = ComplexMatrix(d);
    const auto& vals = solver.eigenvalues();
    const auto& vecs = solver.eigenvectors();
    for (std::size_t c = 0; c < d; ++c) {
        out.values[c] = vals(static_cast<Eigen::Index>(c));
        double peak = 0.0;
        for (std::size_t r = 0; r < d; ++r) peak = std::max(peak, std::abs(vecs(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c))));
        std::size_t pivot = 0;
        for (std::size_t r = 0; r < d; ++r) {
            if (std::abs(vecs(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c))) >= peak * (1.0 - 1e-10)) {
                pivot = r;
                break;
            }
        }
        const cplx p = vecs(static_cast<Eigen::Index>(pivot), static_cast<Eigen::Index>(c));
        const cplx phase = std::conj(p) / std::abs(p);
        for (std::size_t r = 0; r < d; ++r) {
            out.vectors(r, c) = vecs(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * phase;
        }
        out.vectors(pivot, c) = std::abs(p);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, const Tolerances& tol)
{
    if (m.empty()) fail(ErrorCode::DomainError, "empty matrix");
    if (!is_hermitian(m, tol.herm)) fail(ErrorCode::NotHermitian, "eigenvalues requested for a non-Hermitian matrix");
    Eigen::MatrixXcd h = as_eigen(m);
    h = (0.5 * (h + h.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) fail(ErrorCode::ConvergenceFailure, "Hermitian eigensolver did not converge");
    const auto& vals = solver.eigenvalues();
    return std::vector<double>(vals.data(), vals.data() + vals.size());
}

ComplexMatrix conj_transpose_basis(const ComplexMatrix& m)
{
    return m.transpose();
}

ComplexMatrix kron(const ComplexMatrix& m, const ComplexMatrix& n)
{
    const std::size_t dm = m.dim(), dn = n.dim(), d = dm * dn;
    ComplexMatrix out(d);
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dm; ++j) {
            const cplx mij = m(i, j);
            if (mij == 0.0) continue;
            for (std::size_t k = 0; k < dn; ++k)
                for (std::size_t l = 0; l < dn; ++l) out(i * dn + k, j * dn + l) = mij * n(k, l);
        }
    return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& m, std::pair<std::size_t, std::size_t> dims)
{
    const auto [da, db] = dims;
    if (da == 0 || db == 0 || da * db != m.dim()) {
        fail(ErrorCode::DimensionMismatch, "partial trace dims " + std::to_string(da) + "x" + std::to_string(db) +
                                               " do not match matrix dim " + std::to_string(m.dim()));
    }
    ComplexMatrix out(da);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < db; ++k) s += m(i * db + k, j * db + k);
            out(i, j) = s;
        }
    return out;
}

std::vector<double> schmidt_coefficients(std::span<const cplx> psi, std::size_t da, std::size_t db)
{
    if (psi.size() != da * db) fail(ErrorCode::DimensionMismatch, "Schmidt decomposition dims");
    Eigen::MatrixXcd c(static_cast<Eigen::Index>(da), static_cast<Eigen::Index>(db));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = psi[i * db + j];
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(c);
    const auto& sv = svd.singularValues();
    std::vector<double> out(static_cast<std::size_t>(sv.size()));
    for (Eigen::Index i = 0; i < sv.size(); ++i) out[static_cast<std::size_t>(i)] = sv(i);
    return out;
}

}  // namespace skewbound
