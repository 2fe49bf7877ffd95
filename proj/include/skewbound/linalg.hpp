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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "skewbound/error.hpp"
#include "skewbound/tolerances.hpp"

namespace skewbound {

using cplx = std::complex<double>;
using ComplexVector = std::vector<cplx>;

inline constexpr cplx kI{0.0, 1.0};

// Dense square complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    // Throws DimensionMismatch on size != dim*dim, DomainError on non-finite entries.
    ComplexMatrix(std::size_t dim, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> diag);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
    static ComplexMatrix outer(std::span<const cplx> u, std::span<const cplx> v);  // |u><v|

    std::size_t dim() const noexcept { return dim_; }
    bool empty() const noexcept { return dim_ == 0; }

    cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * dim_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * dim_ + c]; }

    cplx* data() noexcept { return data_.data(); }
    const cplx* data() const noexcept { return data_.data(); }
    const std::vector<cplx>& entries() const noexcept { return data_; }

    ComplexVector column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const cplx> v);

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;
    cplx trace() const noexcept;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx a) noexcept;

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexVector operator*(const ComplexMatrix& a, std::span<const cplx> x);

private:
    std::size_t dim_ = 0;
    std::vector<cplx> data_;
};

ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& a) noexcept;
bool is_hermitian(const ComplexMatrix& a, double tol);
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* where);

// Commutator and anticommutator.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

// Tr(A B) without forming the product.
cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b);
// Frobenius inner product Tr(A^dagger B).
cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b);

cplx inner(std::span<const cplx> u, std::span<const cplx> v);  // <u|v>
double norm(std::span<const cplx> v);
ComplexVector normalized(std::span<const cplx> v);
ComplexVector kron(std::span<const cplx> u, std::span<const cplx> v);
ComplexVector conj(std::span<const cplx> v);

struct EigenSystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // columns; largest-magnitude component real positive
};

// Throws NotHermitian, ConvergenceFailure.
EigenSystem hermitian_eigen(const ComplexMatrix& m, const Tolerances& tol = {});
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, const Tolerances& tol = {});

// Entrywise transpose, no conjugation.
ComplexMatrix conj_transpose_basis(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& m, const ComplexMatrix& n);

ComplexMatrix partial_trace_second(const ComplexMatrix& m, std::pair<std::size_t, std::size_t> dims);

// Reshapes a d_A*d_B vector into its d_A x d_B coefficient matrix (row-major)
// and returns the Schmidt coefficients, descending.
std::vector<double> schmidt_coefficients(std::span<const cplx> psi, std::size_t da, std::size_t db);

}  // namespace skewbound
