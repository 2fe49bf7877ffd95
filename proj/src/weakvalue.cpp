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

#include "skewbound/weakvalue.hpp"

#include <algorithm>
#include <cmath>

namespace skewbound {

namespace {

bool overlap_ok(std::span<const cplx> pre, std::span<const cplx> post)
{
    const double scale = norm(pre) * norm(post);
    return scale > 0.0 && std::abs(inner(post, pre)) > kTolOverlap * scale;
}

void require_basis(const std::vector<ComplexVector>& basis, std::size_t d, const Tolerances& tol)
{
    if (basis.size() != d) fail(ErrorCode::DimensionMismatch, "basis must have one vector per dimension");
    for (std::size_t i = 0; i < d; ++i) {
        if (basis[i].size() != d) fail(ErrorCode::DimensionMismatch, "basis vector has the wrong length");
        for (std::size_t j = 0; j < d; ++j) {
            if (std::abs(inner(basis[i], basis[j]) - (i == j ? 1.0 : 0.0)) > tol.recon) {
                fail(ErrorCode::NotOrthonormal, "postselection basis is not orthonormal");
            }
        }
    }
}

}  // namespace

std::size_t WeakValueTable::undefined_count() const noexcept
{
    return static_cast<std::size_t>(std::count(defined.begin(), defined.end(), false));
}

cplx weak_value(const ComplexMatrix& op, std::span<const cplx> pre, std::span<const cplx> post)
{
    if (pre.size() != op.dim() || post.size() != op.dim()) {
        fail(ErrorCode::DimensionMismatch, "selection vectors do not match the operator");
    }
    if (!overlap_ok(pre, post)) fail(ErrorCode::OrthogonalSelection, "pre- and postselection are orthogonal");
    return inner(post, op * pre) / inner(post, pre);
}

ComplexVector collapse_second(std::span<const cplx> psi, std::span<const cplx> v)
{
    const std::size_t d = v.size();
    if (psi.size() != d * d) fail(ErrorCode::DimensionMismatch, "collapse needs a d*d vector");
    // <v*| on the second factor has components v[b].
    ComplexVector out(d, 0.0);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) out[a] += v[b] * psi[a * d + b];
    return out;
}

std::vector<ComplexVector> computational_basis(std::size_t dim)
{
    std::vector<ComplexVector> b(dim, ComplexVector(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) b[i][i] = 1.0;
    return b;
}

std::vector<ComplexVector> columns_of(const ComplexMatrix& u)
{
    std::vector<ComplexVector> b;
    for (std::size_t c = 0; c < u.dim(); ++c) b.push_back(u.column(c));
    return b;
}

Reconstruction reconstruct_skew(const ComplexMatrix& a, const DensityOperator& rho, double s,
                                const std::vector<ComplexVector>& basis, bool strict, const Tolerances& tol)
{
    const std::size_t d = rho.dim();
    require_same_dim(a, rho.matrix(), "reconstruct_skew");
    require_basis(basis, d, tol);
    const ComplexMatrix h = h_op(a, tol);
    const EmbeddingVectors e = embedding(rho, s);
    const ComplexVector h_s = h * e.phi_s, h_1 = h * e.phi_1ms;

    Reconstruction r;
    WeakValueTable& t = r.table;
    t.dim = d;
    t.wv_s.assign(d * d, 0.0);
    t.wv_1ms.assign(d * d, 0.0);
    t.weight_s.assign(d * d, 0.0);
    t.weight_1ms.assign(d * d, 0.0);
    t.defined.assign(d * d, false);

    cplx total = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const ComplexVector post = kron(basis[i], conj(basis[j]));
            const std::size_t k = t.index(i, j);
            t.weight_s[k] = inner(post, e.phi_s);
            t.weight_1ms[k] = inner(post, e.phi_1ms);
            if (overlap_ok(e.phi_s, post) && overlap_ok(e.phi_1ms, post)) {
                t.defined[k] = true;
                t.wv_s[k] = inner(post, h_s) / t.weight_s[k];
                t.wv_1ms[k] = inner(post, h_1) / t.weight_1ms[k];
                total += std::conj(t.weight_s[k]) * t.weight_1ms[k] * std::conj(t.wv_s[k]) * t.wv_1ms[k];
            } else {
                if (strict) {
                    fail(ErrorCode::OrthogonalSelection,
                         "postselection (" + std::to_string(i) + ", " + std::to_string(j) + ") has zero overlap");
                }
                total += std::conj(inner(post, h_s)) * inner(post, h_1);
            }
        }
    }
    r.value = total.real();
    r.imag_residual = std::abs(total.imag());
    return r;
}

SubsystemReport subsystem_weak_values(const ComplexMatrix& a, const DensityOperator& rho, double s,
                                      const std::vector<ComplexVector>& basis, const Tolerances& tol)
{
    const std::size_t d = rho.dim();
    require_same_dim(a, rho.matrix(), "subsystem_weak_values");
    require_basis(basis, d, tol);
    const ComplexMatrix id = ComplexMatrix::identity(d);
    const ComplexMatrix a_first = kron(a, id), a_second = kron(id, a.transpose());
    const EmbeddingVectors e = embedding(rho, s);

    SubsystemReport r;
    for (const ComplexVector* pre : {&e.phi_s, &e.phi_1ms}) {
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                const ComplexVector post = kron(basis[i], conj(basis[j]));
                if (!overlap_ok(*pre, post)) {
                    ++r.skipped;
                    continue;
                }
                const ComplexVector phi_i = collapse_second(*pre, basis[i]);
                const ComplexVector phi_j = collapse_second(*pre, basis[j]);
                const cplx w1 = weak_value(a_first, *pre, post);
                const cplx w3 = weak_value(a_second, *pre, post);
                const cplx single_j = weak_value(a, normalized(phi_j), basis[i]);
                const cplx single_i = weak_value(a, normalized(phi_i), basis[j]);
                r.collapse_residual = std::max(r.collapse_residual, std::abs(w1 - single_j));
                r.conjugate_residual = std::max(r.conjugate_residual, std::abs(w3 - std::conj(single_i)));
                ++r.checked;
            }
        }
    }
    return r;
}

}  // namespace skewbound
