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

#include <vector>

#include "skewbound/bounds.hpp"

namespace skewbound {

// <post|op|pre> / <post|pre>. Throws OrthogonalSelection when the normalized overlap is below kTolOverlap.
cplx weak_value(const ComplexMatrix& op, std::span<const cplx> pre, std::span<const cplx> post);

// d x d tables indexed by the postselection |alpha_i alpha_j*>, row-major.
struct WeakValueTable {
    std::size_t dim = 0;
    std::vector<cplx> wv_s;        // <H_A> weak value, preselection Phi^s
    std::vector<cplx> wv_1ms;      // same for Phi^(1-s)
    std::vector<cplx> weight_s;    // <alpha_i alpha_j*| Phi~^s>
    std::vector<cplx> weight_1ms;  // <alpha_i alpha_j*| Phi~^(1-s)>
    std::vector<bool> defined;     // false where an overlap is below kTolOverlap

    std::size_t index(std::size_t i, std::size_t j) const noexcept { return i * dim + j; }
    std::size_t undefined_count() const noexcept;
};

struct Reconstruction {
    double value = 0.0;
    double imag_residual = 0.0;
    WeakValueTable table;
};

// Undefined entries use the product of matrix elements directly unless strict is set,
// in which case OrthogonalSelection is thrown naming the (i, j) entry.
Reconstruction reconstruct_skew(const ComplexMatrix& a, const DensityOperator& rho, double s,
                                const std::vector<ComplexVector>& basis, bool strict = false,
                                const Tolerances& tol = {});

struct SubsystemReport {
    double collapse_residual = 0.0;     // max |<A (x) I> - <A>_{phi^j}|
    double conjugate_residual = 0.0;    // max |<I (x) A^T> - conj(<A>_{phi^i})|
    std::size_t checked = 0;
    std::size_t skipped = 0;
};

// Checks, for both preselections, that the doubled-space weak values reduce to single-system ones.
SubsystemReport subsystem_weak_values(const ComplexMatrix& a, const DensityOperator& rho, double s,
                                      const std::vector<ComplexVector>& basis, const Tolerances& tol = {});

// Vector on the first factor left after projecting the second factor of psi onto |v*>.
ComplexVector collapse_second(std::span<const cplx> psi, std::span<const cplx> v);

std::vector<ComplexVector> computational_basis(std::size_t dim);
std::vector<ComplexVector> columns_of(const ComplexMatrix& u);

}  // namespace skewbound
