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

#include <array>
#include <cmath>

#include "skewbound/moments.hpp"

namespace skewbound {

// Both sides of an uncertainty equality. For quotient forms commutator_term is
// the numerator and correction_term the denominator.
struct EqualityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    double commutator_term = 0.0;
    double correction_term = 0.0;
    int sign_choice = 1;
    // Pairwise signs (r12, r23, r31) for the three-observable forms.
    std::array<int, 3> pair_signs{1, 1, 1};
    // Independent identity checked alongside the main one (skew form only).
    double secondary_residual = 0.0;

    bool verified(double tol) const noexcept { return std::abs(residual) <= tol; }
};

EqualityReport sum_equality(const ComplexMatrix& a, const ComplexMatrix& b, const DensityOperator& rho,
                            const Tolerances& tol = {});

EqualityReport product_equality(const ComplexMatrix& a, const ComplexMatrix& b, const DensityOperator& rho,
                                const Tolerances& tol = {});

EqualityReport product_equality_nontrivial(const ComplexMatrix& a, const ComplexMatrix& b, const DensityOperator& rho,
                                           const Tolerances& tol = {});

EqualityReport three_observable_sum_equality(const ComplexMatrix& x1, const ComplexMatrix& x2, const ComplexMatrix& x3,
                                             const DensityOperator& rho, const Tolerances& tol = {});

EqualityReport three_observable_product_equality(const ComplexMatrix& x1, const ComplexMatrix& x2,
                                                 const ComplexMatrix& x3, const DensityOperator& rho,
                                                 const Tolerances& tol = {});

// secondary_residual carries the trace identity behind the quotient.
EqualityReport skew_product_equality(const ComplexMatrix& a, const ComplexMatrix& b, const DensityOperator& rho,
                                     double s, const Tolerances& tol = {});

struct ChainReport {
    double vv = 0.0;     // <dA><dB>
    double ss = 0.0;     // sqrt(I(A) I(B)), Wigner-Yanase
    double bound = 0.0;  // quotient lower bound at parameter s
};

ChainReport corollary1_chain(const ComplexMatrix& a, const ComplexMatrix& b, const DensityOperator& rho, double s,
                             const Tolerances& tol = {});

// True when sqrt(rho) annihilates both correction operators of the sum equality.
bool is_intelligent_state(const ComplexMatrix& a, const ComplexMatrix& b, const DensityOperator& rho,
                          const Tolerances& tol = {});

}  // namespace skewbound
