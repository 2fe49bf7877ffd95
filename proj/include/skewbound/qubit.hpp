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
#include <utility>
#include <vector>

#include "skewbound/bounds.hpp"
#include "skewbound/equalities.hpp"

namespace skewbound {

using Direction = std::array<double, 3>;

struct BlochState {
    Direction r{0.0, 0.0, 0.0};

    // (I + r . sigma) / 2; throws InvalidState if |r| > 1 + tol_psd.
    DensityOperator density(const Tolerances& tol = {}) const;
    static BlochState from_density(const DensityOperator& rho);
};

// [1 - 2 m_nu(l1, l2)] <Delta sigma>^2 in the eigenvector of the smaller eigenvalue.
double qubit_gen_skew_closed(const ComplexMatrix& sigma, const DensityOperator& rho, const MeanOrder& order,
                             const Tolerances& tol = {});

// 1 - 2 m_nu(l1, l2) with the zero-eigenvalue rule, so pure states give 1 and I/2 gives 0.
double mean_bracket(const DensityOperator& rho, const MeanOrder& order);

// F / I_WY = 4 (1 - 4 l1 l2) / (1 - 2 sqrt(l1 l2)). Throws DegenerateDenominator at rho = I/2.
double fisher_wy_ratio(const DensityOperator& rho, const Tolerances& tol = {});

// (1 - 4 l1 l2) / bracket. Throws DegenerateDenominator when the bracket vanishes.
double gamma_factor(const DensityOperator& rho, const MeanOrder& order, const Tolerances& tol = {});

using OrderedOperator = std::pair<ComplexMatrix, MeanOrder>;

// sum_k I^{nu_k}(sigma_k) / bracket_k.
double prop3_lhs(const std::vector<OrderedOperator>& ops, const DensityOperator& rho, const Tolerances& tol = {});

// Lower bound for sum_k I^{nu_k}(sigma_k) given a pure-state variance bound:
// min_k bracket_k * pure_bound.
double prop3_skew_bound(const std::vector<MeanOrder>& orders, const DensityOperator& rho, double pure_bound);

struct Prop4Result {
    double lhs = 0.0;
    double bound = 0.0;
    PureStateBound pure;
};

// Bound taken from pure_state_bound over the combined operator list.
Prop4Result prop4_check(const std::vector<OrderedOperator>& skew_ops, const std::vector<ComplexMatrix>& var_ops,
                        const DensityOperator& rho, std::size_t grid_points = 201, unsigned jobs = 1,
                        const Tolerances& tol = {});

struct Observation2Result {
    double lhs = 0.0;    // Gamma_nu I^nu(sigma_a) + <Delta sigma_b>^2
    double bound = 0.0;  // (1 - |a . b|) / 4
};

// Uses Gamma_nu I^nu = (1 - 4 l1 l2) <Delta sigma>^2_{l1}, which stays finite at rho = I/2.
Observation2Result observation2_check(const Direction& a, const Direction& b, const DensityOperator& rho,
                                      const MeanOrder& order, const Tolerances& tol = {});

// Throws NotOrthonormal unless |n_i . n_j - delta_ij| <= 1e-10.
void require_orthonormal(const Direction& n1, const Direction& n2, const Direction& n3);

// sum_k I^{nu_k}(sigma_{n_k}) / bracket_k = 1/2.
EqualityReport prop5_equality(const Direction& n1, const Direction& n2, const Direction& n3,
                              const DensityOperator& rho, const std::array<MeanOrder, 3>& orders,
                              const Tolerances& tol = {});

struct Prop6Report {
    EqualityReport one_skew;  // Gamma I(n1) + V(n2) + V(n3) = 1/2
    EqualityReport two_skew;  // Gamma I(n1) + Gamma' I(n2) + V(n3) = Tr rho^2 / 2
    double variance_identity_residual = 0.0;  // max over n_k of V - Gamma I - (1 - Tr rho^2)/2
    double purity_residual = 0.0;             // Tr rho^2 - (1 + sum (n_k . r)^2) / 2
};

Prop6Report prop6_equalities(const Direction& n1, const Direction& n2, const Direction& n3,
                             const DensityOperator& rho, const std::array<MeanOrder, 2>& orders,
                             const Tolerances& tol = {});

// V = F/4 + (1 - Tr rho^2)/2 for sigma_n; returns the residual.
double fisher_variance_residual(const Direction& n, const DensityOperator& rho, const Tolerances& tol = {});

}  // namespace skewbound
