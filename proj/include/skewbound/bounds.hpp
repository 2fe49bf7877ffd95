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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skewbound/operators.hpp"

namespace skewbound {

// sum_i lambda_i^p |lambda_i>|lambda_i*>, p = s and p = 1 - s.
struct EmbeddingVectors {
    ComplexVector phi_s;
    ComplexVector phi_1ms;
    double norm_s = 0.0;    // Tr rho^(2s)
    double norm_1ms = 0.0;  // Tr rho^(2(1-s))
};

EmbeddingVectors embedding(const DensityOperator& rho, double s);

// (A (x) I - I (x) A^T) / sqrt(2).
ComplexMatrix h_op(const ComplexMatrix& a, const Tolerances& tol = {});

// sum over Hermitian parts of H_{k,n}^2.
ComplexMatrix h_tot(const OperatorSet& ops);

struct HtotSpectrum {
    std::vector<double> values;
    ComplexMatrix vectors;
    double eps0 = 0.0;
    double eps1 = 0.0;
    double epsK = 0.0;
    double tol_eig = 0.0;
    std::size_t ground_multiplicity = 0;
    bool has_excited = false;

    bool ground_is_zero() const noexcept { return eps0 <= tol_eig; }
};

HtotSpectrum spectrum(const ComplexMatrix& htot);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct SpectralBound {
    double epsilon0 = 0.0;
    double epsilon1 = 0.0;
    double epsilonK = 0.0;
    double bound = 0.0;
    bool used_excited = false;
    Interval interval;
    std::optional<DensityOperator> saturating_state;
    std::vector<std::string> warnings;
};

SpectralBound bound_wy(const OperatorSet& ops, const DensityOperator& rho, const Tolerances& tol = {});

// Uses the default overlap candidates plus any supplied unit vectors on the doubled space.
SpectralBound bound_wyd(const OperatorSet& ops, const DensityOperator& rho, double s,
                        const std::vector<ComplexVector>& extra_chi = {}, const Tolerances& tol = {});

SpectralBound bound_genskew(const OperatorSet& ops, const DensityOperator& rho, const std::vector<MeanOrder>& orders,
                            const Tolerances& tol = {});

double sum_wyd_skew(const OperatorSet& ops, const DensityOperator& rho, double s, const Tolerances& tol = {});
double sum_gen_skew(const OperatorSet& ops, const DensityOperator& rho, const std::vector<MeanOrder>& orders,
                    const Tolerances& tol = {});
double sum_variance(const OperatorSet& ops, const DensityOperator& rho, const Tolerances& tol = {});

enum class ScanVariant {
    Transposed,  // H_tot + A^a (x) (A^a)^T over the full doubled space
    Symmetric,   // variance form with A^a (x) A^a, restricted to the symmetric subspace
};

struct AlphaScanResult {
    double value = 0.0;                // max(max_k min_alpha, floor)
    double floor = 0.0;                // ground value without the alpha term
    std::vector<double> per_part;      // min over alpha for each Hermitian part
    std::vector<double> best_alpha;    // minimizing alpha for each part
};

AlphaScanResult tighten_alpha_scan(const OperatorSet& ops, std::size_t grid_points = 201,
                                   ScanVariant variant = ScanVariant::Transposed, unsigned jobs = 1);

// Lower bounds on the sum of variances over pure states.
struct PureStateBound {
    double spectral = 0.0;
    double alpha_transposed = 0.0;
    double alpha_symmetric = 0.0;
    double best = 0.0;
};

PureStateBound pure_state_bound(const OperatorSet& ops, std::size_t grid_points = 201, unsigned jobs = 1);

// rho = X^2 with X = c0 |ground> + sqrt(1 - c0^2) |first excited>, read as d x d matrices.
// Requires a nondegenerate zero ground level; throws DomainError if X is not PSD.
DensityOperator excited_saturating_state(const OperatorSet& ops, double ground_weight);

struct SkewQuantity {
    enum class Kind { WignerYanaseDyson, Generalized, Variance };
    Kind kind = Kind::WignerYanaseDyson;
    double s = 0.5;
    std::vector<MeanOrder> orders;

    static SkewQuantity wyd(double s) { return {Kind::WignerYanaseDyson, s, {}}; }
    static SkewQuantity generalized(std::vector<MeanOrder> orders) { return {Kind::Generalized, 0.5, std::move(orders)}; }
    static SkewQuantity variances() { return {Kind::Variance, 0.5, {}}; }

    double evaluate(const OperatorSet& ops, const DensityOperator& rho, const Tolerances& tol = {}) const;
};

struct EmpiricalOptions {
    std::size_t samples = 5000;
    std::uint64_t seed = 0;
    bool pure_only = false;
    unsigned jobs = 1;
};

struct EmpiricalResult {
    double minimum = 0.0;
    std::size_t argmin = 0;
    // min over samples of (value - bound(rho)) when a per-state bound is supplied.
    double worst_slack = 0.0;
    std::size_t worst_index = 0;
};

using StateBound = std::function<double(const DensityOperator&)>;

// Random states are a deterministic function of (seed, sample index), independent of jobs.
DensityOperator oracle_state(std::size_t dim, const EmpiricalOptions& opt, std::size_t index);

EmpiricalResult empirical_minimum(const OperatorSet& ops, const SkewQuantity& quantity, const EmpiricalOptions& opt,
                                  const StateBound& bound = {}, const Tolerances& tol = {});

struct WitnessResult {
    double lhs = 0.0;
    double threshold = 0.0;
    double threshold_a = 0.0;
    double threshold_b = 0.0;
    bool violated = false;
};

WitnessResult separability_witness(const OperatorSet& ops_a, const OperatorSet& ops_b, const DensityOperator& rho_ab,
                                   std::size_t grid_points = 201, unsigned jobs = 1, const Tolerances& tol = {});

// Runs body(i) for i in [0, n) on up to `jobs` threads.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body);

}  // namespace skewbound
