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
#include <random>
#include <span>
#include <vector>

#include "skewbound/linalg.hpp"

namespace skewbound {

// Validated density operator with its spectral decomposition cached.
class DensityOperator {
public:
    // Throws NotHermitian or InvalidState.
    static DensityOperator from_matrix(ComplexMatrix m, const Tolerances& tol = {});
    // |psi><psi| / <psi|psi>.
    static DensityOperator pure(std::span<const cplx> psi, const Tolerances& tol = {});
    static DensityOperator maximally_mixed(std::size_t dim);

    std::size_t dim() const noexcept { return matrix_.dim(); }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    // Ascending, clamped to [0,1]; values below tol_psd are exactly 0.
    const std::vector<double>& eigenvalues() const noexcept { return values_; }
    const ComplexMatrix& eigenvectors() const noexcept { return vectors_; }
    ComplexVector eigenvector(std::size_t i) const { return vectors_.column(i); }

    std::size_t rank() const noexcept;
    double purity() const noexcept;
    // Tr rho^p over the support.
    double trace_power(double p) const noexcept;

    cplx expectation(const ComplexMatrix& a) const;

private:
    DensityOperator() = default;
    ComplexMatrix matrix_;
    std::vector<double> values_;
    ComplexMatrix vectors_;
};

// sum_i lambda_i^s |lambda_i><lambda_i|, 0^s = 0. Throws DomainError unless 0 < s <= 1.
ComplexMatrix matrix_power(const DensityOperator& rho, double s);

// Deterministic generator used by every sampler.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    // Seed derived from (seed, stream) so parallel workers draw independent sequences.
    static Rng stream(std::uint64_t seed, std::uint64_t index);

    double normal() { return normal_(engine_); }
    double uniform() { return uniform_(engine_); }
    std::uint64_t below(std::uint64_t n);
    cplx complex_normal();

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

// Hilbert-Schmidt state of the given rank: G G^dagger / Tr(G G^dagger), G Ginibre dim x rank.
DensityOperator random_density(std::size_t dim, std::size_t rank, std::uint64_t seed);
DensityOperator random_density(std::size_t dim, std::size_t rank, Rng& rng);
ComplexVector random_pure_vector(std::size_t dim, Rng& rng);
ComplexMatrix random_matrix(std::size_t dim, Rng& rng);
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);
// Haar-distributed unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

}  // namespace skewbound
