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

#include <string>
#include <string_view>

#include "skewbound/density.hpp"

namespace skewbound {

// A = a1 + sign * i * a2 with a1, a2 Hermitian.
struct HermitianSplit {
    ComplexMatrix a1;
    ComplexMatrix a2;
    int sign = 1;
};

HermitianSplit hermitian_split(const ComplexMatrix& a, int sign = 1);

// Order of the power mean m_nu(x, y) = ((x^nu + y^nu)/2)^(1/nu).
class MeanOrder {
public:
    enum class Kind { Finite, Zero, MinusInfinity };

    static MeanOrder zero() noexcept { return MeanOrder(Kind::Zero, 0.0); }
    static MeanOrder minus_infinity() noexcept { return MeanOrder(Kind::MinusInfinity, 0.0); }
    // nu must be strictly negative and finite.
    static MeanOrder finite(double nu);
    // Accepts "0", "-inf", or a negative number.
    static MeanOrder parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    double nu() const noexcept { return nu_; }
    std::string label() const;

    friend bool operator==(const MeanOrder&, const MeanOrder&) = default;

private:
    MeanOrder(Kind k, double nu) : kind_(k), nu_(nu) {}
    Kind kind_;
    double nu_;
};

double generalized_mean(double x, double y, const MeanOrder& order);

// Same as generalized_mean, but a zero argument yields 0.
double support_mean(double x, double y, const MeanOrder& order);

cplx expectation(const ComplexMatrix& a, const DensityOperator& rho);

// <Delta A>^2 = Tr[rho (A^dagger A + A A^dagger)/2] - |Tr A rho|^2.
double variance(const ComplexMatrix& a, const DensityOperator& rho, const Tolerances& tol = {});
double std_dev(const ComplexMatrix& a, const DensityOperator& rho, const Tolerances& tol = {});

// I^s = 1/2 Tr([rho^s, A]^dagger [rho^(1-s), A]), 0 < s < 1.
double wyd_skew(const ComplexMatrix& a, const DensityOperator& rho, double s, const Tolerances& tol = {});

double gen_skew(const ComplexMatrix& a, const DensityOperator& rho, const MeanOrder& order, const Tolerances& tol = {});

// Maps values in [-tol, 0) to 0; throws NegativeRadicand below -tol.
double clamp_nonnegative(double value, double tol, const char* what);

}  // namespace skewbound
