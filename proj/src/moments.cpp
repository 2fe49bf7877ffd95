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

#include "skewbound/moments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace skewbound {

namespace {

void check_dims(const ComplexMatrix& a, const DensityOperator& rho, const char* where)
{
    if (a.dim() != rho.dim()) {
        fail(ErrorCode::DimensionMismatch, std::string(where) + ": operator dim " + std::to_string(a.dim()) +
                                               ", state dim " + std::to_string(rho.dim()));
    }
}

}  // namespace

HermitianSplit hermitian_split(const ComplexMatrix& a, int sign)
{
    if (sign != 1 && sign != -1) fail(ErrorCode::DomainError, "split sign must be +1 or -1");
    const ComplexMatrix ad = a.adjoint();
    HermitianSplit out;
    out.sign = sign;
    out.a1 = 0.5 * (a + ad);
    out.a2 = cplx(0.0, -0.5 * sign) * (a - ad);
    return out;
}

MeanOrder MeanOrder::finite(double nu)
{
    if (!std::isfinite(nu) || !(nu < 0.0)) fail(ErrorCode::DomainError, "finite mean order must be negative");
    return MeanOrder(Kind::Finite, nu);
}

MeanOrder MeanOrder::parse(std::string_view text)
{
    if (text == "-inf" || text == "-infinity" || text == "minus_infinity") return minus_infinity();
    if (text == "zero") return zero();
    double nu = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), nu);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        fail(ErrorCode::ParseError, "invalid mean order '" + std::string(text) + "'");
    }
    if (nu == 0.0) return zero();
    return finite(nu);
}

std::string MeanOrder::label() const
{
    switch (kind_) {
    case Kind::Zero: return "0";
    case Kind::MinusInfinity: return "-inf";
    case Kind::Finite: break;
    }
    std::ostringstream os;
    os << nu_;
    return os.str();
}

double generalized_mean(double x, double y, const MeanOrder& order)
{
    if (!(x > 0.0) || !(y > 0.0)) fail(ErrorCode::DomainError, "generalized mean needs positive arguments");
    switch (order.kind()) {
    case MeanOrder::Kind::Zero:
        return std::sqrt(x * y);
    case MeanOrder::Kind::MinusInfinity:
        return std::min(x, y);
    case MeanOrder::Kind::Finite:
        break;
    }
    const double nu = order.nu();
    if (x == y) return x;
    if (std::abs(nu) < 1e-6) {
        const double lr = std::log(x) - std::log(y);
        return std::sqrt(x * y) * std::exp(nu * lr * lr / 8.0);
    }
    // Factor out the smaller argument so x^nu cannot overflow for tiny x.
    const double lo = std::min(x, y), hi = std::max(x, y);
    const double t = std::pow(hi / lo, nu);
    return lo * std::pow(0.5 * (1.0 + t), 1.0 / nu);
}

double support_mean(double x, double y, const MeanOrder& order)
{
    if (x <= 0.0 || y <= 0.0) return 0.0;
    return generalized_mean(x, y, order);
}

double clamp_nonnegative(double value, double tol, const char* what)
{
    if (value >= 0.0) return value;
    if (value >= -tol) return 0.0;
    fail(ErrorCode::NegativeRadicand, std::string(what) + " evaluated to " + std::to_string(value));
}

cplx expectation(const ComplexMatrix& a, const DensityOperator& rho)
{
    check_dims(a, rho, "expectation");
    return rho.expectation(a);
}

double variance(const ComplexMatrix& a, const DensityOperator& rho, const Tolerances& tol)
{
    check_dims(a, rho, "variance");
    const ComplexMatrix ad = a.adjoint();
    const double sym = 0.5 * rho.expectation(ad * a + a * ad).real();
    const double mean = std::abs(rho.expectation(a));
    return clamp_nonnegative(sym - mean * mean, tol.residual, "variance");
}

double std_dev(const ComplexMatrix& a, const DensityOperator& rho, const Tolerances& tol)
{
    return std::sqrt(variance(a, rho, tol));
}

double wyd_skew(const ComplexMatrix& a, const DensityOperator& rho, double s, const Tolerances& tol)
{
    check_dims(a, rho, "wyd_skew");
    if (!(s > 0.0 && s < 1.0)) fail(ErrorCode::DomainError, "skew parameter s must lie in (0, 1)");
    const ComplexMatrix rs = matrix_power(rho, s);
    const ComplexMatrix r1s = matrix_power(rho, 1.0 - s);
    const ComplexMatrix x = commutator(rs, a);
    const ComplexMatrix y = commutator(r1s, a);
    return clamp_nonnegative(0.5 * frobenius_inner(x, y).real(), tol.residual, "skew information");
}

double gen_skew(const ComplexMatrix& a, const DensityOperator& rho, const MeanOrder& order, const Tolerances& tol)
{
    check_dims(a, rho, "gen_skew");
    const std::size_t d = rho.dim();
    const ComplexMatrix& v = rho.eigenvectors();
    const ComplexMatrix ap = v.adjoint() * a * v;
    const auto& lam = rho.eigenvalues();
    double total = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const double w = 0.5 * (lam[i] + lam[j]) - support_mean(lam[i], lam[j], order);
            total += w * std::norm(ap(i, j));
        }
    return clamp_nonnegative(total, tol.residual, "generalized skew information");
}

}  // namespace skewbound
