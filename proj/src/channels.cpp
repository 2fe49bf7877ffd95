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

#include "skewbound/channels.hpp"

#include <iomanip>
#include <sstream>

#include <cmath>

namespace skewbound {

namespace {

void check_probability(double p)
{
    if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::DomainError, "damping parameter must lie in [0, 1]");
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus, std::string label, const Tolerances& tol)
    : kraus_(std::move(kraus)), label_(std::move(label))
{
    if (kraus_.empty()) fail(ErrorCode::IncompleteChannel, "channel has no Kraus operators");
    const std::size_t d = kraus_.front().dim();
    ComplexMatrix sum(d);
    for (const auto& k : kraus_) {
        require_same_dim(kraus_.front(), k, "Kraus operators");
        sum += k.adjoint() * k;
    }
    const double err = max_abs_diff(sum, ComplexMatrix::identity(d));
    if (err > tol.herm) {
        std::ostringstream os;
        os << "sum K^dagger K deviates from identity by " << std::setprecision(3) << err;
        if (!label_.empty()) os << " in " << label_;
        fail(ErrorCode::IncompleteChannel, os.str());
    }
}

KrausChannel KrausChannel::luders(std::vector<ComplexMatrix> projectors, std::string label, const Tolerances& tol)
{
    if (projectors.empty()) fail(ErrorCode::IncompleteChannel, "no projectors given");
    const std::size_t d = projectors.front().dim();
    ComplexMatrix rest = ComplexMatrix::identity(d);
    for (const auto& p : projectors) {
        require_same_dim(projectors.front(), p, "projectors");
        if (!is_hermitian(p, tol.herm) || max_abs_diff(p * p, p) > tol.herm) {
            fail(ErrorCode::IncompleteChannel, "Lueders channel needs orthogonal projectors");
        }
        rest -= p;
    }
    if (max_abs(rest) > tol.herm) projectors.push_back(std::move(rest));
    return KrausChannel(std::move(projectors), std::move(label), tol);
}

KrausChannel KrausChannel::phase_damping(double p)
{
    check_probability(p);
    const double q = std::sqrt(1.0 - p), r = std::sqrt(p);
    return KrausChannel({ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, q}}), ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, r}})},
                        "phase_damping");
}

KrausChannel KrausChannel::amplitude_damping(double p)
{
    check_probability(p);
    const double q = std::sqrt(1.0 - p), r = std::sqrt(p);
    return KrausChannel({ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, q}}), ComplexMatrix::from_rows({{0.0, r}, {0.0, 0.0}})},
                        "amplitude_damping");
}

ComplexMatrix KrausChannel::apply(const ComplexMatrix& rho) const
{
    require_same_dim(kraus_.front(), rho, "channel input");
    ComplexMatrix out(dim());
    for (const auto& k : kraus_) out += k * rho * k.adjoint();
    return out;
}

double channel_skew(const KrausChannel& ch, const DensityOperator& rho, const Tolerances& tol)
{
    if (ch.dim() != rho.dim()) fail(ErrorCode::DimensionMismatch, "channel and state dimensions differ");
    double t = 0.0;
    for (const auto& k : ch.kraus()) t += wyd_skew(k, rho, 0.5, tol);
    return t;
}

OperatorSet pooled_operators(const std::vector<KrausChannel>& chs)
{
    if (chs.empty()) fail(ErrorCode::DomainError, "no channels given");
    OperatorSet ops;
    for (const auto& ch : chs) {
        if (ch.dim() != chs.front().dim()) fail(ErrorCode::DimensionMismatch, "channels act on different dimensions");
        for (std::size_t i = 0; i < ch.kraus().size(); ++i) {
            ops.add(ch.kraus()[i], (ch.label().empty() ? "K" : ch.label()) + "[" + std::to_string(i + 1) + "]");
        }
    }
    return ops;
}

SpectralBound channel_bound(const std::vector<KrausChannel>& chs, const DensityOperator& rho, const Tolerances& tol)
{
    return bound_wy(pooled_operators(chs), rho, tol);
}

}  // namespace skewbound
