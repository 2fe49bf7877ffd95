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
#include <vector>

#include "skewbound/bounds.hpp"

namespace skewbound {

// Kraus representation of a channel; completeness is checked on construction.
class KrausChannel {
public:
    KrausChannel(std::vector<ComplexMatrix> kraus, std::string label = {}, const Tolerances& tol = {});

    // Projective measurement; adds I - sum(P) when the projectors do not resolve the identity.
    static KrausChannel luders(std::vector<ComplexMatrix> projectors, std::string label = {},
                               const Tolerances& tol = {});

    static KrausChannel phase_damping(double p);
    static KrausChannel amplitude_damping(double p);

    std::size_t dim() const noexcept { return kraus_.front().dim(); }
    const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }
    const std::string& label() const noexcept { return label_; }

    ComplexMatrix apply(const ComplexMatrix& rho) const;

private:
    std::vector<ComplexMatrix> kraus_;
    std::string label_;
};

// sum_i I(K_i) at s = 1/2.
double channel_skew(const KrausChannel& ch, const DensityOperator& rho, const Tolerances& tol = {});

OperatorSet pooled_operators(const std::vector<KrausChannel>& chs);

SpectralBound channel_bound(const std::vector<KrausChannel>& chs, const DensityOperator& rho,
                            const Tolerances& tol = {});

}  // namespace skewbound
