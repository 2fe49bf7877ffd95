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

#include "skewbound/operators.hpp"

#include <cmath>

namespace skewbound {

ComplexMatrix pauli_x()
{
    return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
}

ComplexMatrix pauli_y()
{
    return ComplexMatrix::from_rows({{0.0, -kI}, {kI, 0.0}});
}

ComplexMatrix pauli_z()
{
    return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
}

ComplexMatrix spin_half_along(const std::array<double, 3>& n)
{
    return 0.5 * (n[0] * pauli_x() + n[1] * pauli_y() + n[2] * pauli_z());
}

std::array<ComplexMatrix, 3> spin_matrices(unsigned twice_j)
{
    if (twice_j == 0) fail(ErrorCode::DomainError, "spin must be positive");
    const std::size_t d = twice_j + 1;
    const double j = 0.5 * twice_j;
    ComplexMatrix jp(d), sz(d);
    for (std::size_t k = 0; k < d; ++k) {
        const double m = j - static_cast<double>(k);
        sz(k, k) = m;
        if (k > 0) jp(k - 1, k) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    }
    const ComplexMatrix jm = jp.adjoint();
    return {0.5 * (jp + jm), cplx(0.0, -0.5) * (jp - jm), sz};
}

OperatorSet::OperatorSet(std::vector<ComplexMatrix> ops, std::vector<std::string> labels, int sign) : sign_(sign)
{
    if (sign != 1 && sign != -1) fail(ErrorCode::DomainError, "split sign must be +1 or -1");
    if (!labels.empty() && labels.size() != ops.size()) fail(ErrorCode::DimensionMismatch, "one label per operator");
    for (std::size_t k = 0; k < ops.size(); ++k) add(std::move(ops[k]), labels.empty() ? std::string() : labels[k]);
}

void OperatorSet::add(ComplexMatrix op, std::string label)
{
    if (op.empty()) fail(ErrorCode::DimensionMismatch, "operator must have positive dimension");
    if (!ops_.empty() && op.dim() != dim()) {
        fail(ErrorCode::DimensionMismatch, "operator set mixes dimensions " + std::to_string(dim()) + " and " +
                                               std::to_string(op.dim()));
    }
    if (label.empty()) label = "A" + std::to_string(ops_.size() + 1);
    splits_.push_back(hermitian_split(op, sign_));
    ops_.push_back(std::move(op));
    labels_.push_back(std::move(label));
}

std::vector<ComplexMatrix> OperatorSet::hermitian_parts() const
{
    std::vector<ComplexMatrix> parts;
    parts.reserve(2 * splits_.size());
    for (const auto& s : splits_) {
        parts.push_back(s.a1);
        parts.push_back(s.a2);
    }
    return parts;
}

OperatorSet OperatorSet::spin(unsigned twice_j)
{
    auto s = spin_matrices(twice_j);
    return OperatorSet({s[0], s[1], s[2]}, {"Sx", "Sy", "Sz"});
}

}  // namespace skewbound
