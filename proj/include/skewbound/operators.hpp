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
#include <string>
#include <vector>

#include "skewbound/moments.hpp"

namespace skewbound {

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// (n . sigma) / 2 for a real 3-vector n.
ComplexMatrix spin_half_along(const std::array<double, 3>& n);

// {S_x, S_y, S_z} for spin j = twice_j / 2, basis m = j, j-1, ..., -j.
std::array<ComplexMatrix, 3> spin_matrices(unsigned twice_j);

// Operators with their Hermitian splits. All operators share one dimension.
class OperatorSet {
public:
    OperatorSet() = default;
    explicit OperatorSet(std::vector<ComplexMatrix> ops, std::vector<std::string> labels = {}, int sign = 1);

    void add(ComplexMatrix op, std::string label = {});

    std::size_t size() const noexcept { return ops_.size(); }
    bool empty() const noexcept { return ops_.empty(); }
    std::size_t dim() const noexcept { return ops_.empty() ? 0 : ops_.front().dim(); }
    int sign() const noexcept { return sign_; }

    const ComplexMatrix& op(std::size_t k) const { return ops_.at(k); }
    const std::string& label(std::size_t k) const { return labels_.at(k); }
    const HermitianSplit& split(std::size_t k) const { return splits_.at(k); }
    const std::vector<ComplexMatrix>& operators() const noexcept { return ops_; }

    // a1, a2 of every operator in order (2 * size() entries).
    std::vector<ComplexMatrix> hermitian_parts() const;

    static OperatorSet spin(unsigned twice_j);

private:
    std::vector<ComplexMatrix> ops_;
    std::vector<std::string> labels_;
    std::vector<HermitianSplit> splits_;
    int sign_ = 1;
};

}  // namespace skewbound
