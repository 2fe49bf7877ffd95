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
#include <string>
#include <vector>

#include "skewbound/tolerances.hpp"

namespace skewbound {

// Worst residual of one identity over a random sweep.
struct SweepCheck {
    std::string name;
    double max_residual = 0.0;
    std::size_t instances = 0;
    std::size_t skipped = 0;  // instances rejected by a precondition (zero deviation etc.)
    std::size_t worst_instance = 0;
    std::string worst_detail;
};

struct SweepResult {
    std::string suite;
    std::vector<SweepCheck> checks;

    double max_residual() const noexcept;
};

// Instance i draws from Rng::stream(seed, i); dims 2-5, ranks 1-d, s cycling {1/4, 1/2, 3/4}.
SweepResult sweep_equalities(std::size_t instances, std::uint64_t seed, const Tolerances& tol = {});
// Random qubit states (both ranks), orthonormal triples and mean orders.
SweepResult sweep_qubit(std::size_t instances, std::uint64_t seed, const Tolerances& tol = {});
// Full-rank states, dims 2-4, random Hermitian A and random postselection bases.
SweepResult sweep_weakvalue(std::size_t instances, std::uint64_t seed, const Tolerances& tol = {});

}  // namespace skewbound
