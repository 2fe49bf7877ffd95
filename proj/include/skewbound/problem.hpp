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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewbound/channels.hpp"

namespace skewbound {

struct ProblemParams {
    double s = 0.5;
    std::vector<MeanOrder> nu{MeanOrder::zero()};
    std::size_t grid_points = 201;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    Tolerances tol;
};

// Parsed and validated problem file.
//
//   {"version": 1,
//    "rho": {"matrix": [[[re, im], ...], ...]} | {"bloch": [x, y, z]} | {"diagonal": [...]} | {"pure": [...]},
//    "operators": {"name": matrix, ...},
//    "operators_b": {...},                      (witness only)
//    "channels": {"name": [matrix, ...], ...},
//    "params": {"s", "nu", "grid_points", "samples", "seed", "tolerances"}}
//
// Complex entries are [re, im] pairs; plain numbers are read as real.
struct Problem {
    int version = 1;
    std::string description;
    std::optional<DensityOperator> rho;
    OperatorSet operators;
    OperatorSet operators_b;
    std::vector<KrausChannel> channels;
    ProblemParams params;
};

inline constexpr int kProblemVersion = 1;

// Structural problems throw ParseError; invalid physics (trace, hermiticity, completeness)
// throws the matching library error. SKEWBOUND_TOL, when set, overrides tol.residual.
Problem parse_problem(std::string_view text, const std::string& origin = "<input>");
Problem load_problem(const std::string& path);

// Applies SKEWBOUND_TOL if present; throws ParseError on a malformed value.
void apply_env_tolerance(Tolerances& tol);

}  // namespace skewbound
