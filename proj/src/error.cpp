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

#include "skewbound/error.hpp"

#include <cmath>

#include "skewbound/tolerances.hpp"

namespace skewbound {

const char* error_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::ZeroDeviation: return "ZeroDeviation";
    case ErrorCode::ZeroSkew: return "ZeroSkew";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::NoFeasibleChi: return "NoFeasibleChi";
    case ErrorCode::IncompleteChannel: return "IncompleteChannel";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::OrthogonalSelection: return "OrthogonalSelection";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code)
{
}

void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

void Tolerances::validate() const
{
    for (double v : {herm, trace, psd, recon, residual}) {
        if (!std::isfinite(v) || v < 0.0) fail(ErrorCode::DomainError, "tolerances must be finite and nonnegative");
    }
}

}  // namespace skewbound
