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

// Frozen reference values. [DERIVED] entries come from tests/oracle/derive_golden.py
// (numpy, no shared code with the library); [ROUNDED] entries are the rounded figures quoted in the literature.
#pragma once

namespace golden {

// Four 3x3 observables, pure states.
inline constexpr double kQutritEpsilon1 = 2.323391113035;         // [DERIVED]
inline constexpr double kQutritPureBound = 1.548927408690;        // [DERIVED]
inline constexpr double kQutritAlphaTransposed = 1.291491374635;    // [DERIVED] 201-point grid
inline constexpr double kQutritAlphaSymmetric = 1.399317030105;   // [DERIVED] 201-point grid
inline constexpr double kQutritRoundedEpsilon1 = 2.32339;         // [ROUNDED]
inline constexpr double kQutritRoundedBound = 1.5489;             // [ROUNDED]
inline constexpr double kQutritRoundedCompetitor = 1.3993;        // [ROUNDED]

// Four qubit observables, rho = diag(0.3, 0.7).
inline constexpr double kQubitEpsilon1 = 4.602189988217;          // [DERIVED]
inline constexpr double kQubitSpectralBound = 0.192106595751;     // [DERIVED]
inline constexpr double kQubitSymmetricL = 2.197245374914;        // [DERIVED] 201-point grid
inline constexpr double kQubitSpectralPure = 2.301094994108;      // [DERIVED]
inline constexpr double kQubitRoundedSpectralBound = 0.1921;      // [ROUNDED]
inline constexpr double kQubitRoundedOrderBounds[4] = {0.1834, 0.3515, 0.4835, 0.8788};  // [ROUNDED] nu = 0, -1, -2, -inf
inline constexpr double kQubitOrderBounds[4] = {0.183436724727, 0.351559259986, 0.483568838513,
                                                0.878898149966};  // [DERIVED]
inline constexpr double kQubitOrderSums[4] = {0.229583367774, 0.44, 0.605218844055, 1.1};  // [DERIVED]

inline constexpr double kWySigmaX = 0.083484861008832;            // [DERIVED] 1 - 2 sqrt(0.21)
inline constexpr double kFisherQuarterSigmaX = 0.16;              // [DERIVED]
inline constexpr double kEmbedNormS03 = 1.292937750277501;        // [DERIVED] Tr rho^0.6
inline constexpr double kEmbedNorm1mS03 = 0.792268370237010;      // [DERIVED] Tr rho^1.4
inline constexpr double kTwoDirectionsAngle07 = 0.058789453178878;  // [DERIVED] (1 - cos 0.7) / 4

}  // namespace golden
