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

namespace skewbound {

struct Tolerances {
    double herm = 1e-10;
    double trace = 1e-10;
    double psd = 1e-10;
    double recon = 1e-9;
    double residual = 1e-8;

    // Throws DomainError if any field is negative or not finite.
    void validate() const;
};

// Overlaps below this are treated as zero by weak-value code.
inline constexpr double kTolOverlap = 1e-12;

}  // namespace skewbound
