// Copyright 2026 The qcorr Authors
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

#include "qcorr/discord.hpp"

namespace qcorr::worked_example {

// Rank-three X state: diagonal (0.7, 0, 0.15, 0.15), real corner coherence.
inline constexpr double kCoherence = 0.2795;

// Published six-digit targets for the state above.
inline constexpr double kProjectiveMae = 0.295127;
inline constexpr double kPovm3Mae = 0.291942;
inline constexpr double kPovm3Ceiling = 0.29195;

// Published three-element measurement. The listed "probabilities" are half
// the element traces, so weight a_k = 2 p_k.
inline constexpr std::array<std::array<double, 3>, 3> kDirections{{
    {0.929301, 0.0, -0.369322},
    {-0.929301, 0.0, -0.369322},
    {0.0, 0.0, 1.0},
}};
inline constexpr std::array<double, 3> kProbabilities{0.365144, 0.365144, 0.269712};

/// The published POVM with directions renormalized to unit length.
Povm published_povm();

/// Coherence in [lo, hi] at which the projective MAE equals `target`
/// (bisection to 1e-12; the MAE decreases with the coherence there).
double coherence_for_projective_mae(double target, double lo = 0.278,
                                    double hi = 0.281);

}  // namespace qcorr::worked_example
