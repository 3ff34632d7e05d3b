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

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "qcorr/states.hpp"

namespace qcorr {

using Rng = std::mt19937_64;

enum class Sampler { XState, General, Rank2 };

std::string_view to_string(Sampler s);
std::optional<Sampler> parse_sampler(std::string_view name);

/// Dirichlet(1,1,1,1) diagonal. With probability 1/2 one diagonal entry and
/// its corner partner are zeroed (rank 3). Each surviving corner coherence
/// has modulus uniform in [0, sqrt(rho_ii rho_jj)) and a uniform phase.
TwoQubitState random_x_state(Rng& rng);

/// G G^dagger / Tr(G G^dagger) with G a 4 x k standard complex normal matrix.
TwoQubitState random_wishart_state(Rng& rng, int k);
TwoQubitState random_general_state(Rng& rng);
TwoQubitState random_rank2_state(Rng& rng);

TwoQubitState sample_state(Sampler s, Rng& rng);

/// Real parameters with nonnegative amplitudes: every pair is
/// (cos t, sin t) with t uniform in (0, pi/2).
Rank2Params random_rank2_params_real(Rng& rng);
/// Complex parameters: moduli as above with uniform phases.
Rank2Params random_rank2_params_complex(Rng& rng);

/// q uniform in (0,1), alpha and beta uniform in (0, pi/2].
SeparableRank2Params random_separable_params(Rng& rng);

/// Haar-random 2 x 2 unitary.
Matrix2c random_unitary(Rng& rng);

/// Invertible filter with largest singular value in [0.3, 1] and condition
/// number at most 20.
Matrix2c random_filter(Rng& rng);

}  // namespace qcorr
