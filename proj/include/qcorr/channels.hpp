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

#include <span>

#include "qcorr/states.hpp"

namespace qcorr {

/// Superoperator of a one-qubit map acting on row-major vectorized operators
/// (x00, x01, x10, x11). Complete positivity is not enforced, so filters
/// F (x) F* are representable too.
struct Superoperator {
  Matrix4c matrix = Matrix4c::Identity();

  /// sum_i K_i (x) K_i^*
  static Superoperator from_kraus(std::span<const Matrix2c> kraus);

  /// Tr(Phi[X]) == Tr(X) for all X, within `tol`.
  bool trace_preserving(double tol = 1e-9) const;

  Matrix2c apply(const Matrix2c& x) const;
};

/// Real 4x4 action of a map on Pauli coordinates x_mu = Tr(X sigma_mu).
struct BlochChannel {
  Matrix4r matrix = Matrix4r::Identity();

  bool trace_preserving(double tol = 1e-9) const;
};

/// Basis change from vectorized operators to Pauli coordinates:
/// x = sqrt(2) * upsilon() * vec(X).
Matrix4c upsilon();

/// Minkowski metric diag(1, -1, -1, -1).
Matrix4r minkowski();

/// Bloch-basis matrix of the Bell projector, diag(1, 1, -1, 1).
Matrix4r bell_r_matrix();

/// X^R with (X^R)_{(ij),(i'j')} = X_{(ii'),(jj')}; an involution.
Matrix4c reshuffle(const Matrix4c& x);

/// L = Upsilon Phi Upsilon^dagger. Throws NotPauliReal when the imaginary
/// residue exceeds 1e-8.
BlochChannel bloch_rep(const Superoperator& phi);

/// Inverse of bloch_rep.
Superoperator superoperator_from_bloch(const BlochChannel& l);

/// Channel Lambda on qubit B with (id (x) Lambda)[P+] equal to the
/// A-normalized state (2 rho_A)^{-1/2} rho (2 rho_A)^{-1/2}. Returned in Bloch
/// form L = R~^T R+^T. Throws SingularOperator when rho_A is not invertible.
BlochChannel channel_from_state(const TwoQubitState& rho);

/// (2 rho_A)^{-1/2} rho (2 rho_A)^{-1/2}; its A marginal is I/2.
Matrix4c a_normalized_state(const TwoQubitState& rho);

/// R' = L_A R L_B^T.
RMatrix apply_local_channels(const RMatrix& r, const BlochChannel& la,
                             const BlochChannel& lb);

/// (id (x) Phi)[X] evaluated block by block on a 4x4 operator.
Matrix4c apply_on_b(const Superoperator& phi, const Matrix4c& x);

/// Bloch form of the local filter X -> F X F^dagger, L_F = Upsilon(F (x) F*)
/// Upsilon^dagger. F must be nonsingular with F^dagger F <= I.
BlochChannel filter_bloch(const Matrix2c& f);

/// Rotation-invariant data of a Bloch channel [[1, 0], [kappa, Xi]]:
/// singular values of Xi (descending) and |kappa|.
struct ChannelInvariants {
  Vector3r singular_values;
  double translation_norm = 0.0;
};

ChannelInvariants canonical_invariants(const BlochChannel& l);

}  // namespace qcorr
