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
#include <string_view>
#include <utility>

#include "qcorr/channels.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

enum class ConcurrenceMethod {
  Wootters,
  Pencil,
  AnalyticCaseI,
  AnalyticCaseII,
  AnalyticComplex,
};

std::string_view to_string(ConcurrenceMethod m);

struct ConcurrenceResult {
  double value = 0.0;
  ConcurrenceMethod method = ConcurrenceMethod::Wootters;
};

/// Generalized eigenvalues of the quadratic-form pencil (descending) and the
/// two forms evaluated on the complement state.
struct PencilData {
  std::array<double, 4> eigenvalues{};
  double max_imaginary = 0.0;
  double q1_value = 0.0;
  double q2_value = 0.0;
};

/// Spin-flip concurrence of a two-qubit density matrix.
ConcurrenceResult wootters_concurrence(const ComplexMatrix& rho);

/// E = H((1 + sqrt(1 - C^2)) / 2).
double eof_from_concurrence(double concurrence);

/// Orthonormal pair spanning the range of a rank-2 complement state. The
/// generalized Pauli operators are built on it:
///   s0 = |0><0| + |1><1|, s1 = |0><1| + |1><0|,
///   s2 = -i|0><1| + i|1><0|, s3 = |0><0| - |1><1|.
struct PauliFrame {
  ComplexVector phi0;
  ComplexVector phi1;
};

/// Frame matched to channel_from_state(rho): phi_i = sqrt(2) <i_A|(F (x) I)|Psi>
/// with F = (2 rho_A)^{-1/2}.
PauliFrame aligned_frame(const TripartitePure& psi, const Matrix2c& rho_a);

/// x_mu = Tr(rho_bc s_mu).
Vector4r generalized_pauli_coordinates(const ComplexMatrix& rho_bc,
                                       const PauliFrame& frame);

/// Concurrence of a rank <= 2 state on C^2 (x) C^r from the pencil
/// Q1 - w Q2 with Q1 = L^T eta L, Q2 = eta / 2: Con = sqrt(Q1(X) - w2 Q2(X)).
///
/// Without a frame, x is taken in the eigenbasis of rho_bc and Q1(X) is
/// evaluated directly as 2[(Tr X)^2 - Tr (Tr_C X)^2]. With an aligned frame,
/// Q1(X) = x^T L^T eta L x.
///
/// Throws RankTooHigh when rho_bc has more than two eigenvalues above 1e-10
/// and ComplexPencilEigenvalue when an eigenvalue has an imaginary part above
/// 1e-8 (relative to max(1, |w|max)).
std::pair<ConcurrenceResult, PencilData> pencil_concurrence(
    const ComplexMatrix& rho_bc, const BlochChannel& l);
std::pair<ConcurrenceResult, PencilData> pencil_concurrence(
    const ComplexMatrix& rho_bc, const BlochChannel& l, const PauliFrame& frame);

/// Pencil concurrence of the eigen-ensemble complement of rho.
std::pair<ConcurrenceResult, PencilData> complement_concurrence(
    const TwoQubitState& rho);

/// Closed form for the complement of a rank-2 state in Walgate form.
ConcurrenceResult rank2_concurrence_complex(const Rank2Params& p);

enum class Rank2Case { I, II };

/// Real-amplitude closed forms. Case I holds when
/// c^2 (a0 b1 - a1 b0)^2 >= 4 a0 a1 b0 b1 d^2.
std::pair<Rank2Case, ConcurrenceResult> rank2_concurrence_cases(
    const Rank2Params& p);

/// H(1/2 + sqrt(1 - Con^2) / 2), a lower bound on the entanglement of
/// formation of a rank-2 state on C^2 (x) C^r.
double eof_lower_bound(const ConcurrenceResult& con);

}  // namespace qcorr
