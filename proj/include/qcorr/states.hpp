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

#include <optional>

#include "qcorr/qmat.hpp"

namespace qcorr {

inline constexpr double kStateTolerance = 1e-10;
inline constexpr double kRankTolerance = 1e-10;

/// A validated two-qubit density matrix in the basis |00>,|01>,|10>,|11>,
/// qubit A being the left tensor factor.
class TwoQubitState {
 public:
  /// Checks Hermiticity and unit trace to `tol` and eigenvalues >= -1e-9.
  /// Throws NotHermitian / NotUnitTrace / NotPSD.
  static TwoQubitState validate(const ComplexMatrix& m,
                                double tol = kStateTolerance);

  const Matrix4c& matrix() const noexcept { return matrix_; }
  const HermitianEigen& eigen() const noexcept { return eigen_; }

  /// Number of eigenvalues above `rank_tol`.
  int rank(double rank_tol = kRankTolerance) const;

  Matrix2c reduced_a() const;
  Matrix2c reduced_b() const;
  Vector3r bloch_a() const;
  Vector3r bloch_b() const;

 private:
  TwoQubitState(const Matrix4c& m, HermitianEigen eig)
      : matrix_(m), eigen_(std::move(eig)) {}

  Matrix4c matrix_;
  HermitianEigen eigen_;
};

/// Pauli-basis coordinates R_{mu nu} = Tr(rho sigma_mu (x) sigma_nu).
struct RMatrix {
  Matrix4r values = Matrix4r::Zero();
};

RMatrix r_matrix(const TwoQubitState& rho);
/// Also accepts unnormalized operators (e.g. filtered states).
RMatrix r_matrix(const ComplexMatrix& op);

/// rho = 1/4 sum R_{mu nu} sigma_mu (x) sigma_nu. The result is not validated.
Matrix4c from_r_matrix(const RMatrix& r);

Vector3r bloch_vector(const Matrix2c& rho);
Matrix2c qubit_from_bloch(const Vector3r& r);

/// rho = lambda0 |psi0><psi0| + lambda1 |psi1><psi1| with
///   |psi0> = a0 |00> + b0 |eta>|1>,   |psi1> = a1 |10> + b1 |eta_perp>|1>,
///   |eta> = c|0> + d|1>,              |eta_perp> = -d*|0> + c*|1>.
struct Rank2Params {
  double lambda0 = 0.5;
  double lambda1 = 0.5;
  Complex a0{1.0}, b0{0.0}, a1{1.0}, b1{0.0}, c{1.0}, d{0.0};

  static Rank2Params real(double lambda0, double a0, double b0, double a1,
                          double b1, double c, double d);

  /// Throws Validation when the normalization constraints fail by more
  /// than `tol`.
  void validate(double tol = 1e-10) const;
  bool is_real(double tol = 1e-12) const;

  ComplexVector psi0() const;
  ComplexVector psi1() const;
};

/// rho = q |00><00| + (1-q) |psi><psi| (x) |phi><phi| with
/// |psi> = cos(alpha)|0> + sin(alpha)|1>, |phi> = cos(beta)|0> + sin(beta)|1>.
struct SeparableRank2Params {
  double q = 0.5;
  double alpha = 0.0;
  double beta = 0.0;

  void validate() const;
};

TwoQubitState build_rank2(const Rank2Params& p);
TwoQubitState build_separable_rank2(const SeparableRank2Params& p);

/// Pure state on A (x) B (x) C with a C-dimension of `ancilla_dim`;
/// amplitude index is (2a + b) * ancilla_dim + c.
struct TripartitePure {
  ComplexVector amplitudes;
  int ancilla_dim = 1;
};

/// Eigen-ensemble purification sum_i sqrt(lambda_i)|psi_i>|i_C>, eigenvalues
/// in descending order. The ancilla dimension is max(rank, min_ancilla_dim);
/// padding columns carry zero weight.
TripartitePure purify(const TwoQubitState& rho,
                      double rank_tol = kRankTolerance,
                      int min_ancilla_dim = 1);

/// sqrt(lambda0)|psi0>|0> + sqrt(lambda1)|psi1>|1> from the parameters.
TripartitePure purify_rank2(const Rank2Params& p);

/// Tr_C |Psi><Psi|, a 4x4 matrix on AB.
Matrix4c reduce_to_ab(const TripartitePure& psi);

/// rho^{BC} = Tr_A |Psi><Psi|, a 2r x 2r matrix on B (x) C.
ComplexMatrix complement_state(const TripartitePure& psi);

/// The rank-three X state used as the worked example: diagonal
/// (0.7, 0, 0.15, 0.15) with real corner coherence `coherence`.
TwoQubitState rank3_x_example(double coherence = 0.2795);

}  // namespace qcorr
