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

#include <Eigen/Dense>
#include <complex>

#include "qcorr/error.hpp"

namespace qcorr {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Matrix4r = Eigen::Matrix4d;
using Vector3r = Eigen::Vector3d;
using Vector4r = Eigen::Vector4d;

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kNegativeEigenvalueTolerance = 1e-9;

/// Eigendecomposition of a Hermitian matrix. Eigenvalues are sorted in
/// descending order and `vectors` holds the matching orthonormal columns.
///
/// Phase convention: the first component of each eigenvector with modulus
/// above 1e-8 is real and positive. Within a degenerate cluster the columns
/// are ordered lexicographically by their components rounded to 12 decimals.
struct HermitianEigen {
  Eigen::VectorXd values;
  ComplexMatrix vectors;
};

/// Largest absolute entry of M - M^dagger.
double hermiticity_defect(const ComplexMatrix& m);

HermitianEigen hermitian_eig(const ComplexMatrix& m,
                             double tol = kHermitianTolerance);

/// M^{-1/2} for Hermitian positive definite M. Throws SingularOperator when an
/// eigenvalue is not above `tol`.
ComplexMatrix inv_sqrt(const ComplexMatrix& m, double tol = 1e-10);

/// Principal square root of a PSD matrix; small negative eigenvalues are
/// clipped to zero.
ComplexMatrix sqrt_psd(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { A, B };

/// Partial trace of an operator on C^{dA} (x) C^{dB}, keeping `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b,
                            Subsystem keep);

/// Pauli matrix sigma_mu, mu = 0..3 (sigma_0 is the identity).
Matrix2c pauli(int mu);

/// Shannon entropy in bits of a probability vector; entries in
/// [-1e-9, 0) are treated as zero.
double shannon_entropy(const Eigen::VectorXd& probabilities);

/// Von Neumann entropy in bits.
double von_neumann_entropy(const ComplexMatrix& rho);

/// H(x) = -x log2 x - (1-x) log2 (1-x).
double binary_entropy(double x);

/// Entropy of a qubit state whose Bloch vector has length `r`:
/// H((1 + r) / 2), with r clamped into [0, 1].
double qubit_entropy(double bloch_norm);

}  // namespace qcorr
