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

#include "qcorr/entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace qcorr {

namespace {

constexpr double kRadicandTolerance = 1e-9;
constexpr double kPencilImagTolerance = 1e-8;
constexpr double kClusterTolerance = 1e-7;

double clipped_sqrt(double radicand) {
  return std::sqrt(std::max(radicand, 0.0));
}

double clip_unit(double v) { return std::clamp(v, 0.0, 1.0); }

Matrix4c spin_flip() {
  Matrix4c yy = Matrix4c::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  return yy;
}

}  // namespace

std::string_view to_string(ConcurrenceMethod m) {
  switch (m) {
    case ConcurrenceMethod::Wootters: return "wootters";
    case ConcurrenceMethod::Pencil: return "pencil";
    case ConcurrenceMethod::AnalyticCaseI: return "analytic_case_i";
    case ConcurrenceMethod::AnalyticCaseII: return "analytic_case_ii";
    case ConcurrenceMethod::AnalyticComplex: return "analytic_complex";
  }
  return "unknown";
}

ConcurrenceResult wootters_concurrence(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw Error(ErrorKind::Validation, "Wootters concurrence needs a 4x4 matrix");
  }
  const HermitianEigen eig = hermitian_eig(rho);
  if (eig.values.minCoeff() < -kNegativeEigenvalueTolerance) {
    throw Error(ErrorKind::NotPsd, "density matrix has a negative eigenvalue",
                eig.values.minCoeff());
  }
  // Singular values of tau_ij = w_i^T (sy (x) sy) w_j with w_i = sqrt(l_i) u_i
  // are the square roots of the spectrum of rho * rho~. Working with tau
  // keeps rank-deficient inputs accurate.
  Matrix4c w;
  for (int i = 0; i < 4; ++i) {
    w.col(i) = std::sqrt(std::max(eig.values(i), 0.0)) * eig.vectors.col(i);
  }
  const Matrix4c tau = w.transpose() * spin_flip() * w;
  Eigen::JacobiSVD<Matrix4c> svd(tau);
  const Eigen::Vector4d s = svd.singularValues();
  const double c = s(0) - s(1) - s(2) - s(3);
  return ConcurrenceResult{clip_unit(c), ConcurrenceMethod::Wootters};
}

double eof_from_concurrence(double concurrence) {
  if (!(concurrence >= 0.0 && concurrence <= 1.0)) {
    throw Error(ErrorKind::Validation, "concurrence outside [0,1]", concurrence);
  }
  const double root = std::sqrt(std::max(0.0, 1.0 - concurrence * concurrence));
  return binary_entropy(std::clamp(0.5 * (1.0 + root), 0.0, 1.0));
}

PauliFrame aligned_frame(const TripartitePure& psi, const Matrix2c& rho_a) {
  const int r = psi.ancilla_dim;
  const Matrix2c f = inv_sqrt(2.0 * rho_a, 2.0 * kRankTolerance);
  ComplexMatrix rows(2, 2 * r);
  for (int a = 0; a < 2; ++a) {
    for (int bc = 0; bc < 2 * r; ++bc) rows(a, bc) = psi.amplitudes(a * 2 * r + bc);
  }
  const ComplexMatrix filtered = f * rows;
  return PauliFrame{std::sqrt(2.0) * filtered.row(0).transpose(),
                    std::sqrt(2.0) * filtered.row(1).transpose()};
}

Vector4r generalized_pauli_coordinates(const ComplexMatrix& rho_bc,
                                       const PauliFrame& frame) {
  // <phi_i| rho |phi_j>
  const Complex m00 = frame.phi0.dot(rho_bc * frame.phi0);
  const Complex m11 = frame.phi1.dot(rho_bc * frame.phi1);
  const Complex m01 = frame.phi0.dot(rho_bc * frame.phi1);
  const Complex m10 = frame.phi1.dot(rho_bc * frame.phi0);
  const Complex i(0.0, 1.0);
  // Tr(rho s_mu) with s2 = -i|0><1| + i|1><0|.
  return Vector4r((m00 + m11).real(), (m10 + m01).real(),
                  (-i * m10 + i * m01).real(), (m00 - m11).real());
}

namespace {

PencilData pencil_eigenvalues(const BlochChannel& l) {
  const Matrix4r eta = minkowski();
  const Matrix4r q1 = l.matrix.transpose() * eta * l.matrix;
  Eigen::EigenSolver<Matrix4r> solver(2.0 * eta * q1, false);
  std::array<Complex, 4> w;
  double scale = 1.0;
  for (int k = 0; k < 4; ++k) {
    w[k] = solver.eigenvalues()(k);
    scale = std::max(scale, std::abs(w[k]));
  }
  std::sort(w.begin(), w.end(), [](const Complex& a, const Complex& b) {
    return a.real() > b.real();
  });
  // A degenerate eigenvalue of a non-normal matrix splits by about
  // sqrt(machine epsilon); the cluster mean is well conditioned.
  PencilData data;
  for (int start = 0; start < 4;) {
    int end = start + 1;
    while (end < 4 && std::abs(w[end] - w[end - 1]) <= kClusterTolerance * scale) {
      ++end;
    }
    Complex mean = 0.0;
    for (int k = start; k < end; ++k) mean += w[k];
    mean /= static_cast<double>(end - start);
    for (int k = start; k < end; ++k) data.eigenvalues[k] = mean.real();
    data.max_imaginary = std::max(data.max_imaginary, std::abs(mean.imag()));
    start = end;
  }
  if (data.max_imaginary > kPencilImagTolerance * scale) {
    throw Error(ErrorKind::ComplexPencilEigenvalue,
                "pencil has a complex generalized eigenvalue",
                data.max_imaginary);
  }
  return data;
}

int checked_ancilla_dim(const ComplexMatrix& rho_bc) {
  if (rho_bc.rows() != rho_bc.cols() || rho_bc.rows() < 2 ||
      rho_bc.rows() % 2 != 0) {
    throw Error(ErrorKind::Validation,
                "complement state must be square on C^2 (x) C^r");
  }
  return static_cast<int>(rho_bc.rows() / 2);
}

ConcurrenceResult finish(const PencilData& data) {
  const double radicand = data.q1_value - data.eigenvalues[1] * data.q2_value;
  const double value = radicand < 0.0 && radicand >= -kRadicandTolerance
                           ? 0.0
                           : clipped_sqrt(radicand);
  return ConcurrenceResult{clip_unit(value), ConcurrenceMethod::Pencil};
}

}  // namespace

std::pair<ConcurrenceResult, PencilData> pencil_concurrence(
    const ComplexMatrix& rho_bc, const BlochChannel& l) {
  const int dim_c = checked_ancilla_dim(rho_bc);
  const HermitianEigen eig = hermitian_eig(rho_bc);
  const int rank = static_cast<int>((eig.values.array() > kRankTolerance).count());
  if (rank > 2) {
    throw Error(ErrorKind::RankTooHigh, "complement state has rank above 2",
                rank);
  }
  const PauliFrame frame{eig.vectors.col(0), eig.vectors.col(1)};
  const Vector4r x = generalized_pauli_coordinates(rho_bc, frame);

  PencilData data = pencil_eigenvalues(l);
  const double trace = rho_bc.trace().real();
  const ComplexMatrix rho_b = partial_trace(rho_bc, 2, dim_c, Subsystem::A);
  data.q1_value = 2.0 * (trace * trace - (rho_b * rho_b).trace().real());
  data.q2_value = 0.5 * x.dot(minkowski() * x);
  return {finish(data), data};
}

std::pair<ConcurrenceResult, PencilData> pencil_concurrence(
    const ComplexMatrix& rho_bc, const BlochChannel& l,
    const PauliFrame& frame) {
  checked_ancilla_dim(rho_bc);
  const HermitianEigen eig = hermitian_eig(rho_bc);
  const int rank = static_cast<int>((eig.values.array() > kRankTolerance).count());
  if (rank > 2) {
    throw Error(ErrorKind::RankTooHigh, "complement state has rank above 2",
                rank);
  }
  const Vector4r x = generalized_pauli_coordinates(rho_bc, frame);
  const Matrix4r eta = minkowski();
  PencilData data = pencil_eigenvalues(l);
  data.q1_value = x.dot(l.matrix.transpose() * eta * l.matrix * x);
  data.q2_value = 0.5 * x.dot(eta * x);
  return {finish(data), data};
}

std::pair<ConcurrenceResult, PencilData> complement_concurrence(
    const TwoQubitState& rho) {
  const TripartitePure psi = purify(rho);
  const ComplexMatrix rho_bc = complement_state(psi);
  const BlochChannel l = channel_from_state(rho);
  return pencil_concurrence(rho_bc, l, aligned_frame(psi, rho.reduced_a()));
}

ConcurrenceResult rank2_concurrence_complex(const Rank2Params& p) {
  p.validate();
  const Complex x = p.a0 * p.b1 * std::conj(p.c) - p.a1 * p.b0 * p.c;
  const double d2 = std::norm(p.d);
  const double spread =
      std::norm(x) +
      2.0 * d2 * (std::norm(p.a0) * std::norm(p.b1) + std::norm(p.a1) * std::norm(p.b0));
  const double overlap = std::abs(x * x - 4.0 * p.a0 * p.a1 * p.b0 * p.b1 * d2);
  const double con_sq = 2.0 * p.lambda0 * p.lambda1 * (spread - overlap);
  return ConcurrenceResult{clip_unit(clipped_sqrt(con_sq)),
                           ConcurrenceMethod::AnalyticComplex};
}

std::pair<Rank2Case, ConcurrenceResult> rank2_concurrence_cases(
    const Rank2Params& p) {
  p.validate();
  if (!p.is_real()) {
    throw Error(ErrorKind::NonRealParameters,
                "case formulas need real amplitudes");
  }
  const double a0 = p.a0.real(), b0 = p.b0.real();
  const double a1 = p.a1.real(), b1 = p.b1.real();
  const double c = p.c.real(), d = p.d.real();
  const double ll = 4.0 * p.lambda0 * p.lambda1;
  const double minus = a0 * b1 - a1 * b0;
  const double plus = a0 * b1 + a1 * b0;
  if (c * c * minus * minus >= 4.0 * a0 * a1 * b0 * b1 * d * d) {
    return {Rank2Case::I,
            ConcurrenceResult{clip_unit(clipped_sqrt(ll * d * d * plus * plus)),
                              ConcurrenceMethod::AnalyticCaseI}};
  }
  return {Rank2Case::II,
          ConcurrenceResult{clip_unit(clipped_sqrt(ll * minus * minus)),
                            ConcurrenceMethod::AnalyticCaseII}};
}

double eof_lower_bound(const ConcurrenceResult& con) {
  return eof_from_concurrence(con.value);
}

}  // namespace qcorr
