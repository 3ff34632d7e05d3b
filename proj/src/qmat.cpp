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

#include "qcorr/qmat.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace qcorr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotUnitTrace: return "NotUnitTrace";
    case ErrorKind::NotPsd: return "NotPSD";
    case ErrorKind::SingularOperator: return "SingularOperator";
    case ErrorKind::NotPauliReal: return "NotPauliReal";
    case ErrorKind::DegenerateQuadric: return "DegenerateQuadric";
    case ErrorKind::NotAnEllipsoid: return "NotAnEllipsoid";
    case ErrorKind::NonRealParameters: return "NonRealParameters";
    case ErrorKind::UndefinedRotation: return "UndefinedRotation";
    case ErrorKind::RankTooHigh: return "RankTooHigh";
    case ErrorKind::ComplexPencilEigenvalue: return "ComplexPencilEigenvalue";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

namespace {

constexpr double kPhaseThreshold = 1e-8;
constexpr double kRoundingScale = 1e12;

void require_square(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorKind::Validation, "matrix must be square and non-empty");
  }
}

void fix_phase(Eigen::Ref<ComplexVector> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > kPhaseThreshold) {
      v *= std::conj(v(i)) / mag;
      v(i) = Complex(mag, 0.0);
      return;
    }
  }
}

std::vector<double> rounded_key(const ComplexVector& v) {
  std::vector<double> key;
  key.reserve(2 * v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    key.push_back(std::round(v(i).real() * kRoundingScale) / kRoundingScale);
    key.push_back(std::round(v(i).imag() * kRoundingScale) / kRoundingScale);
  }
  return key;
}

}  // namespace

double hermiticity_defect(const ComplexMatrix& m) {
  require_square(m);
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianEigen hermitian_eig(const ComplexMatrix& m, double tol) {
  const double defect = hermiticity_defect(m);
  if (defect > tol) {
    throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian", defect);
  }
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::Validation, "eigensolver did not converge");
  }
  const Eigen::Index n = h.rows();
  HermitianEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = solver.eigenvalues()(n - 1 - i);
    out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    fix_phase(out.vectors.col(i));
  }

  // Deterministic ordering inside degenerate clusters.
  const double cluster_tol =
      1e-10 * std::max(1.0, out.values.cwiseAbs().maxCoeff());
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index stop = start + 1;
    while (stop < n && out.values(stop - 1) - out.values(stop) <= cluster_tol) {
      ++stop;
    }
    if (stop - start > 1) {
      std::vector<Eigen::Index> order(stop - start);
      std::iota(order.begin(), order.end(), start);
      std::vector<std::vector<double>> keys(n);
      for (Eigen::Index i = start; i < stop; ++i) {
        keys[i] = rounded_key(out.vectors.col(i));
      }
      std::stable_sort(order.begin(), order.end(),
                       [&](Eigen::Index a, Eigen::Index b) {
                         return keys[a] < keys[b];
                       });
      const ComplexMatrix block = out.vectors.middleCols(start, stop - start);
      for (Eigen::Index k = 0; k < stop - start; ++k) {
        out.vectors.col(start + k) = block.col(order[k] - start);
      }
    }
    start = stop;
  }
  return out;
}

ComplexMatrix inv_sqrt(const ComplexMatrix& m, double tol) {
  const HermitianEigen eig = hermitian_eig(m);
  const double smallest = eig.values.minCoeff();
  if (smallest <= tol) {
    throw Error(ErrorKind::SingularOperator,
                "operator is not invertible (smallest eigenvalue " +
                    std::to_string(smallest) + ")",
                smallest);
  }
  const Eigen::VectorXd scale = eig.values.cwiseSqrt().cwiseInverse();
  return eig.vectors * scale.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m) {
  const HermitianEigen eig = hermitian_eig(m);
  const Eigen::VectorXd root = eig.values.cwiseMax(0.0).cwiseSqrt();
  return eig.vectors * root.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b,
                            Subsystem keep) {
  if (dim_a <= 0 || dim_b <= 0 || m.rows() != dim_a * dim_b ||
      m.cols() != dim_a * dim_b) {
    throw Error(ErrorKind::Validation,
                "partial_trace: matrix size does not match dimensions");
  }
  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i) {
      for (int j = 0; j < dim_a; ++j) {
        out(i, j) = m.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (int i = 0; i < dim_a; ++i) {
    out += m.block(i * dim_b, i * dim_b, dim_b, dim_b);
  }
  return out;
}

Matrix2c pauli(int mu) {
  Matrix2c s;
  const Complex i(0.0, 1.0);
  switch (mu) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -i, i, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw Error(ErrorKind::Validation, "Pauli index out of range");
  }
  return s;
}

double shannon_entropy(const Eigen::VectorXd& probabilities) {
  double s = 0.0;
  for (double p : probabilities) {
    if (p < -kNegativeEigenvalueTolerance) {
      throw Error(ErrorKind::NotPsd, "negative probability", p);
    }
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  require_square(rho);
  const double trace_dev = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (trace_dev > 1e-8) {
    throw Error(ErrorKind::NotUnitTrace, "density matrix trace is not 1",
                trace_dev);
  }
  const HermitianEigen eig = hermitian_eig(rho);
  return shannon_entropy(eig.values);
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorKind::Validation, "binary_entropy argument outside [0,1]",
                x);
  }
  double s = 0.0;
  if (x > 0.0) s -= x * std::log2(x);
  if (x < 1.0) s -= (1.0 - x) * std::log2(1.0 - x);
  return s;
}

double qubit_entropy(double bloch_norm) {
  const double r = std::clamp(bloch_norm, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + r));
}

}  // namespace qcorr
