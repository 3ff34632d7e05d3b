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

#include "qcorr/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qcorr {

TwoQubitState TwoQubitState::validate(const ComplexMatrix& m, double tol) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw Error(ErrorKind::Validation, "two-qubit state must be 4x4");
  }
  if (!m.allFinite()) {
    throw Error(ErrorKind::Validation, "state has non-finite entries");
  }
  const double defect = hermiticity_defect(m);
  if (defect > tol) {
    throw Error(ErrorKind::NotHermitian,
                "state deviates from Hermitian by " + std::to_string(defect),
                defect);
  }
  const double trace_dev = std::abs(m.trace() - Complex(1.0));
  if (trace_dev > tol) {
    throw Error(ErrorKind::NotUnitTrace,
                "trace deviates from 1 by " + std::to_string(trace_dev),
                trace_dev);
  }
  const Matrix4c h = 0.5 * (m + m.adjoint());
  HermitianEigen eig = hermitian_eig(h, tol);
  const double smallest = eig.values.minCoeff();
  if (smallest < -kNegativeEigenvalueTolerance) {
    throw Error(ErrorKind::NotPsd,
                "negative eigenvalue " + std::to_string(smallest), smallest);
  }
  return TwoQubitState(h, std::move(eig));
}

int TwoQubitState::rank(double rank_tol) const {
  return static_cast<int>((eigen_.values.array() > rank_tol).count());
}

Matrix2c TwoQubitState::reduced_a() const {
  return partial_trace(matrix_, 2, 2, Subsystem::A);
}

Matrix2c TwoQubitState::reduced_b() const {
  return partial_trace(matrix_, 2, 2, Subsystem::B);
}

Vector3r TwoQubitState::bloch_a() const { return bloch_vector(reduced_a()); }
Vector3r TwoQubitState::bloch_b() const { return bloch_vector(reduced_b()); }

RMatrix r_matrix(const TwoQubitState& rho) { return r_matrix(rho.matrix()); }

RMatrix r_matrix(const ComplexMatrix& op) {
  if (op.rows() != 4 || op.cols() != 4) {
    throw Error(ErrorKind::Validation, "r_matrix expects a 4x4 operator");
  }
  RMatrix r;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const ComplexMatrix s = kron(pauli(mu), pauli(nu));
      r.values(mu, nu) = (op * s).trace().real();
    }
  }
  return r;
}

Matrix4c from_r_matrix(const RMatrix& r) {
  Matrix4c rho = Matrix4c::Zero();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      rho += r.values(mu, nu) * kron(pauli(mu), pauli(nu));
    }
  }
  return 0.25 * rho;
}

Vector3r bloch_vector(const Matrix2c& rho) {
  Vector3r r;
  for (int k = 1; k <= 3; ++k) r(k - 1) = (rho * pauli(k)).trace().real();
  return r;
}

Matrix2c qubit_from_bloch(const Vector3r& r) {
  return 0.5 * (pauli(0) + r(0) * pauli(1) + r(1) * pauli(2) +
                r(2) * pauli(3));
}

Rank2Params Rank2Params::real(double lambda0, double a0, double b0, double a1,
                              double b1, double c, double d) {
  Rank2Params p;
  p.lambda0 = lambda0;
  p.lambda1 = 1.0 - lambda0;
  p.a0 = a0;
  p.b0 = b0;
  p.a1 = a1;
  p.b1 = b1;
  p.c = c;
  p.d = d;
  return p;
}

void Rank2Params::validate(double tol) const {
  if (lambda0 < 0.0 || lambda1 < 0.0 ||
      std::abs(lambda0 + lambda1 - 1.0) > tol) {
    throw Error(ErrorKind::Validation,
                "rank-2 weights must be nonnegative and sum to 1");
  }
  const double n0 = std::norm(a0) + std::norm(b0) - 1.0;
  const double n1 = std::norm(a1) + std::norm(b1) - 1.0;
  const double ncd = std::norm(c) + std::norm(d) - 1.0;
  const double worst = std::max({std::abs(n0), std::abs(n1), std::abs(ncd)});
  if (worst > tol) {
    throw Error(ErrorKind::Validation, "rank-2 amplitudes are not normalized",
                worst);
  }
}

bool Rank2Params::is_real(double tol) const {
  for (const Complex& z : {a0, b0, a1, b1, c, d}) {
    if (std::abs(z.imag()) >= tol) return false;
  }
  return true;
}

ComplexVector Rank2Params::psi0() const {
  ComplexVector v(4);
  v << a0, b0 * c, 0.0, b0 * d;
  return v;
}

ComplexVector Rank2Params::psi1() const {
  ComplexVector v(4);
  v << 0.0, -b1 * std::conj(d), a1, b1 * std::conj(c);
  return v;
}

void SeparableRank2Params::validate() const {
  constexpr double half_pi = std::numbers::pi / 2;
  if (!(q > 0.0 && q < 1.0)) {
    throw Error(ErrorKind::Validation, "q must lie in (0, 1)", q);
  }
  if (!(alpha > 0.0 && alpha <= half_pi + 1e-15)) {
    throw Error(ErrorKind::Validation, "alpha must lie in (0, pi/2]", alpha);
  }
  if (!(beta > 0.0 && beta <= half_pi + 1e-15)) {
    throw Error(ErrorKind::Validation, "beta must lie in (0, pi/2]", beta);
  }
}

TwoQubitState build_rank2(const Rank2Params& p) {
  p.validate();
  const ComplexVector v0 = p.psi0();
  const ComplexVector v1 = p.psi1();
  const ComplexMatrix rho =
      p.lambda0 * v0 * v0.adjoint() + p.lambda1 * v1 * v1.adjoint();
  return TwoQubitState::validate(rho);
}

TwoQubitState build_separable_rank2(const SeparableRank2Params& p) {
  p.validate();
  ComplexVector product(4);
  const double ca = std::cos(p.alpha), sa = std::sin(p.alpha);
  const double cb = std::cos(p.beta), sb = std::sin(p.beta);
  product << ca * cb, ca * sb, sa * cb, sa * sb;
  ComplexMatrix rho = (1.0 - p.q) * product * product.adjoint();
  rho(0, 0) += p.q;
  return TwoQubitState::validate(rho);
}

TripartitePure purify(const TwoQubitState& rho, double rank_tol,
                      int min_ancilla_dim) {
  const HermitianEigen& eig = rho.eigen();
  const int rank = std::max(1, rho.rank(rank_tol));
  const int r = std::max(rank, min_ancilla_dim);
  TripartitePure out;
  out.ancilla_dim = r;
  out.amplitudes = ComplexVector::Zero(4 * r);
  for (int i = 0; i < rank; ++i) {
    const double weight = std::sqrt(std::max(eig.values(i), 0.0));
    for (int ab = 0; ab < 4; ++ab) {
      out.amplitudes(ab * r + i) = weight * eig.vectors(ab, i);
    }
  }
  // Discarded eigenvalues below rank_tol are absorbed by renormalizing.
  out.amplitudes.normalize();
  return out;
}

TripartitePure purify_rank2(const Rank2Params& p) {
  p.validate();
  const ComplexVector v0 = p.psi0();
  const ComplexVector v1 = p.psi1();
  TripartitePure out;
  out.ancilla_dim = 2;
  out.amplitudes = ComplexVector::Zero(8);
  for (int ab = 0; ab < 4; ++ab) {
    out.amplitudes(ab * 2 + 0) = std::sqrt(p.lambda0) * v0(ab);
    out.amplitudes(ab * 2 + 1) = std::sqrt(p.lambda1) * v1(ab);
  }
  return out;
}

Matrix4c reduce_to_ab(const TripartitePure& psi) {
  const ComplexMatrix full = psi.amplitudes * psi.amplitudes.adjoint();
  return partial_trace(full, 4, psi.ancilla_dim, Subsystem::A);
}

ComplexMatrix complement_state(const TripartitePure& psi) {
  const ComplexMatrix full = psi.amplitudes * psi.amplitudes.adjoint();
  return partial_trace(full, 2, 2 * psi.ancilla_dim, Subsystem::B);
}

TwoQubitState rank3_x_example(double coherence) {
  Matrix4c rho = Matrix4c::Zero();
  rho(0, 0) = 0.7;
  rho(2, 2) = 0.15;
  rho(3, 3) = 0.15;
  rho(0, 3) = coherence;
  rho(3, 0) = coherence;
  return TwoQubitState::validate(rho);
}

}  // namespace qcorr
