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

#include "qcorr/channels.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace qcorr {

namespace {

Eigen::Vector4cd vec(const Matrix2c& x) {
  return Eigen::Vector4cd(x(0, 0), x(0, 1), x(1, 0), x(1, 1));
}

Matrix2c unvec(const Eigen::Vector4cd& v) {
  Matrix2c x;
  x << v(0), v(1), v(2), v(3);
  return x;
}

constexpr double kPauliRealTolerance = 1e-8;

}  // namespace

Superoperator Superoperator::from_kraus(std::span<const Matrix2c> kraus) {
  Superoperator s;
  s.matrix.setZero();
  for (const Matrix2c& k : kraus) s.matrix += kron(k, k.conjugate());
  return s;
}

bool Superoperator::trace_preserving(double tol) const {
  const Eigen::RowVector4cd trace_row = matrix.row(0) + matrix.row(3);
  const Eigen::RowVector4cd expected(1.0, 0.0, 0.0, 1.0);
  return (trace_row - expected).cwiseAbs().maxCoeff() <= tol;
}

Matrix2c Superoperator::apply(const Matrix2c& x) const {
  return unvec(matrix * vec(x));
}

bool BlochChannel::trace_preserving(double tol) const {
  const Eigen::RowVector4d expected(1.0, 0.0, 0.0, 0.0);
  return (matrix.row(0) - expected).cwiseAbs().maxCoeff() <= tol;
}

Matrix4c upsilon() {
  const Complex i(0.0, 1.0);
  Matrix4c u;
  u << 1, 0, 0, 1,
       0, 1, 1, 0,
       0, i, -i, 0,
       1, 0, 0, -1;
  return u / std::sqrt(2.0);
}

Matrix4r minkowski() { return Eigen::Vector4d(1, -1, -1, -1).asDiagonal(); }

Matrix4r bell_r_matrix() { return Eigen::Vector4d(1, 1, -1, 1).asDiagonal(); }

Matrix4c reshuffle(const Matrix4c& x) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int ip = 0; ip < 2; ++ip)
        for (int jp = 0; jp < 2; ++jp)
          out(2 * i + j, 2 * ip + jp) = x(2 * i + ip, 2 * j + jp);
  return out;
}

BlochChannel bloch_rep(const Superoperator& phi) {
  const Matrix4c u = upsilon();
  const Matrix4c l = u * phi.matrix * u.adjoint();
  const double residue = l.imag().cwiseAbs().maxCoeff();
  if (residue > kPauliRealTolerance) {
    throw Error(ErrorKind::NotPauliReal,
                "map does not preserve Hermiticity", residue);
  }
  return BlochChannel{l.real()};
}

Superoperator superoperator_from_bloch(const BlochChannel& l) {
  const Matrix4c u = upsilon();
  return Superoperator{u.adjoint() * l.matrix.cast<Complex>() * u};
}

Matrix4c a_normalized_state(const TwoQubitState& rho) {
  const Matrix2c f = inv_sqrt(2.0 * rho.reduced_a(), 2.0 * kRankTolerance);
  const Matrix4c filter = kron(f, Matrix2c::Identity());
  const Matrix4c out = filter * rho.matrix() * filter.adjoint();
  return 0.5 * (out + out.adjoint());
}

BlochChannel channel_from_state(const TwoQubitState& rho) {
  const RMatrix r_tilde = r_matrix(a_normalized_state(rho));
  return BlochChannel{r_tilde.values.transpose() *
                      bell_r_matrix().transpose()};
}

RMatrix apply_local_channels(const RMatrix& r, const BlochChannel& la,
                             const BlochChannel& lb) {
  return RMatrix{la.matrix * r.values * lb.matrix.transpose()};
}

Matrix4c apply_on_b(const Superoperator& phi, const Matrix4c& x) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = phi.apply(x.block<2, 2>(2 * i, 2 * j));
    }
  }
  return out;
}

BlochChannel filter_bloch(const Matrix2c& f) {
  const double det = std::abs(f.determinant());
  if (det <= 1e-12) {
    throw Error(ErrorKind::Validation, "filter is singular", det);
  }
  const double top = hermitian_eig(f.adjoint() * f).values(0);
  if (top > 1.0 + 1e-9) {
    throw Error(ErrorKind::Validation, "filter violates F^dagger F <= I", top);
  }
  const Matrix2c kraus[] = {f};
  return bloch_rep(Superoperator::from_kraus(kraus));
}

ChannelInvariants canonical_invariants(const BlochChannel& l) {
  const Eigen::Matrix3d xi = l.matrix.bottomRightCorner<3, 3>();
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(xi);
  return ChannelInvariants{svd.singularValues(),
                           l.matrix.bottomLeftCorner<3, 1>().norm()};
}

}  // namespace qcorr
