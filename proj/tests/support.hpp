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

#include <cmath>
#include <numbers>

#include "qcorr/qmat.hpp"
#include "qcorr/sampling.hpp"
#include "qcorr/states.hpp"

namespace qcorr::testing {

inline constexpr double kPi = std::numbers::pi;

inline double max_abs(const ComplexMatrix& m) {
  return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

inline Matrix4c bell_projector() {
  Matrix4c p = Matrix4c::Zero();
  p(0, 0) = p(0, 3) = p(3, 0) = p(3, 3) = 0.5;
  return p;
}

inline Matrix4c basis_projector(int k) {
  Matrix4c p = Matrix4c::Zero();
  p(k, k) = 1.0;
  return p;
}

inline TwoQubitState bell_state() { return TwoQubitState::validate(bell_projector()); }

inline TwoQubitState werner_state(double p) {
  return TwoQubitState::validate(p * bell_projector() +
                                 (1.0 - p) * Matrix4c::Identity() / 4.0);
}

inline Matrix2c random_qubit_state(Rng& rng) {
  std::normal_distribution<double> n;
  Matrix2c g;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) g(i, j) = Complex(n(rng), n(rng));
  }
  const Matrix2c w = g * g.adjoint();
  return w / w.trace().real();
}

inline ComplexMatrix random_hermitian(Rng& rng, int dim) {
  std::normal_distribution<double> n;
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(n(rng), n(rng));
  }
  return 0.5 * (g + g.adjoint());
}

inline Vector3r random_unit(Rng& rng) {
  std::normal_distribution<double> n;
  return Vector3r(n(rng), n(rng), n(rng)).normalized();
}

inline TwoQubitState product_state(const Matrix2c& a, const Matrix2c& b) {
  return TwoQubitState::validate(kron(a, b));
}

}  // namespace qcorr::testing
