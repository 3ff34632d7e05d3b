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

#include "qcorr/sampling.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>

namespace qcorr {

namespace {

constexpr double kPi = std::numbers::pi;

Complex complex_normal(Rng& rng) {
  std::normal_distribution<double> n;
  const double re = n(rng);
  const double im = n(rng);
  return Complex(re, im);
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex phase(Rng& rng) { return std::polar(1.0, uniform(rng, 0.0, 2.0 * kPi)); }

// Angle in (0, pi/2); the open ends keep every amplitude nonzero.
double open_quarter(Rng& rng) {
  double t = 0.0;
  while (t <= 0.0) t = uniform(rng, 0.0, 0.5 * kPi);
  return t;
}

}  // namespace

std::string_view to_string(Sampler s) {
  switch (s) {
    case Sampler::XState: return "xstate";
    case Sampler::General: return "general";
    case Sampler::Rank2: return "rank2";
  }
  return "unknown";
}

std::optional<Sampler> parse_sampler(std::string_view name) {
  if (name == "xstate") return Sampler::XState;
  if (name == "general") return Sampler::General;
  if (name == "rank2") return Sampler::Rank2;
  return std::nullopt;
}

TwoQubitState random_x_state(Rng& rng) {
  std::gamma_distribution<double> gamma(1.0, 1.0);
  Eigen::Vector4d diag;
  for (int i = 0; i < 4; ++i) diag(i) = gamma(rng);
  if (uniform(rng, 0.0, 1.0) < 0.5) {
    const int k = std::uniform_int_distribution<int>(0, 3)(rng);
    diag(k) = 0.0;
  }
  diag /= diag.sum();

  Matrix4c rho = Matrix4c::Zero();
  for (int i = 0; i < 4; ++i) rho(i, i) = diag(i);
  for (const auto& [i, j] : {std::pair{0, 3}, std::pair{1, 2}}) {
    const double radius = std::sqrt(diag(i) * diag(j));
    const double mod = uniform(rng, 0.0, 1.0) * radius;
    const Complex z = mod * phase(rng);
    rho(i, j) = z;
    rho(j, i) = std::conj(z);
  }
  return TwoQubitState::validate(rho);
}

TwoQubitState random_wishart_state(Rng& rng, int k) {
  ComplexMatrix g(4, k);
  for (int c = 0; c < k; ++c) {
    for (int r = 0; r < 4; ++r) g(r, c) = complex_normal(rng);
  }
  const ComplexMatrix w = g * g.adjoint();
  return TwoQubitState::validate(w / w.trace().real());
}

TwoQubitState random_general_state(Rng& rng) { return random_wishart_state(rng, 4); }

TwoQubitState random_rank2_state(Rng& rng) { return random_wishart_state(rng, 2); }

TwoQubitState sample_state(Sampler s, Rng& rng) {
  switch (s) {
    case Sampler::XState: return random_x_state(rng);
    case Sampler::General: return random_general_state(rng);
    case Sampler::Rank2: return random_rank2_state(rng);
  }
  return random_general_state(rng);
}

Rank2Params random_rank2_params_real(Rng& rng) {
  const double l = uniform(rng, 0.0, 1.0);
  const double t0 = open_quarter(rng), t1 = open_quarter(rng), tc = open_quarter(rng);
  return Rank2Params::real(l, std::cos(t0), std::sin(t0), std::cos(t1),
                           std::sin(t1), std::cos(tc), std::sin(tc));
}

Rank2Params random_rank2_params_complex(Rng& rng) {
  Rank2Params p = random_rank2_params_real(rng);
  p.a0 *= phase(rng);
  p.b0 *= phase(rng);
  p.a1 *= phase(rng);
  p.b1 *= phase(rng);
  p.c *= phase(rng);
  p.d *= phase(rng);
  return p;
}

SeparableRank2Params random_separable_params(Rng& rng) {
  SeparableRank2Params p;
  p.q = 0.0;
  while (p.q <= 0.0) p.q = uniform(rng, 0.0, 1.0);
  p.alpha = 0.5 * kPi - uniform(rng, 0.0, 0.5 * kPi);
  p.beta = 0.5 * kPi - uniform(rng, 0.0, 0.5 * kPi);
  return p;
}

Matrix2c random_unitary(Rng& rng) {
  Matrix2c g;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) g(i, j) = complex_normal(rng);
  }
  Eigen::HouseholderQR<Matrix2c> qr(g);
  Matrix2c q = qr.householderQ();
  const Matrix2c r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 2; ++j) {
    const double m = std::abs(r(j, j));
    if (m > 0.0) q.col(j) *= r(j, j) / m;
  }
  return q;
}

Matrix2c random_filter(Rng& rng) {
  const double top = uniform(rng, 0.3, 1.0);
  const double bottom = top * uniform(rng, 0.05, 1.0);
  Matrix2c s = Matrix2c::Zero();
  s(0, 0) = top;
  s(1, 1) = bottom;
  const Matrix2c u = random_unitary(rng);
  const Matrix2c v = random_unitary(rng);
  return u * s * v.adjoint();
}

}  // namespace qcorr
