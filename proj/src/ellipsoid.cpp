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

#include "qcorr/ellipsoid.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "qcorr/channels.hpp"

namespace qcorr {

namespace {

Eigen::Vector4d lift(const Vector3r& point) {
  return Eigen::Vector4d(1.0, point(0), point(1), point(2));
}

Matrix4r symmetrized(const Matrix4r& m) { return 0.5 * (m + m.transpose()); }

/// Roots s of q(b + s e) = 0 for the homogeneous quadric, ordered (s+, s-).
std::array<double, 2> chord_roots(const Quadric& q, const Vector3r& base,
                                  const Vector3r& dir) {
  const Eigen::Vector4d y0 = lift(base);
  const Eigen::Vector4d e(0.0, dir(0), dir(1), dir(2));
  const double a = e.dot(q.matrix * e);
  const double b = 2.0 * e.dot(q.matrix * y0);
  const double c = y0.dot(q.matrix * y0);
  const double disc = b * b - 4.0 * a * c;
  if (std::abs(a) <= 1e-14 || disc < 0.0) {
    throw Error(ErrorKind::NotAnEllipsoid,
                "chord does not cross the ellipsoid surface twice");
  }
  const double root = std::sqrt(disc);
  // Stable quadratic roots.
  const double t = -0.5 * (b + std::copysign(root, b));
  double s1 = t / a;
  double s2 = (t != 0.0) ? c / t : -s1;
  if (s1 < s2) std::swap(s1, s2);
  return {s1, s2};
}

ChordDecomposition decompose_along(const Quadric& rotated, const Vector3r& b,
                                   const Vector3r& dir,
                                   const Eigen::Matrix3d& back) {
  const auto [s_plus, s_minus] = chord_roots(rotated, b, dir);
  ChordDecomposition out;
  out.endpoints[0] = back * (b + s_plus * dir);
  out.endpoints[1] = back * (b + s_minus * dir);
  const double span = s_plus - s_minus;
  out.weights[0] = -s_minus / span;
  out.weights[1] = s_plus / span;
  return out;
}

}  // namespace

double Quadric::evaluate(const Vector3r& point) const {
  const Eigen::Vector4d y = lift(point);
  return y.dot(matrix * y);
}

Quadric Quadric::normalized() const {
  const double norm = matrix.norm();
  if (norm == 0.0) return *this;
  Matrix4r m = matrix / norm;
  double pivot = m(0, 0);
  if (std::abs(pivot) <= 1e-14) {
    for (int i = 0; i < 16; ++i) {
      if (std::abs(m(i / 4, i % 4)) > 1e-14) {
        pivot = m(i / 4, i % 4);
        break;
      }
    }
  }
  if (pivot < 0.0) m = -m;
  return Quadric{m};
}

double quadric_distance(const Quadric& a, const Quadric& b) {
  const Matrix4r na = a.matrix / a.matrix.norm();
  const Matrix4r nb = b.matrix / b.matrix.norm();
  return std::min((na - nb).cwiseAbs().maxCoeff(),
                  (na + nb).cwiseAbs().maxCoeff());
}

Quadric steering_quadric(const TwoQubitState& rho) {
  return steering_quadric(r_matrix(rho));
}

Quadric steering_quadric(const RMatrix& r) {
  const double det = r.values.determinant();
  if (std::abs(det) <= 1e-12) {
    throw Error(ErrorKind::DegenerateQuadric,
                "R matrix is singular; no steering ellipsoid", det);
  }
  const Matrix4r inv = r.values.inverse();
  return Quadric{symmetrized(inv * minkowski() * inv.transpose())};
}

Vector3r EllipsoidGeometry::surface_point(const Vector3r& unit) const {
  return center + axes * semiaxes.asDiagonal() * unit;
}

EllipsoidGeometry geometry(const Quadric& q) {
  Matrix4r m = symmetrized(q.matrix);
  Eigen::Matrix3d spatial = m.bottomRightCorner<3, 3>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> probe(spatial);
  const Vector3r ev = probe.eigenvalues();
  const double scale = std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
  if (ev.maxCoeff() > 0.0 && ev.minCoeff() > 0.0) {
    m = -m;
  } else if (!(ev.maxCoeff() < 0.0)) {
    throw Error(ErrorKind::NotAnEllipsoid, "spatial block is not definite");
  }
  spatial = m.bottomRightCorner<3, 3>();
  const Vector3r linear = m.bottomLeftCorner<3, 1>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(-spatial);
  const Vector3r mu = solver.eigenvalues();  // ascending, positive
  if (mu.minCoeff() <= 1e-12 * scale) {
    throw Error(ErrorKind::NotAnEllipsoid, "ellipsoid is unbounded");
  }
  EllipsoidGeometry g;
  g.center = (-spatial).ldlt().solve(linear);
  const double level = m(0, 0) + linear.dot(g.center);
  if (level <= 0.0) {
    throw Error(ErrorKind::NotAnEllipsoid, "quadric has an empty real locus",
                level);
  }
  // Ascending mu gives descending semiaxes.
  for (int i = 0; i < 3; ++i) g.semiaxes(i) = std::sqrt(level / mu(i));
  g.axes = solver.eigenvectors();
  if (g.axes.determinant() < 0.0) g.axes.col(2) *= -1.0;
  return g;
}

std::vector<Vector3r> fibonacci_surface(const EllipsoidGeometry& g, int n) {
  std::vector<Vector3r> points;
  points.reserve(static_cast<size_t>(std::max(n, 0)));
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / n;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i;
    points.push_back(
        g.surface_point(Vector3r(rho * std::cos(phi), rho * std::sin(phi), z)));
  }
  return points;
}

double verify_filter_invariance(const TwoQubitState& rho, const Matrix2c& f) {
  const Matrix4c lift_f = kron(f, Matrix2c::Identity());
  Matrix4c filtered = lift_f * rho.matrix() * lift_f.adjoint();
  filtered /= filtered.trace().real();
  const TwoQubitState after = TwoQubitState::validate(filtered, 1e-9);
  const Quadric before_q = steering_quadric(rho).normalized();
  const Quadric after_q = steering_quadric(after).normalized();
  return (after_q.matrix - before_q.matrix).cwiseAbs().maxCoeff();
}

Quadric Rank2Coefficients::as_quadric() const {
  Quadric q;
  q.matrix(0, 0) = k0;
  q.matrix(0, 1) = q.matrix(1, 0) = 0.5 * k1;
  q.matrix(0, 3) = q.matrix(3, 0) = 0.5 * k3;
  q.matrix(1, 1) = k11;
  q.matrix(2, 2) = k22;
  q.matrix(3, 3) = k33;
  q.matrix(1, 3) = q.matrix(3, 1) = 0.5 * k13;
  return q;
}

Rank2Coefficients rank2_coeffs(const Rank2Params& p) {
  p.validate();
  if (!p.is_real()) {
    throw Error(ErrorKind::NonRealParameters,
                "closed-form ellipsoid needs real amplitudes");
  }
  const double l0 = p.lambda0, l1 = p.lambda1;
  const double a0 = p.a0.real(), b0 = p.b0.real();
  const double a1 = p.a1.real(), b1 = p.b1.real();
  const double c = p.c.real(), d = p.d.real();
  const double s = std::sqrt(l0 * l1);

  Rank2Coefficients k;
  auto& f = k.f;
  f[0] = l0 * a0 * b0 + l1 * a1 * b1;
  f[1] = l0 * a0 * b0 - l1 * a1 * b1;
  f[2] = s * (a1 * b0 + a0 * b1);
  f[3] = s * (a1 * b0 - a0 * b1);
  f[4] = s * (a0 * a1 + b0 * b1);
  f[5] = s * (a0 * a1 - b0 * b1);

  const double d2f1 = d * d * f[0] * f[0];
  k.k11 = c * c * f[2] * f[2] + d2f1;
  k.k33 = f[5] * f[5] + d2f1;
  k.k13 = 2.0 * c * f[2] * f[5];
  k.k22 = c * c * f[3] * f[3] + d * d * f[1] * f[1];
  k.k1 = -2.0 * c * f[2] * f[4];
  k.k3 = -2.0 * f[4] * f[5];
  k.k0 = f[4] * f[4] - d2f1;
  return k;
}

double rotation_angle(const Rank2Params& p) {
  const Rank2Coefficients k = rank2_coeffs(p);
  const double sin_part = -p.c.real() * k.f[2];
  const double cos_part = k.f[5];
  if (std::abs(sin_part) < 1e-15 && std::abs(cos_part) < 1e-15) return 0.0;
  const double eta = std::atan2(sin_part, cos_part);
  return eta <= -std::numbers::pi ? std::numbers::pi : eta;
}

Quadric rotate_about_y2(const Quadric& q, double eta) {
  Matrix4r t = Matrix4r::Identity();
  const double c = std::cos(eta), s = std::sin(eta);
  t(1, 1) = c;
  t(1, 3) = -s;
  t(3, 1) = s;
  t(3, 3) = c;
  return Quadric{symmetrized(t.transpose() * q.matrix * t)};
}

Eigen::Matrix3d y2_rotation(double eta) {
  const double c = std::cos(eta), s = std::sin(eta);
  Eigen::Matrix3d r;
  r << c, 0, s,
       0, 1, 0,
       -s, 0, c;
  return r;
}

ChordLengths chord_lengths(const Rank2Params& p) {
  p.validate();
  if (!p.is_real()) {
    throw Error(ErrorKind::NonRealParameters, "chord formulas need real amplitudes");
  }
  const double a0 = p.a0.real(), b0 = p.b0.real();
  const double a1 = p.a1.real(), b1 = p.b1.real();
  const double d = p.d.real();
  const double ll = 4.0 * p.lambda0 * p.lambda1;
  const double plus = a0 * b1 + a1 * b0;
  const double minus = a0 * b1 - a1 * b0;
  return ChordLengths{1.0 - ll * d * d * plus * plus, 1.0 - ll * minus * minus};
}

EquiEntropyChords equi_entropy_chords(const Rank2Params& p) {
  const double eta = rotation_angle(p);
  const TwoQubitState rho = build_rank2(p);
  const Quadric rotated = rotate_about_y2(steering_quadric(rho), eta);
  const Eigen::Matrix3d rot = y2_rotation(eta);
  const Vector3r b_rot = rot * rho.bloch_b();
  const Eigen::Matrix3d back = rot.transpose();

  EquiEntropyChords out;
  out.eta = eta;
  out.mn = decompose_along(rotated, b_rot, Vector3r::UnitX(), back);
  out.pq = decompose_along(rotated, b_rot, Vector3r::UnitY(), back);
  return out;
}

double SeparableLine::residual(const Vector3r& r) const {
  return r(2) * std::cos(beta) + r(0) * std::sin(beta) - std::cos(beta);
}

SeparableLine separable_line(const SeparableRank2Params& p) {
  p.validate();
  SeparableLine line;
  line.beta = p.beta;
  line.tan_beta = std::tan(p.beta);
  const double ca = std::cos(p.alpha), sb = std::sin(p.beta);
  line.y_max = std::sqrt(std::max(0.0, 1.0 - 4.0 * p.q * (1.0 - p.q) * ca * ca * sb * sb));
  return line;
}

}  // namespace qcorr
