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

#include "doctest.h"
#include "qcorr/channels.hpp"
#include "qcorr/discord.hpp"
#include "qcorr/ellipsoid.hpp"
#include "support.hpp"

using namespace qcorr;
using namespace qcorr::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Io;
}

Rank2Params symmetric_params() {
  const double h = 1.0 / std::sqrt(2.0);
  return Rank2Params::real(0.5, h, h, h, h, h, h);
}

// Squared norms of the two points where the line base + s dir meets the
// surface of q.
std::array<double, 2> crossing_norms(const Quadric& q, const Vector3r& base,
                                     const Vector3r& dir) {
  const Eigen::Vector4d y0(1.0, base.x(), base.y(), base.z());
  const Eigen::Vector4d e(0.0, dir.x(), dir.y(), dir.z());
  const double a = e.dot(q.matrix * e), b = 2.0 * e.dot(q.matrix * y0),
               c = y0.dot(q.matrix * y0);
  const double root = std::sqrt(std::max(b * b - 4.0 * a * c, 0.0));
  const double s1 = (-b + root) / (2.0 * a), s2 = (-b - root) / (2.0 * a);
  return {(base + s1 * dir).squaredNorm(), (base + s2 * dir).squaredNorm()};
}

}  // namespace

TEST_CASE("steering_quadric examples") {
  const Quadric bell = steering_quadric(bell_state()).normalized();
  CHECK((bell.matrix - minkowski() / 2.0).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(kind_of([] { steering_quadric(TwoQubitState::validate(basis_projector(0))); }) ==
        ErrorKind::DegenerateQuadric);
  const TwoQubitState ex = rank3_x_example();
  const double inside = steering_quadric(ex).evaluate(bloch_vector(ex.reduced_b()));
  CHECK(inside > 1e-6);
}

TEST_CASE("the B marginal lies inside the ellipsoid") {
  Rng rng(41);
  for (int k = 0; k < 200; ++k) {
    const TwoQubitState rho = random_general_state(rng);
    CHECK(steering_quadric(rho).evaluate(bloch_vector(rho.reduced_b())) >= -1e-9);
  }
}

TEST_CASE("geometry of the unit sphere and invariance under scaling") {
  const EllipsoidGeometry g = geometry(Quadric{minkowski()});
  CHECK(g.center.norm() < 1e-15);
  CHECK((g.semiaxes - Vector3r::Ones()).cwiseAbs().maxCoeff() < 1e-14);

  const Quadric q = steering_quadric(rank3_x_example());
  const EllipsoidGeometry a = geometry(q);
  const EllipsoidGeometry b = geometry(Quadric{3.5 * q.matrix});
  CHECK((a.center - b.center).norm() < 1e-12);
  CHECK((a.semiaxes - b.semiaxes).norm() < 1e-12);
  CHECK((a.center - Vector3r(0, 0, 0.5)).norm() < 1e-12);
}

TEST_CASE("geometry rejects non-ellipsoids") {
  Matrix4r hyper = Matrix4r::Zero();
  hyper.diagonal() << 1, -1, 1, -1;
  CHECK(kind_of([&] { geometry(Quadric{hyper}); }) == ErrorKind::NotAnEllipsoid);
  Matrix4r empty = Matrix4r::Zero();
  empty.diagonal() << -1, -1, -1, -1;
  CHECK(kind_of([&] { geometry(Quadric{empty}); }) == ErrorKind::NotAnEllipsoid);
}

TEST_CASE("principal points satisfy the surface equation") {
  Rng rng(42);
  for (int k = 0; k < 100; ++k) {
    const Quadric q = steering_quadric(random_general_state(rng)).normalized();
    const EllipsoidGeometry g = geometry(q);
    CHECK((g.axes.transpose() * g.axes - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <
          1e-10);
    CHECK(g.axes.determinant() == doctest::Approx(1.0));
    CHECK(g.semiaxes(0) >= g.semiaxes(1));
    CHECK(g.semiaxes(1) >= g.semiaxes(2));
    for (int i = 0; i < 3; ++i) {
      for (double s : {1.0, -1.0}) {
        const Vector3r p = g.center + s * g.semiaxes(i) * g.axes.col(i);
        CHECK(std::abs(q.evaluate(p)) < 1e-8);
      }
    }
    for (const Vector3r& p : fibonacci_surface(g, 20)) CHECK(std::abs(q.evaluate(p)) < 1e-8);
  }
}

TEST_CASE("closed-form rank-2 ellipsoid matches the steering quadric") {
  const Rank2Params fixed = Rank2Params::real(0.3, 0.6, 0.8, 0.8, 0.6, 0.28, 0.96);
  const EllipsoidGeometry from_coeffs = geometry(rank2_coeffs(fixed).as_quadric());
  const EllipsoidGeometry from_state = geometry(steering_quadric(build_rank2(fixed)));
  CHECK((from_coeffs.center - from_state.center).norm() < 1e-10);
  CHECK((from_coeffs.semiaxes - from_state.semiaxes).norm() < 1e-10);

  Rng rng(43);
  for (int k = 0; k < 100; ++k) {
    const Rank2Params p = random_rank2_params_real(rng);
    // Flat ellipsoids have no definite spatial block.
    if (std::abs(r_matrix(build_rank2(p)).values.determinant()) < 1e-6) continue;
    const Quadric closed = rank2_coeffs(p).as_quadric().normalized();
    const Quadric steer = steering_quadric(build_rank2(p)).normalized();
    CHECK(quadric_distance(closed, steer) < 1e-8);
    const EllipsoidGeometry g = geometry(steer);
    for (const Vector3r& y : fibonacci_surface(g, 100)) {
      CHECK(std::abs(closed.evaluate(y)) < 1e-8);
    }
  }
}

TEST_CASE("rank2_coeffs edge cases") {
  const Rank2Coefficients k = rank2_coeffs(Rank2Params::real(1.0, 0.6, 0.8, 0.8, 0.6, 0.6, 0.8));
  CHECK(k.f[1] == doctest::Approx(k.f[0]));
  for (int i = 2; i < 6; ++i) CHECK(k.f[i] == 0.0);

  // lambda0 = lambda1 = 1/2, a0 = b1 = 1, a1 = b0 = 0: f by direct substitution.
  const Rank2Coefficients u = rank2_coeffs(Rank2Params::real(0.5, 1.0, 0.0, 0.0, 1.0, 0.6, 0.8));
  CHECK(u.f[0] == 0.0);
  CHECK(u.f[1] == 0.0);
  CHECK(u.f[2] == doctest::Approx(0.5));
  CHECK(u.f[3] == doctest::Approx(-0.5));
  CHECK(u.f[4] == 0.0);
  CHECK(u.f[5] == 0.0);

  Rank2Params c = symmetric_params();
  c.d = Complex(0.0, c.d.real());
  CHECK(kind_of([&] { rank2_coeffs(c); }) == ErrorKind::NonRealParameters);
}

TEST_CASE("rotation_angle examples") {
  const double ca = std::cos(0.3), sa = std::sin(0.3);
  CHECK(rotation_angle(Rank2Params::real(0.4, ca, sa, ca, sa, 0.0, 1.0)) == 0.0);
  CHECK(rotation_angle(symmetric_params()) == doctest::Approx(-kPi / 2));
  CHECK(rotation_angle(Rank2Params::real(1.0, 0.6, 0.8, 0.8, 0.6, 0.6, 0.8)) == 0.0);
}

TEST_CASE("rotation about y2 removes the cross term") {
  Rng rng(44);
  for (int k = 0; k < 100; ++k) {
    const Rank2Params p = random_rank2_params_real(rng);
    const Quadric q = rank2_coeffs(p).as_quadric();
    const double eta = rotation_angle(p);
    const Quadric r = rotate_about_y2(q, eta);
    CHECK(std::abs(r.matrix(1, 3)) < 1e-10);
    CHECK(std::abs(r.matrix(1, 2)) < 1e-12);
    CHECK(std::abs(r.matrix(0, 2)) < 1e-12);
  }
}

TEST_CASE("chord_lengths examples") {
  const double h = 1.0 / std::sqrt(2.0);
  const ChordLengths d0 = chord_lengths(Rank2Params::real(0.3, h, h, 0.6, 0.8, 1.0, 0.0));
  CHECK(d0.r_m_sq == 1.0);
  const ChordLengths s = chord_lengths(symmetric_params());
  CHECK(s.r_m_sq == doctest::Approx(0.5));
  CHECK(s.r_p_sq == doctest::Approx(1.0));
}

TEST_CASE("chord formulas match direct intersection with the steering quadric") {
  Rng rng(45);
  for (int k = 0; k < 100; ++k) {
    const Rank2Params p = random_rank2_params_real(rng);
    const TwoQubitState rho = build_rank2(p);
    const Quadric q = steering_quadric(rho);
    const Eigen::Matrix3d t = y2_rotation(rotation_angle(p));
    const Vector3r b = bloch_vector(rho.reduced_b());
    const ChordLengths f = chord_lengths(p);
    // Chords along the rotated y1 and y2 axes, expressed in the original frame.
    const auto m = crossing_norms(q, b, t.transpose() * Vector3r::UnitX());
    const auto pq = crossing_norms(q, b, t.transpose() * Vector3r::UnitY());
    CHECK(std::abs(m[0] - f.r_m_sq) < 1e-8);
    CHECK(std::abs(m[1] - f.r_m_sq) < 1e-8);
    CHECK(std::abs(pq[0] - f.r_p_sq) < 1e-8);
    CHECK(std::abs(pq[1] - f.r_p_sq) < 1e-8);
  }
}

TEST_CASE("equi-entropy chords decompose the B marginal") {
  Rng rng(46);
  for (int k = 0; k < 100; ++k) {
    const Rank2Params p = random_rank2_params_real(rng);
    const Vector3r b = bloch_vector(build_rank2(p).reduced_b());
    const EquiEntropyChords ch = equi_entropy_chords(p);
    for (const ChordDecomposition* d : {&ch.mn, &ch.pq}) {
      CHECK(d->weights[0] + d->weights[1] == doctest::Approx(1.0));
      CHECK((d->weights[0] * d->endpoints[0] + d->weights[1] * d->endpoints[1] - b).norm() <
            1e-9);
      CHECK(std::abs(d->endpoints[0].norm() - d->endpoints[1].norm()) < 1e-10);
    }
  }
}

TEST_CASE("filtering leaves the normalized quadric unchanged") {
  Rng rng(47);
  const TwoQubitState ex = rank3_x_example();
  CHECK(verify_filter_invariance(ex, random_unitary(rng)) < 1e-10);
  Matrix2c f = Matrix2c::Zero();
  f(0, 0) = 1.0;
  f(1, 1) = 0.5;
  CHECK(verify_filter_invariance(ex, f) < 1e-9);
  for (int k = 0; k < 200; ++k) {
    CHECK(verify_filter_invariance(random_general_state(rng), random_filter(rng)) < 1e-8);
  }
}

TEST_CASE("separable_line examples") {
  CHECK(separable_line({0.3, kPi / 2, 0.7}).y_max == doctest::Approx(1.0));
  CHECK(separable_line({0.5, kPi / 4, kPi / 2}).y_max == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("separable states steer along the line") {
  Rng rng(48);
  for (int k = 0; k < 50; ++k) {
    const SeparableRank2Params p = random_separable_params(rng);
    const TwoQubitState rho = build_separable_rank2(p);
    const SeparableLine line = separable_line(p);
    CHECK(std::abs(line.residual(bloch_vector(rho.reduced_b()))) < 1e-10);
    const Ensemble e = measure(rho, Povm::von_neumann(random_unit(rng)));
    for (const auto& m : e.members) {
      if (m.probability > 1e-12) {
        CHECK(std::abs(line.residual(m.bloch)) < 1e-9);
      }
    }
    CHECK(average_entropy(e) >= qubit_entropy(line.y_max) - 1e-12);
  }
}

TEST_CASE("rank-one outcomes lie on the steering surface") {
  Rng rng(49);
  double worst = 0.0, worst_bary = 0.0;
  for (int s = 0; s < 50; ++s) {
    const TwoQubitState rho = random_general_state(rng);
    const Quadric q = steering_quadric(rho).normalized();
    const RMatrix r = r_matrix(rho);
    const Vector3r b = bloch_vector(rho.reduced_b());
    for (int k = 0; k < 20; ++k) {
      const Ensemble e = measure(r, Povm::von_neumann(random_unit(rng)));
      Vector3r bary = Vector3r::Zero();
      for (const auto& m : e.members) {
        worst = std::max(worst, std::abs(q.evaluate(m.bloch)));
        bary += m.probability * m.bloch;
      }
      worst_bary = std::max(worst_bary, (bary - b).norm());
    }
  }
  CHECK(worst < 1e-8);
  CHECK(worst_bary < 1e-10);
}
