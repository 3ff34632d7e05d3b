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

#include <array>
#include <vector>

#include "qcorr/states.hpp"

namespace qcorr {

/// Symmetric 4x4 real matrix; the surface is {y : y^T Q y = 0, y0 = 1}.
struct Quadric {
  Matrix4r matrix = Matrix4r::Zero();

  /// y^T Q y at y = (1, point).
  double evaluate(const Vector3r& point) const;

  /// Divided by its Frobenius norm, sign chosen so that the (0,0) entry is
  /// nonnegative (first nonzero entry in row-major order if (0,0) vanishes).
  Quadric normalized() const;
};

/// Largest entrywise difference between normalized quadrics, minimized over
/// the relative sign. Zero iff both describe the same zero set.
double quadric_distance(const Quadric& a, const Quadric& b);

/// Steering quadric R^{-1} eta R^{-T} of the B-side ellipsoid. Throws
/// DegenerateQuadric when |det R| <= 1e-12.
Quadric steering_quadric(const TwoQubitState& rho);
Quadric steering_quadric(const RMatrix& r);

struct EllipsoidGeometry {
  Vector3r center = Vector3r::Zero();
  /// Descending.
  Vector3r semiaxes = Vector3r::Zero();
  /// Columns are the principal axes; a proper rotation.
  Eigen::Matrix3d axes = Eigen::Matrix3d::Identity();

  /// Image of a unit vector under the sphere-to-ellipsoid map.
  Vector3r surface_point(const Vector3r& unit) const;
};

/// Throws NotAnEllipsoid when the y0 = 1 slice is not a bounded ellipsoid.
EllipsoidGeometry geometry(const Quadric& q);

/// n points spread over the ellipsoid surface (Fibonacci lattice on the unit
/// sphere mapped through `g`).
std::vector<Vector3r> fibonacci_surface(const EllipsoidGeometry& g, int n);

/// Max entrywise deviation between the normalized steering quadrics of rho and
/// of the renormalized filtered state (F (x) I) rho (F (x) I)^dagger.
double verify_filter_invariance(const TwoQubitState& rho, const Matrix2c& f);

/// Closed-form ellipsoid for real rank-2 parameters:
///   k11 y1^2 + k22 y2^2 + k33 y3^2 + k13 y1 y3 + k1 y1 + k3 y3 + k0 = 0.
struct Rank2Coefficients {
  std::array<double, 6> f{};  // f1 .. f6
  double k11 = 0, k22 = 0, k33 = 0, k13 = 0, k1 = 0, k3 = 0, k0 = 0;

  Quadric as_quadric() const;
};

/// Throws NonRealParameters when any amplitude has |Im| >= 1e-12.
Rank2Coefficients rank2_coeffs(const Rank2Params& p);

/// Angle of the rotation about y2 that removes the y1 y3 cross term:
/// eta = atan2(-c f3, f6) in (-pi, pi]. Returns 0 when c f3 = f6 = 0.
double rotation_angle(const Rank2Params& p);

/// Substitutes y1 -> y1 cos(eta) - y3 sin(eta), y3 -> y1 sin(eta) + y3 cos(eta).
Quadric rotate_about_y2(const Quadric& q, double eta);

/// Bloch rotation taking r^B to the frame of rotate_about_y2.
Eigen::Matrix3d y2_rotation(double eta);

struct ChordLengths {
  double r_m_sq = 0.0;
  double r_p_sq = 0.0;
};

/// r_M^2 = 1 - 4 l0 l1 d^2 (a0 b1 + a1 b0)^2, r_P^2 = 1 - 4 l0 l1 (a0 b1 - a1 b0)^2.
ChordLengths chord_lengths(const Rank2Params& p);

struct ChordDecomposition {
  std::array<Vector3r, 2> endpoints;
  std::array<double, 2> weights{};
};

struct EquiEntropyChords {
  double eta = 0.0;
  ChordDecomposition mn;  // chord through B' parallel to the rotated y1 axis
  ChordDecomposition pq;  // chord through B' parallel to y2
};

/// Both equi-entropy decompositions of r^B, found by intersecting the
/// steering quadric with the two chords. Endpoints are reported in the
/// original Bloch frame. Throws DegenerateQuadric for singular R.
EquiEntropyChords equi_entropy_chords(const Rank2Params& p);

/// The separable rank-2 family steers qubit B along the line
/// r3 + r1 tan(beta) = 1.
struct SeparableLine {
  double beta = 0.0;
  double tan_beta = 0.0;
  double y_max = 1.0;

  /// r3 cos(beta) + r1 sin(beta) - cos(beta); zero on the line.
  double residual(const Vector3r& r) const;
};

SeparableLine separable_line(const SeparableRank2Params& p);

}  // namespace qcorr
