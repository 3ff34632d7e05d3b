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
#include <optional>
#include <string_view>
#include <vector>

#include "qcorr/entanglement.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Rank-one element M = a (1 + n.sigma) / 2.
struct PovmElement {
  double weight = 0.0;
  Vector3r direction = Vector3r::UnitZ();

  Matrix2c matrix() const;
};

struct Povm {
  std::vector<PovmElement> elements;

  /// Projectors (1 +- n.sigma) / 2.
  static Povm von_neumann(const Vector3r& n);

  /// max(|sum a_k - 2|, |sum a_k n_k|); zero iff sum M_k = 1.
  double completeness_residual() const;

  /// Positive weights, unit directions within 1e-12, completeness within tol.
  void validate(double tol = 1e-10) const;
};

constexpr double kNegligibleProbability = 1e-14;

/// Outcome of measuring A. Outcomes below kNegligibleProbability keep their
/// probability but carry a zero Bloch vector and add nothing to entropies.
struct EnsembleMember {
  double probability = 0.0;
  Vector3r bloch = Vector3r::Zero();

  Matrix2c state() const;
  double entropy() const;
};

struct Ensemble {
  std::vector<EnsembleMember> members;

  double total_probability() const;
  /// sum p_k rho_k
  Matrix2c barycenter() const;
};

/// p_k y_k = R^T x_k with x_k = (a_k / 2)(1, n_k).
Ensemble measure(const TwoQubitState& rho, const Povm& m);
Ensemble measure(const RMatrix& r, const Povm& m);

double average_entropy(const Ensemble& e);

/// average_entropy(measure(r, m)) without building the ensemble.
double average_entropy(const RMatrix& r, const Povm& m);

struct VonNeumannResult {
  double value = 0.0;
  /// Canonical representative of +-n: y > 0, else x > 0, else z > 0.
  Vector3r direction = Vector3r::UnitZ();
  std::array<double, 2> outcome_entropies{};
  Povm povm;
};

/// Minimal average entropy over projective measurements: a 181 x 91 grid on
/// the hemisphere, then pattern search from the best separated grid minima
/// until the step is below 1e-7 (at most 500 iterations each).
VonNeumannResult minimize_von_neumann(const TwoQubitState& rho);

struct Povm3Result {
  double value = 0.0;
  Povm povm;
  int seed_index = 0;
};

constexpr int kPovm3Seeds = 32;

/// Minimal average entropy over three-element rank-one POVMs. Completeness
/// forces the three directions into a plane; weights follow from the in-plane
/// gaps. Nelder-Mead runs from 32 fixed seeds, the first of which embeds the
/// projective optimum. The result never exceeds `projective.value`.
Povm3Result minimize_povm3(const TwoQubitState& rho,
                           const VonNeumannResult& projective);
Povm3Result minimize_povm3(const TwoQubitState& rho);

/// S(rho_A) + S(rho_B) - S(rho_AB).
double mutual_information(const TwoQubitState& rho);

enum class ReportMethod { ExactRank2, VonNeumannOpt, Povm3Opt, Bounds };

std::string_view to_string(ReportMethod m);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

struct CorrelationReport {
  double mutual_information = 0.0;
  double classical_correlation = 0.0;
  double discord = 0.0;
  double mae = 0.0;
  ReportMethod method = ReportMethod::ExactRank2;
  Povm optimal_measurement;
  std::optional<Interval> mae_bounds;
  std::optional<Interval> discord_interval;

  double entropy_a = 0.0;
  double entropy_b = 0.0;
  double entropy_ab = 0.0;
  int rank = 0;
  /// Concurrence of the complement state.
  std::optional<double> complement_concurrence;
  std::optional<double> projective_mae;
  std::optional<double> povm3_mae;
};

/// Exact report for rank <= 2 via S_min = E(rho^BC) with a qubit ancilla.
/// The reported measurement is the projective optimum.
CorrelationReport discord_exact_rank2(const TwoQubitState& rho,
                                      double rank_tol = kRankTolerance);

/// H((1 + sqrt(1 - 4 q (1 - q) cos^2(alpha) sin^2(beta))) / 2).
double separable_rank2_smin(const SeparableRank2Params& p);

/// Bounds for the minimal average entropy: lower from the pencil
/// concurrence of the complement, upper from the best projective or
/// three-element measurement. The discord interval follows from both.
CorrelationReport discord_bounds(const TwoQubitState& rho);

/// discord_exact_rank2 when rank <= 2, discord_bounds otherwise.
CorrelationReport analyze(const TwoQubitState& rho,
                          double rank_tol = kRankTolerance);

}  // namespace qcorr
