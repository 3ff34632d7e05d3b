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

#include "qcorr/discord.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qcorr/channels.hpp"
#include "qcorr/nelder_mead.hpp"

namespace qcorr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kThetaPoints = 181;
constexpr int kPhiPoints = 91;
constexpr int kRefineStarts = 4;
constexpr double kStartSeparation = 0.15;
constexpr double kDirectionTolerance = 1e-7;
constexpr int kMaxRefineSteps = 500;
// Differences below this are rounding noise; ties go to the first found.
constexpr double kTieTolerance = 1e-14;

// p H(y) for the outcome of x = (a / 2)(1, n).
double outcome_term(const Matrix4r& rt, double a, const Vector3r& n) {
  Vector4r x;
  x << 0.5 * a, 0.5 * a * n;
  const Vector4r v = rt * x;
  const double p = v(0);
  if (p < kNegligibleProbability) return 0.0;
  return p * qubit_entropy(v.tail<3>().norm() / p);
}

double projective_value(const Matrix4r& rt, const Vector3r& n) {
  return outcome_term(rt, 1.0, n) + outcome_term(rt, 1.0, -n);
}

Vector3r sphere_point(double theta, double phi) {
  return Vector3r(std::sin(theta) * std::cos(phi),
                  std::sin(theta) * std::sin(phi), std::cos(theta));
}

// Some unit vector orthogonal to n.
Vector3r orthogonal_to(const Vector3r& n) {
  Eigen::Index axis = 0;
  n.cwiseAbs().minCoeff(&axis);
  return n.cross(Vector3r::Unit(axis)).normalized();
}

Vector3r canonical_direction(Vector3r n) {
  constexpr double eps = 1e-12;
  bool flip = false;
  if (std::abs(n.y()) > eps) {
    flip = n.y() < 0.0;
  } else if (std::abs(n.x()) > eps) {
    flip = n.x() < 0.0;
  } else {
    flip = n.z() < 0.0;
  }
  return flip ? Vector3r(-n) : n;
}

struct Refined {
  double value;
  Vector3r n;
};

Refined pattern_search(const Matrix4r& rt, Vector3r n, double value) {
  double step = kPi / (kThetaPoints - 1);
  for (int iter = 0; iter < kMaxRefineSteps && step >= kDirectionTolerance; ++iter) {
    const Vector3r e1 = orthogonal_to(n);
    const Vector3r e2 = n.cross(e1);
    double best = value;
    Vector3r best_n = n;
    for (int k = 0; k < 8; ++k) {
      const double ang = k * kPi / 4.0;
      const Vector3r trial =
          (n + step * (std::cos(ang) * e1 + std::sin(ang) * e2)).normalized();
      const double v = projective_value(rt, trial);
      if (v < best) {
        best = v;
        best_n = trial;
      }
    }
    if (best < value - kTieTolerance) {
      value = best;
      n = best_n;
    } else {
      step *= 0.5;
    }
  }
  return Refined{value, n};
}

// Three coplanar directions at in-plane angles t, t + g1, t + g1 + g2 in the
// plane with normal (theta, phi). Weights sin g2 : sin g3 : sin g1 close the
// polygon; feasible iff every gap lies in [0, pi].
struct Planar {
  bool feasible = false;
  double violation = 0.0;
  std::array<double, 3> a{};
  std::array<Vector3r, 3> n;
};

Planar decode(const Eigen::VectorXd& p) {
  const double theta = p(0), phi = p(1), t = p(2);
  const std::array<double, 3> g{p(3), p(4), 2.0 * kPi - p(3) - p(4)};
  Planar out;
  for (double gi : g) {
    out.violation += std::max(0.0, -gi) + std::max(0.0, gi - kPi);
  }
  const std::array<double, 3> s{std::sin(g[1]), std::sin(g[2]), std::sin(g[0])};
  const double sum = s[0] + s[1] + s[2];
  if (out.violation > 0.0 || sum < 1e-12) return out;
  const Vector3r u(std::cos(theta) * std::cos(phi),
                   std::cos(theta) * std::sin(phi), -std::sin(theta));
  const Vector3r v(-std::sin(phi), std::cos(phi), 0.0);
  const std::array<double, 3> psi{t, t + g[0], t + g[0] + g[1]};
  for (int k = 0; k < 3; ++k) {
    out.a[k] = std::max(0.0, 2.0 * s[k] / sum);
    out.n[k] = std::cos(psi[k]) * u + std::sin(psi[k]) * v;
  }
  out.feasible = true;
  return out;
}

double povm3_objective(const Matrix4r& rt, const Eigen::VectorXd& p) {
  const Planar d = decode(p);
  if (!d.feasible) return 2.0 + d.violation;
  double total = 0.0;
  for (int k = 0; k < 3; ++k) total += outcome_term(rt, d.a[k], d.n[k]);
  return total;
}

// Parameters placing n on the plane with unit normal m, at gap g1 = pi.
Eigen::VectorXd embed_projective(const Vector3r& n, const Vector3r& m) {
  const double theta = std::acos(std::clamp(m.z(), -1.0, 1.0));
  const double phi = std::atan2(m.y(), m.x());
  const Vector3r u(std::cos(theta) * std::cos(phi),
                   std::cos(theta) * std::sin(phi), -std::sin(theta));
  const Vector3r v(-std::sin(phi), std::cos(phi), 0.0);
  Eigen::VectorXd p(5);
  p << theta, phi, std::atan2(n.dot(v), n.dot(u)), kPi, 0.5 * kPi;
  return p;
}

std::vector<Eigen::VectorXd> povm3_seeds(const Vector3r& projective) {
  std::vector<Eigen::VectorXd> seeds;
  const Vector3r e1 = orthogonal_to(projective);
  const Vector3r e2 = projective.cross(e1);
  for (int k = 0; k < 4; ++k) {
    const double ang = k * kPi / 4.0;
    seeds.push_back(
        embed_projective(projective, std::cos(ang) * e1 + std::sin(ang) * e2));
  }
  std::mt19937_64 rng(0x5eed3u);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  while (static_cast<int>(seeds.size()) < kPovm3Seeds) {
    Vector3r m(normal(rng), normal(rng), normal(rng));
    m.normalize();
    const double t = 2.0 * kPi * uniform(rng);
    const double g1 = kPi * uniform(rng);
    const double g2 = kPi * uniform(rng);
    const double g3 = 2.0 * kPi - g1 - g2;
    if (g3 <= 0.0 || g3 >= kPi) continue;
    Eigen::VectorXd p = embed_projective(Vector3r::UnitX(), m);
    p(2) = t;
    p(3) = g1;
    p(4) = g2;
    seeds.push_back(p);
  }
  return seeds;
}

// Near a collapsed configuration (two directions almost parallel) the sine
// weights lose all relative precision, so such points are mapped onto the
// projective measurement they approach.
constexpr double kCollapseAngle = 1e-6;

Povm planar_povm(const Planar& d) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (d.n[i].cross(d.n[j]).norm() < kCollapseAngle && d.n[i].dot(d.n[j]) > 0.0) {
        const Vector3r merged = d.a[i] * d.n[i] + d.a[j] * d.n[j];
        return Povm::von_neumann(merged.normalized());
      }
    }
  }
  Povm m;
  for (int k = 0; k < 3; ++k) {
    if (d.a[k] > 1e-12) m.elements.push_back({d.a[k], d.n[k]});
  }
  return m;
}

}  // namespace

Matrix2c PovmElement::matrix() const {
  Matrix2c m = pauli(0);
  for (int i = 0; i < 3; ++i) m += direction(i) * pauli(i + 1);
  return 0.5 * weight * m;
}

Povm Povm::von_neumann(const Vector3r& n) {
  const Vector3r u = n.normalized();
  return Povm{{PovmElement{1.0, u}, PovmElement{1.0, -u}}};
}

double Povm::completeness_residual() const {
  double a = 0.0;
  Vector3r an = Vector3r::Zero();
  for (const auto& e : elements) {
    a += e.weight;
    an += e.weight * e.direction;
  }
  return std::max(std::abs(a - 2.0), an.norm());
}

void Povm::validate(double tol) const {
  if (elements.empty()) throw Error(ErrorKind::Validation, "empty POVM");
  for (const auto& e : elements) {
    if (!(e.weight > 0.0)) {
      throw Error(ErrorKind::Validation, "POVM weight must be positive", e.weight);
    }
    const double defect = std::abs(e.direction.norm() - 1.0);
    if (!(defect <= 1e-12)) {
      throw Error(ErrorKind::Validation, "POVM direction is not a unit vector",
                  defect);
    }
  }
  const double r = completeness_residual();
  if (!(r <= tol)) {
    throw Error(ErrorKind::Validation, "POVM elements do not sum to identity", r);
  }
}

Matrix2c EnsembleMember::state() const { return qubit_from_bloch(bloch); }

double EnsembleMember::entropy() const { return qubit_entropy(bloch.norm()); }

double Ensemble::total_probability() const {
  double s = 0.0;
  for (const auto& m : members) s += m.probability;
  return s;
}

Matrix2c Ensemble::barycenter() const {
  Matrix2c s = Matrix2c::Zero();
  for (const auto& m : members) s += m.probability * m.state();
  return s;
}

Ensemble measure(const RMatrix& r, const Povm& m) {
  const Matrix4r rt = r.values.transpose();
  Ensemble e;
  for (const auto& el : m.elements) {
    Vector4r x;
    x << 0.5 * el.weight, 0.5 * el.weight * el.direction;
    const Vector4r v = rt * x;
    EnsembleMember member;
    member.probability = v(0);
    if (v(0) >= kNegligibleProbability) member.bloch = v.tail<3>() / v(0);
    e.members.push_back(member);
  }
  return e;
}

Ensemble measure(const TwoQubitState& rho, const Povm& m) {
  return measure(r_matrix(rho), m);
}

double average_entropy(const Ensemble& e) {
  double s = 0.0;
  for (const auto& m : e.members) {
    if (m.probability >= kNegligibleProbability) s += m.probability * m.entropy();
  }
  return s;
}

double average_entropy(const RMatrix& r, const Povm& m) {
  const Matrix4r rt = r.values.transpose();
  double s = 0.0;
  for (const auto& el : m.elements) s += outcome_term(rt, el.weight, el.direction);
  return s;
}

VonNeumannResult minimize_von_neumann(const TwoQubitState& rho) {
  const Matrix4r rt = r_matrix(rho).values.transpose();

  struct GridPoint {
    double value;
    int index;
    Vector3r n;
  };
  std::vector<GridPoint> grid;
  grid.reserve(kThetaPoints * kPhiPoints);
  for (int i = 0; i < kThetaPoints; ++i) {
    const double theta = kPi * i / (kThetaPoints - 1);
    for (int j = 0; j < kPhiPoints; ++j) {
      const Vector3r n = sphere_point(theta, kPi * j / kPhiPoints);
      grid.push_back({projective_value(rt, n), static_cast<int>(grid.size()), n});
    }
  }
  std::sort(grid.begin(), grid.end(), [](const GridPoint& a, const GridPoint& b) {
    return a.value < b.value || (a.value == b.value && a.index < b.index);
  });
  // Flat optima (rings, whole spheres) give near-equal values; move the
  // first grid point among the near-minimal ones to the front.
  auto lead = grid.begin();
  for (auto it = grid.begin();
       it != grid.end() && it->value <= grid.front().value + 1e-12; ++it) {
    if (it->index < lead->index) lead = it;
  }
  std::rotate(grid.begin(), lead, lead + 1);

  std::vector<Vector3r> starts;
  const double max_overlap = std::cos(kStartSeparation);
  std::vector<double> start_values;
  for (const auto& g : grid) {
    bool separated = true;
    for (const auto& s : starts) {
      if (std::abs(s.dot(g.n)) > max_overlap) {
        separated = false;
        break;
      }
    }
    if (!separated) continue;
    starts.push_back(g.n);
    start_values.push_back(g.value);
    if (static_cast<int>(starts.size()) == kRefineStarts) break;
  }

  Refined best{start_values[0], starts[0]};
  bool first = true;
  for (std::size_t k = 0; k < starts.size(); ++k) {
    const Refined r = pattern_search(rt, starts[k], start_values[k]);
    if (first || r.value < best.value - kTieTolerance) best = r;
    first = false;
  }

  VonNeumannResult out;
  out.direction = canonical_direction(best.n.normalized());
  out.povm = Povm::von_neumann(out.direction);
  const Ensemble e = measure(r_matrix(rho), out.povm);
  out.value = average_entropy(e);
  for (int k = 0; k < 2; ++k) out.outcome_entropies[k] = e.members[k].entropy();
  return out;
}

Povm3Result minimize_povm3(const TwoQubitState& rho,
                           const VonNeumannResult& projective) {
  const Matrix4r rt = r_matrix(rho).values.transpose();
  const auto objective = [&rt](const Eigen::VectorXd& p) {
    return povm3_objective(rt, p);
  };
  const Eigen::VectorXd step = Eigen::VectorXd::Constant(5, 0.2);
  const Eigen::VectorXd fine = Eigen::VectorXd::Constant(5, 0.02);

  const std::vector<Eigen::VectorXd> seeds = povm3_seeds(projective.direction);
  double best_value = 0.0;
  Eigen::VectorXd best_x;
  int best_seed = -1;
  for (int k = 0; k < static_cast<int>(seeds.size()); ++k) {
    NelderMeadResult r = nelder_mead(objective, seeds[k], step);
    // One restart shakes the simplex out of premature collapse.
    const NelderMeadResult again = nelder_mead(objective, r.x, fine);
    if (again.value <= r.value) r = again;
    if (best_seed < 0 || r.value < best_value) {
      best_value = r.value;
      best_x = r.x;
      best_seed = k;
    }
  }

  if (!(best_value <= projective.value)) {
    return Povm3Result{projective.value, projective.povm, 0};
  }
  const Povm m = planar_povm(decode(best_x));
  const double value = average_entropy(r_matrix(rho), m);
  if (!(value <= projective.value)) {
    return Povm3Result{projective.value, projective.povm, 0};
  }
  return Povm3Result{value, m, best_seed};
}

Povm3Result minimize_povm3(const TwoQubitState& rho) {
  return minimize_povm3(rho, minimize_von_neumann(rho));
}

double mutual_information(const TwoQubitState& rho) {
  return von_neumann_entropy(rho.reduced_a()) +
         von_neumann_entropy(rho.reduced_b()) -
         von_neumann_entropy(rho.matrix());
}

std::string_view to_string(ReportMethod m) {
  switch (m) {
    case ReportMethod::ExactRank2: return "exact_rank2";
    case ReportMethod::VonNeumannOpt: return "vn_opt";
    case ReportMethod::Povm3Opt: return "povm3_opt";
    case ReportMethod::Bounds: return "bounds";
  }
  return "unknown";
}

namespace {

CorrelationReport base_report(const TwoQubitState& rho, double rank_tol) {
  CorrelationReport r;
  r.entropy_a = von_neumann_entropy(rho.reduced_a());
  r.entropy_b = von_neumann_entropy(rho.reduced_b());
  r.entropy_ab = von_neumann_entropy(rho.matrix());
  r.mutual_information = r.entropy_a + r.entropy_b - r.entropy_ab;
  r.rank = rho.rank(rank_tol);
  return r;
}

void fill_from_mae(CorrelationReport& r) {
  r.classical_correlation = r.entropy_b - r.mae;
  r.discord = r.entropy_a + r.mae - r.entropy_ab;
}

}  // namespace

CorrelationReport discord_exact_rank2(const TwoQubitState& rho, double rank_tol) {
  CorrelationReport r = base_report(rho, rank_tol);
  if (r.rank > 2) {
    throw Error(ErrorKind::RankTooHigh, "exact discord needs rank <= 2", r.rank);
  }
  const TripartitePure psi = purify(rho, rank_tol, 2);
  const ConcurrenceResult con = wootters_concurrence(complement_state(psi));
  r.method = ReportMethod::ExactRank2;
  r.complement_concurrence = con.value;
  r.mae = eof_from_concurrence(con.value);
  fill_from_mae(r);

  const VonNeumannResult vn = minimize_von_neumann(rho);
  r.optimal_measurement = vn.povm;
  r.projective_mae = vn.value;
  return r;
}

double separable_rank2_smin(const SeparableRank2Params& p) {
  p.validate();
  const double ca = std::cos(p.alpha), sb = std::sin(p.beta);
  const double inside = 1.0 - 4.0 * p.q * (1.0 - p.q) * ca * ca * sb * sb;
  return qubit_entropy(std::sqrt(std::max(inside, 0.0)));
}

CorrelationReport discord_bounds(const TwoQubitState& rho) {
  CorrelationReport r = base_report(rho, kRankTolerance);
  const VonNeumannResult vn = minimize_von_neumann(rho);
  const Povm3Result p3 = minimize_povm3(rho, vn);

  double lower = 0.0;
  try {
    const double con = complement_concurrence(rho).first.value;
    r.complement_concurrence = con;
    lower = eof_lower_bound(ConcurrenceResult{con, ConcurrenceMethod::Pencil});
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SingularOperator) {
      // Pure rho_A: the complement is pure and its EoF is S(rho_B).
      lower = r.entropy_b;
    } else if (e.kind() != ErrorKind::ComplexPencilEigenvalue) {
      throw;
    }
  }

  const bool three_wins = p3.value < vn.value;
  const double upper = three_wins ? p3.value : vn.value;
  r.method = ReportMethod::Bounds;
  r.mae = upper;
  r.optimal_measurement = three_wins ? p3.povm : vn.povm;
  r.projective_mae = vn.value;
  r.povm3_mae = p3.value;
  r.mae_bounds = Interval{lower, upper};
  fill_from_mae(r);
  r.discord_interval = Interval{r.entropy_a + lower - r.entropy_ab, r.discord};
  return r;
}

CorrelationReport analyze(const TwoQubitState& rho, double rank_tol) {
  if (rho.rank(rank_tol) <= 2) return discord_exact_rank2(rho, rank_tol);
  return discord_bounds(rho);
}

}  // namespace qcorr
