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
#include "qcorr/entanglement.hpp"
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

ComplexMatrix complement_of(const Rank2Params& p) {
  return complement_state(purify_rank2(p));
}

}  // namespace

TEST_CASE("Wootters concurrence examples") {
  CHECK(wootters_concurrence(bell_projector()).value == doctest::Approx(1.0).epsilon(1e-12));
  Rng rng(51);
  for (int k = 0; k < 50; ++k) {
    const TwoQubitState p = product_state(random_qubit_state(rng), random_qubit_state(rng));
    CHECK(wootters_concurrence(p.matrix()).value < 1e-12);
  }
  CHECK(wootters_concurrence(werner_state(0.5).matrix()).value ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK(wootters_concurrence(werner_state(0.2).matrix()).value == 0.0);
}

TEST_CASE("Wootters concurrence is invariant under local unitaries") {
  Rng rng(52);
  for (int k = 0; k < 200; ++k) {
    const TwoQubitState rho = random_general_state(rng);
    const ComplexMatrix u = kron(random_unitary(rng), random_unitary(rng));
    const double a = wootters_concurrence(rho.matrix()).value;
    const double b = wootters_concurrence(u * rho.matrix() * u.adjoint()).value;
    CHECK(std::abs(a - b) < 1e-10);
  }
}

TEST_CASE("eof_from_concurrence examples") {
  CHECK(eof_from_concurrence(0.0) == 0.0);
  CHECK(eof_from_concurrence(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(eof_from_concurrence(0.5) - 0.354578902665270) < 1e-12);
  double prev = -1.0;
  for (int i = 0; i <= 1000; ++i) {
    const double e = eof_from_concurrence(i / 1000.0);
    CHECK(e > prev);
    prev = e;
  }
  CHECK(kind_of([] { eof_from_concurrence(1.2); }) == ErrorKind::Validation);
  CHECK(kind_of([] { eof_from_concurrence(-0.1); }) == ErrorKind::Validation);
}

TEST_CASE("pencil concurrence of a pure-state complement vanishes") {
  Rng rng(53);
  const double h = 1.0 / std::sqrt(2.0);
  // Pure entangled rho_AB: invertible rho_A, product complement.
  const TwoQubitState rho =
      build_rank2(Rank2Params::real(1.0, 0.6, 0.8, h, h, 0.28, 0.96));
  const auto [con, data] = complement_concurrence(rho);
  CHECK(con.value < 1e-7);
  CHECK(con.method == ConcurrenceMethod::Pencil);
}

TEST_CASE("pencil concurrence equals Wootters on rank-2 complements") {
  Rng rng(54);
  double worst = 0.0, worst_default = 0.0, worst_imag = 0.0;
  for (int k = 0; k < 500; ++k) {
    const TwoQubitState rho = random_rank2_state(rng);
    const ComplexMatrix bc = complement_state(purify(rho, kRankTolerance, 2));
    const double w = wootters_concurrence(bc).value;
    const auto [aligned, data] = complement_concurrence(rho);
    const auto [plain, data2] = pencil_concurrence(bc, channel_from_state(rho));
    worst = std::max(worst, std::abs(aligned.value - w));
    worst_default = std::max(worst_default, std::abs(plain.value - w));
    worst_imag = std::max(worst_imag, data.max_imaginary);
    for (int i = 1; i < 4; ++i) CHECK(data.eigenvalues[i - 1] >= data.eigenvalues[i]);
    CHECK(data.q1_value == doctest::Approx(data2.q1_value).epsilon(1e-9));
    CHECK(data.q2_value == doctest::Approx(data2.q2_value).epsilon(1e-9));
  }
  CHECK(worst < 1e-8);
  CHECK(worst_default < 1e-8);
  CHECK(worst_imag < 1e-8);
}

TEST_CASE("both pencil frames agree on 2 x r complements of higher rank") {
  Rng rng(55);
  for (int k = 0; k < 200; ++k) {
    const TwoQubitState rho = k % 2 ? random_general_state(rng) : random_x_state(rng);
    const ComplexMatrix bc = complement_state(purify(rho));
    const auto [aligned, d1] = complement_concurrence(rho);
    const auto [plain, d2] = pencil_concurrence(bc, channel_from_state(rho));
    CHECK(std::abs(aligned.value - plain.value) < 1e-8);
  }
}

TEST_CASE("the rank-three example complement has concurrence 0.3") {
  // Pencil eigenvalues (1, 1, 0.744, 0.744), Q1 = 0.51, Q2 = 0.42.
  const auto [con, data] = complement_concurrence(rank3_x_example());
  CHECK(std::abs(con.value - 0.3) < 1e-12);
  CHECK(std::abs(data.eigenvalues[0] - 1.0) < 1e-12);
  CHECK(std::abs(data.eigenvalues[1] - 1.0) < 1e-12);
  // 0.744 is a defective double eigenvalue, accurate only to about sqrt(eps).
  CHECK(std::abs(data.eigenvalues[2] - 0.744) < 1e-5);
  CHECK(std::abs(data.eigenvalues[3] - 0.744) < 1e-5);
  CHECK(std::abs(data.q1_value - 0.51) < 1e-12);
  CHECK(std::abs(data.q2_value - 0.42) < 1e-12);
  const double bound = eof_lower_bound(con);
  CHECK(std::abs(bound - 0.158132936560207) < 1e-10);
  CHECK(bound <= 0.291942);
}

TEST_CASE("pencil rejects complements of rank above two") {
  const ComplexMatrix mixed = Matrix4c::Identity() / 4.0;
  CHECK(kind_of([&] { pencil_concurrence(mixed, BlochChannel{}); }) == ErrorKind::RankTooHigh);
}

TEST_CASE("rank2_concurrence_complex examples") {
  const double h = 1.0 / std::sqrt(2.0);
  // d = 0 and a0 b1 c* = a1 b0 c.
  const Rank2Params zero = Rank2Params::real(0.3, h, h, h, h, 1.0, 0.0);
  CHECK(rank2_concurrence_complex(zero).value == 0.0);

  const Rank2Params sym = Rank2Params::real(0.5, h, h, h, h, h, h);
  const double w = wootters_concurrence(complement_of(sym)).value;
  CHECK(std::abs(rank2_concurrence_complex(sym).value - w) < 1e-12);
  CHECK(std::abs(rank2_concurrence_cases(sym).second.value - w) < 1e-12);

  Rng rng(56);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const Rank2Params p = random_rank2_params_complex(rng);
    worst = std::max(worst, std::abs(rank2_concurrence_complex(p).value -
                                     wootters_concurrence(complement_of(p)).value));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("rank2_concurrence_cases examples") {
  const double h = 1.0 / std::sqrt(2.0);
  const auto [c0, v0] = rank2_concurrence_cases(Rank2Params::real(0.3, 0.6, 0.8, h, h, 1.0, 0.0));
  CHECK(c0 == Rank2Case::I);
  CHECK(v0.value == 0.0);

  const Rank2Params c2 = Rank2Params::real(0.3, 0.6, 0.8, 0.8, 0.6, 0.0, 1.0);
  const auto [case2, v2] = rank2_concurrence_cases(c2);
  CHECK(case2 == Rank2Case::II);
  const double minus = 0.6 * 0.6 - 0.8 * 0.8;
  CHECK(v2.value == doctest::Approx(std::sqrt(4.0 * 0.3 * 0.7 * minus * minus)));
  CHECK(v2.method == ConcurrenceMethod::AnalyticCaseII);

  Rank2Params complex = c2;
  complex.a0 = Complex(0.0, 0.6);
  CHECK(kind_of([&] { rank2_concurrence_cases(complex); }) == ErrorKind::NonRealParameters);
}

TEST_CASE("case formulas agree with the general formula and with Wootters") {
  Rng rng(57);
  int seen_i = 0, seen_ii = 0;
  for (int k = 0; k < 200; ++k) {
    const Rank2Params p = random_rank2_params_real(rng);
    const auto [which, value] = rank2_concurrence_cases(p);
    (which == Rank2Case::I ? seen_i : seen_ii)++;
    CHECK(std::abs(value.value - rank2_concurrence_complex(p).value) < 1e-10);
    CHECK(std::abs(value.value - wootters_concurrence(complement_of(p)).value) < 1e-8);
    const auto [pencil, data] = complement_concurrence(build_rank2(p));
    CHECK(std::abs(value.value - pencil.value) < 1e-8);
  }
  CHECK(seen_i > 0);
  CHECK(seen_ii > 0);
}

TEST_CASE("eof_lower_bound endpoints") {
  CHECK(eof_lower_bound({0.0, ConcurrenceMethod::Pencil}) == 0.0);
  CHECK(eof_lower_bound({1.0, ConcurrenceMethod::Pencil}) == doctest::Approx(1.0));
}

TEST_CASE("lower bound never exceeds the measured MAE") {
  Rng rng(58);
  for (int k = 0; k < 40; ++k) {
    const TwoQubitState rho = k % 2 ? random_general_state(rng) : random_x_state(rng);
    const VonNeumannResult vn = minimize_von_neumann(rho);
    const Povm3Result p3 = minimize_povm3(rho, vn);
    const double lower = eof_lower_bound(complement_concurrence(rho).first);
    CHECK(lower <= p3.value + 1e-6);
    CHECK(p3.value <= vn.value + 1e-9);
  }
}
