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

#include <cmath>

#include "doctest.h"
#include "qcorr/nelder_mead.hpp"

using namespace qcorr;

TEST_CASE("quadratic bowl") {
  const auto f = [](const Eigen::VectorXd& x) {
    return (x(0) - 1.0) * (x(0) - 1.0) + 2.0 * (x(1) + 0.5) * (x(1) + 0.5) + 3.0;
  };
  const NelderMeadResult r =
      nelder_mead(f, Eigen::Vector2d(4, 4), Eigen::Vector2d(0.5, 0.5));
  CHECK(std::abs(r.x(0) - 1.0) < 1e-6);
  CHECK(std::abs(r.x(1) + 0.5) < 1e-6);
  CHECK(r.value == doctest::Approx(3.0));
  CHECK(r.evaluations <= 4000);
}

TEST_CASE("Rosenbrock valley") {
  const auto f = [](const Eigen::VectorXd& x) {
    const double a = 1.0 - x(0);
    const double b = x(1) - x(0) * x(0);
    return a * a + 100.0 * b * b;
  };
  NelderMeadOptions opts;
  opts.max_evaluations = 20000;
  const NelderMeadResult r =
      nelder_mead(f, Eigen::Vector2d(-1.2, 1.0), Eigen::Vector2d(0.1, 0.1), opts);
  CHECK(std::abs(r.x(0) - 1.0) < 1e-4);
  CHECK(std::abs(r.x(1) - 1.0) < 1e-4);
  CHECK(r.value < 1e-8);
}

TEST_CASE("evaluation budget is respected") {
  int calls = 0;
  const auto f = [&calls](const Eigen::VectorXd& x) {
    ++calls;
    return std::cos(x(0)) + std::sin(3.0 * x(1)) + x.squaredNorm() * 1e-3;
  };
  NelderMeadOptions opts;
  opts.max_evaluations = 50;
  const NelderMeadResult r =
      nelder_mead(f, Eigen::Vector2d(0.3, 0.2), Eigen::Vector2d(0.4, 0.4), opts);
  CHECK(r.evaluations == calls);
  CHECK(calls <= 50 + 3);
}

TEST_CASE("deterministic") {
  const auto f = [](const Eigen::VectorXd& x) {
    return std::abs(x(0)) + std::abs(x(1) - 0.3) + std::abs(x(2) + x(0));
  };
  const auto a = nelder_mead(f, Eigen::Vector3d(1, 1, 1), Eigen::Vector3d(0.2, 0.2, 0.2));
  const auto b = nelder_mead(f, Eigen::Vector3d(1, 1, 1), Eigen::Vector3d(0.2, 0.2, 0.2));
  CHECK(a.x == b.x);
  CHECK(a.value == b.value);
}
