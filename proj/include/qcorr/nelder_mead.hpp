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

#include <Eigen/Core>
#include <functional>

namespace qcorr {

struct NelderMeadOptions {
  int max_evaluations = 4000;
  /// Stop when max - min over the simplex falls below this.
  double value_tolerance = 1e-15;
  /// Stop when every vertex lies within this distance of the best one.
  double simplex_tolerance = 1e-10;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int evaluations = 0;
};

/// Derivative-free minimization with the standard coefficients (reflection 1,
/// expansion 2, contraction 1/2, shrink 1/2). The initial simplex is x0 plus
/// step_i along each axis. Deterministic; ties keep the earlier vertex.
NelderMeadResult nelder_mead(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x0, const Eigen::VectorXd& step,
    const NelderMeadOptions& options = {});

}  // namespace qcorr
