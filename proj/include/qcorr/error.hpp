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

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcorr {

enum class ErrorKind {
  Validation,
  NotHermitian,
  NotUnitTrace,
  NotPsd,
  SingularOperator,
  NotPauliReal,
  DegenerateQuadric,
  NotAnEllipsoid,
  NonRealParameters,
  UndefinedRotation,
  RankTooHigh,
  ComplexPencilEigenvalue,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Error raised by every library operation. `magnitude` carries the offending
/// deviation when one is meaningful (e.g. the Hermiticity defect), else 0.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, double magnitude = 0.0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        magnitude_(magnitude) {}

  ErrorKind kind() const noexcept { return kind_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  ErrorKind kind_;
  double magnitude_;
};

}  // namespace qcorr
