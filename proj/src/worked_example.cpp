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

#include "qcorr/worked_example.hpp"

namespace qcorr::worked_example {

Povm published_povm() {
  Povm m;
  for (int k = 0; k < 3; ++k) {
    const Vector3r n(kDirections[k][0], kDirections[k][1], kDirections[k][2]);
    m.elements.push_back({2.0 * kProbabilities[k], n.normalized()});
  }
  return m;
}

double coherence_for_projective_mae(double target, double lo, double hi) {
  auto f = [target](double c) {
    return minimize_von_neumann(rank3_x_example(c)).value - target;
  };
  double flo = f(lo);
  if (flo * f(hi) > 0.0) {
    throw Error(ErrorKind::Validation, "target MAE is not bracketed", target);
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qcorr::worked_example
