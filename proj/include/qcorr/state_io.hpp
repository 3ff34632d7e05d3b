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

#include <iosfwd>
#include <string>

#include "qcorr/qmat.hpp"

namespace qcorr {

/// State files are JSON documents
///
///   {"n": 4, "re": [[...], ...], "im": [[...], ...]}
///
/// with row-major n x n arrays. `im` may be omitted for real matrices.
ComplexMatrix parse_state_document(const std::string& text);
std::string format_state_document(const ComplexMatrix& m);

/// Throws Error(Io) when the file cannot be read or written and
/// Error(Validation) when its content is malformed.
ComplexMatrix read_state_file(const std::string& path);
void write_state_file(const std::string& path, const ComplexMatrix& m);

}  // namespace qcorr
