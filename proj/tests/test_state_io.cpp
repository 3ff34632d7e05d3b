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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>

#include "doctest.h"
#include "qcorr/state_io.hpp"
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
  return ErrorKind::Io;  // treated as failure by the callers below
}

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("state documents round-trip exactly") {
  Rng rng(21);
  for (int k = 0; k < 50; ++k) {
    const ComplexMatrix m = random_general_state(rng).matrix();
    CHECK(max_abs(parse_state_document(format_state_document(m)) - m) == 0.0);
  }
}

TEST_CASE("state files round-trip through disk") {
  const std::string path = temp_path("qcorr_state_io_test.json");
  const ComplexMatrix m = rank3_x_example().matrix();
  write_state_file(path, m);
  CHECK(max_abs(read_state_file(path) - m) == 0.0);
  std::remove(path.c_str());
}

TEST_CASE("imaginary part is optional") {
  const ComplexMatrix m = parse_state_document(
      R"({"n": 2, "re": [[0.5, 0.5], [0.5, 0.5]]})");
  CHECK(m.rows() == 2);
  CHECK(std::abs(m(0, 1) - 0.5) == 0.0);
}

TEST_CASE("malformed documents are validation errors") {
  CHECK(kind_of([] { parse_state_document("not json"); }) == ErrorKind::Validation);
  CHECK(kind_of([] { parse_state_document(R"({"re": [[1]]})"); }) == ErrorKind::Validation);
  CHECK(kind_of([] { parse_state_document(R"({"n": 2, "re": [[1, 0]]})"); }) ==
        ErrorKind::Validation);
  CHECK(kind_of([] { parse_state_document(R"({"n": 1, "re": [["a"]]})"); }) ==
        ErrorKind::Validation);
}

TEST_CASE("missing files are io errors") {
  bool io = false;
  try {
    read_state_file(temp_path("qcorr_no_such_file.json"));
  } catch (const Error& e) {
    io = e.kind() == ErrorKind::Io;
  }
  CHECK(io);
}

TEST_CASE("writers emit at least 15 significant digits") {
  Matrix2c m = Matrix2c::Zero();
  m(0, 0) = 1.0 / 3.0;
  m(1, 1) = 2.0 / 3.0;
  const std::string text = format_state_document(m);
  CHECK(text.find("0.333333333333333") != std::string::npos);
}
