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

#include "qcorr/state_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qcorr {

namespace {

using nlohmann::json;

Eigen::MatrixXd read_block(const json& doc, const char* key, int n) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  if (!doc.contains(key)) return out;
  const json& rows = doc.at(key);
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    throw Error(ErrorKind::Validation,
                std::string("state field '") + key + "' must have n rows");
  }
  for (int i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw Error(ErrorKind::Validation,
                  std::string("state field '") + key + "' must have n columns");
    }
    for (int j = 0; j < n; ++j) {
      if (!row[j].is_number()) {
        throw Error(ErrorKind::Validation,
                    std::string("state field '") + key + "' holds a non-number");
      }
      out(i, j) = row[j].get<double>();
    }
  }
  return out;
}

}  // namespace

ComplexMatrix parse_state_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Validation,
                std::string("state file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.at("n").is_number_integer()) {
    throw Error(ErrorKind::Validation, "state file needs an integer field 'n'");
  }
  const int n = doc.at("n").get<int>();
  if (n <= 0 || n > 64) {
    throw Error(ErrorKind::Validation, "state dimension out of range");
  }
  if (!doc.contains("re")) {
    throw Error(ErrorKind::Validation, "state file needs field 're'");
  }
  const Eigen::MatrixXd re = read_block(doc, "re", n);
  const Eigen::MatrixXd im = read_block(doc, "im", n);
  ComplexMatrix m(n, n);
  m.real() = re;
  m.imag() = im;
  return m;
}

std::string format_state_document(const ComplexMatrix& m) {
  json doc;
  doc["n"] = m.rows();
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json re_row = json::array(), im_row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
    }
    re.push_back(re_row);
    im.push_back(im_row);
  }
  doc["re"] = re;
  doc["im"] = im;
  // nlohmann/json emits doubles with 17 significant digits.
  return doc.dump(2) + "\n";
}

ComplexMatrix read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open state file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::Io, "cannot read state file '" + path + "'");
  return parse_state_document(buf.str());
}

void write_state_file(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  out << format_state_document(m);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path + "'");
}

}  // namespace qcorr
