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

#include "qcorr/report_io.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace qcorr {

namespace {

using nlohmann::json;

json measurement_json(const Povm& m) {
  json out = json::array();
  for (const auto& e : m.elements) {
    out.push_back({{"weight", e.weight},
                   {"direction", {e.direction.x(), e.direction.y(), e.direction.z()}}});
  }
  return out;
}

std::string measurement_text(const Povm& m) {
  std::ostringstream os;
  for (std::size_t k = 0; k < m.elements.size(); ++k) {
    const auto& e = m.elements[k];
    os << "element[" << k << "]: weight " << format_number(e.weight)
       << " direction (" << format_number(e.direction.x()) << ", "
       << format_number(e.direction.y()) << ", "
       << format_number(e.direction.z()) << ")\n";
  }
  return os.str();
}

std::string optional_cell(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string format_report_json(const CorrelationReport& r) {
  json doc;
  doc["I"] = r.mutual_information;
  doc["C"] = r.classical_correlation;
  doc["D"] = r.discord;
  doc["mae"] = r.mae;
  doc["method"] = std::string(to_string(r.method));
  doc["rank"] = r.rank;
  doc["entropies"] = {{"A", r.entropy_a}, {"B", r.entropy_b}, {"AB", r.entropy_ab}};
  if (r.mae_bounds) {
    doc["bounds"] = {{"lower", r.mae_bounds->lower}, {"upper", r.mae_bounds->upper}};
  }
  if (r.discord_interval) {
    doc["discord_bounds"] = {{"lower", r.discord_interval->lower},
                             {"upper", r.discord_interval->upper}};
  }
  if (r.complement_concurrence) doc["complement_concurrence"] = *r.complement_concurrence;
  if (r.projective_mae) doc["mae_projective"] = *r.projective_mae;
  if (r.povm3_mae) doc["mae_povm3"] = *r.povm3_mae;
  doc["measurement"] = measurement_json(r.optimal_measurement);
  return doc.dump(2) + "\n";
}

std::string format_report_text(const CorrelationReport& r) {
  std::ostringstream os;
  os << "method: " << to_string(r.method) << "\n"
     << "rank: " << r.rank << "\n"
     << "I: " << format_number(r.mutual_information) << "\n"
     << "C: " << format_number(r.classical_correlation) << "\n"
     << "D: " << format_number(r.discord) << "\n"
     << "mae: " << format_number(r.mae) << "\n";
  if (r.mae_bounds) {
    os << "mae_bounds: [" << format_number(r.mae_bounds->lower) << ", "
       << format_number(r.mae_bounds->upper) << "]\n";
  }
  if (r.discord_interval) {
    os << "discord_bounds: [" << format_number(r.discord_interval->lower) << ", "
       << format_number(r.discord_interval->upper) << "]\n";
  }
  if (r.projective_mae) os << "mae_projective: " << format_number(*r.projective_mae) << "\n";
  if (r.povm3_mae) os << "mae_povm3: " << format_number(*r.povm3_mae) << "\n";
  if (r.complement_concurrence) {
    os << "complement_concurrence: " << format_number(*r.complement_concurrence) << "\n";
  }
  os << "S(A): " << format_number(r.entropy_a) << "\n"
     << "S(B): " << format_number(r.entropy_b) << "\n"
     << "S(AB): " << format_number(r.entropy_ab) << "\n"
     << measurement_text(r.optimal_measurement);
  return os.str();
}

std::string report_csv_header() {
  return "method,rank,I,C,D,mae,mae_lower,mae_upper,D_lower,D_upper,"
         "mae_projective,mae_povm3,complement_concurrence\n";
}

std::string format_report_csv(const CorrelationReport& r) {
  std::vector<std::string> cells{
      std::string(to_string(r.method)), std::to_string(r.rank),
      format_number(r.mutual_information), format_number(r.classical_correlation),
      format_number(r.discord), format_number(r.mae)};
  cells.push_back(r.mae_bounds ? format_number(r.mae_bounds->lower) : "");
  cells.push_back(r.mae_bounds ? format_number(r.mae_bounds->upper) : "");
  cells.push_back(r.discord_interval ? format_number(r.discord_interval->lower) : "");
  cells.push_back(r.discord_interval ? format_number(r.discord_interval->upper) : "");
  cells.push_back(optional_cell(r.projective_mae));
  cells.push_back(optional_cell(r.povm3_mae));
  cells.push_back(optional_cell(r.complement_concurrence));
  return csv_row(cells);
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  return out + "\n";
}

}  // namespace qcorr
