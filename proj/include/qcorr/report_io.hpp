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

#include <string>
#include <vector>

#include "qcorr/discord.hpp"

namespace qcorr {

/// %.12g formatting used by every text and CSV output.
std::string format_number(double x);

/// Pretty-printed JSON with keys I, C, D, mae, method, bounds, discord_bounds,
/// entropies, rank and measurement (weights and directions). Doubles are
/// written with round-trip precision.
std::string format_report_json(const CorrelationReport& r);

/// One "key: value" line per field.
std::string format_report_text(const CorrelationReport& r);

/// Header and row for the single-report CSV layout.
std::string report_csv_header();
std::string format_report_csv(const CorrelationReport& r);

/// Joins already formatted cells with commas.
std::string csv_row(const std::vector<std::string>& cells);

}  // namespace qcorr
