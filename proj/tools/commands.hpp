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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "qcorr/sampling.hpp"

namespace qcorr::cli {

enum class Command { Discord, Ellipsoid, KwVerify, BenchDelta, ReproExample };
enum class Format { Text, Csv, Json };

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kIoFailure = 3;

struct RunConfig {
  Command command = Command::Discord;
  std::optional<std::string> input;
  std::optional<std::string> output;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::optional<Sampler> sampler;
  double rank_tol = 1e-10;
  Format format = Format::Text;
};

/// Every command writes its result to `out` (or to config.output when set)
/// and diagnostics to `log`, and returns an exit code.
int cmd_discord(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_ellipsoid(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_kw_verify(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_bench_delta(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_repro_example(const RunConfig& config, std::ostream& out, std::ostream& log);

int run(const RunConfig& config, std::ostream& out, std::ostream& log);

}  // namespace qcorr::cli
