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

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"

using qcorr::cli::Command;
using qcorr::cli::Format;
using qcorr::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Quantum discord and classical correlation of two-qubit states"};
  app.require_subcommand(1);

  RunConfig config;
  std::string sampler_name;
  std::string format_name = "text";
  std::uint64_t seed = 0;
  int samples = 0;

  const std::map<std::string, Command> commands{
      {"discord", Command::Discord},
      {"ellipsoid", Command::Ellipsoid},
      {"kw-verify", Command::KwVerify},
      {"bench-delta", Command::BenchDelta},
      {"repro-example", Command::ReproExample},
  };
  const std::map<std::string, std::string> help{
      {"discord", "Correlation report for a state file"},
      {"ellipsoid", "Steering quadric and ellipsoid geometry of a state file"},
      {"kw-verify", "Projective MAE against complement EoF on rank-2 states"},
      {"bench-delta", "CSV of MAE bounds over sampled states"},
      {"repro-example", "Rank-three X state worked example"},
  };

  std::vector<CLI::App*> subs;
  for (const auto& [name, cmd] : commands) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--input", config.input, "State file (JSON)");
    sub->add_option("--out", config.output, "Output path (default stdout)");
    sub->add_option("--seed", seed, "RNG seed");
    sub->add_option("--samples", samples, "Sample count")->check(CLI::PositiveNumber);
    sub->add_option("--sampler", sampler_name, "State sampler")
        ->check(CLI::IsMember({"xstate", "general", "rank2"}));
    sub->add_option("--tol-rank", config.rank_tol, "Numerical rank tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qcorr::cli::kInvalidInput;
  }

  for (CLI::App* sub : subs) {
    if (!sub->parsed()) continue;
    config.command = commands.at(sub->get_name());
    if (sub->count("--seed")) config.seed = seed;
    if (sub->count("--samples")) config.samples = samples;
    if (sub->count("--sampler")) config.sampler = qcorr::parse_sampler(sampler_name);
  }
  config.format = format_name == "csv"    ? Format::Csv
                  : format_name == "json" ? Format::Json
                                          : Format::Text;
  return qcorr::cli::run(config, std::cout, std::cerr);
}
