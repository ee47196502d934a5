/*
 Copyright 2026 The reachwarp Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#ifndef REACHWARP_TOOLS_COMMANDS_HPP
#define REACHWARP_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace reachwarp::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitBadInput = 2,
    kExitNumeric = 3,
};

struct CommandOptions {
    /// Path to a JSON config, or the name of an embedded fixture (with or
    /// without a .json suffix) when no such file exists.
    std::string config;
    /// "nominal", "optimized" or a path to a JSON matrix file.
    std::string b_choice = "nominal";
    std::optional<std::size_t> samples;
    std::optional<std::size_t> steps;
    std::optional<std::size_t> directions;
    std::optional<std::uint64_t> seed;
    std::filesystem::path out_dir = ".";
    std::string emit;
};

/// Writes warp_result.json and manifest.json.
int cmd_optimize(const CommandOptions& opts, std::ostream& out, std::ostream& err);

/// Writes boundary.csv (one row per sweep direction) and manifest.json.
int cmd_boundary(const CommandOptions& opts, std::ostream& out, std::ostream& err);

/// Prints "G_d = <value>" and writes metric.json and manifest.json.
int cmd_metric(const CommandOptions& opts, std::ostream& out, std::ostream& err);

/// Writes verdict.json and manifest.json. Exit 1 only when a theorem-regime
/// check fails; heuristic regimes always exit 0.
int cmd_verify(const CommandOptions& opts, std::ostream& out, std::ostream& err);

/// Sweeps nominal and optimized B over the same directions; writes
/// comparison.csv and a manifest with the number of directions that grew.
int cmd_compare(const CommandOptions& opts, std::ostream& out, std::ostream& err);

/// Lists embedded fixtures, or writes <out>/<emit>.json when `emit` is set.
int cmd_fixtures(const CommandOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace reachwarp::cli

#endif  // REACHWARP_TOOLS_COMMANDS_HPP
