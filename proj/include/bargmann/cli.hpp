// Copyright 2026 The bargmann-phase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BARGMANN_CLI_HPP
#define BARGMANN_CLI_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bargmann/pfunction.hpp"

namespace bargmann::cli {

enum class OutputFormat { csv, json };

/// Exit codes: 0 all methods agree, 1 usage or I/O error, 2 numerical disagreement.
inline constexpr int kExitPass = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDisagreement = 2;

struct RunConfig {
    int n_max = 25;
    double tolerance = 1e-6;
    std::uint64_t seed = 20261015;
    std::optional<OutputFormat> output_format;
    std::vector<double> theta1;
    std::vector<double> theta2;
    /// Each entry is (q1, p1, q2, p2); one entry is a shift, three are an explicit triangle.
    std::vector<std::array<double, 4>> centers;
    Occupation occupation{1, 1};
    /// Sweep grid size: theta_k = k pi / grid for k < grid, used when no angle list is given.
    int grid = 0;
    int random_configurations = 10;
    std::optional<std::string> out_path;
    std::optional<std::string> pfunc_path;
};

/// Throws std::invalid_argument when the config violates n_max >= 5 or tolerance > 0.
void validate_config(const RunConfig& config);

int cmd_phase(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_pfunc(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and dispatches to a subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bargmann::cli

#endif  // BARGMANN_CLI_HPP
