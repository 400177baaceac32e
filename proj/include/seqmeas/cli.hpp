// Copyright 2026 The seqmeas Authors
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqmeas/measurement_model.hpp"
#include "seqmeas/report_io.hpp"

namespace seqmeas::cli {

enum class Command { Sweep, Crossings, MonteCarlo, Reconstruct, Lgi };

struct RunConfig {
    Command command = Command::Sweep;
    SetupParams setup{};  // theta_deg used by `reconstruct`
    double input_angle_deg = kDefaultInputAngleDeg;
    double theta_min = 0.0;
    double theta_max = kMaxThetaDeg;
    int steps = 46;
    double lambda = 1.0;
    std::uint64_t n_photons = 1'000'000;
    std::uint64_t seed = 1;
    bool simulate_prior = false;
    std::string output = "-";
    io::Format format = io::Format::Csv;
};

/// Bad flags or config-file contents. Exit status 2.
class UsageError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// --help was given; what() holds the help text. Exit status 0.
class HelpRequested : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name. Command-line flags override values from
/// --config, which override the built-in defaults.
RunConfig parse_config(const std::vector<std::string>& args);

/// Runs the command and returns the rendered artifact.
std::string execute(const RunConfig& config);

/// Full CLI entry point: parse, execute, write. Returns the exit status.
int main(const std::vector<std::string>& args);

}  // namespace seqmeas::cli
