// Copyright 2026 The qwitness Authors
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

#ifndef QWITNESS_EXPERIMENTS_HPP
#define QWITNESS_EXPERIMENTS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace qw {

inline constexpr int kSchemaVersion = 1;

/// Bad configuration. `path` names the offending field, e.g. "$.witness.budget".
class ConfigError : public std::runtime_error {
   public:
    ConfigError(std::string path, const std::string &what)
        : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
    const std::string &path() const { return path_; }

   private:
    std::string path_;
};

struct RunConfig {
    std::string experiment = "all";
    std::uint64_t seed = 0;
    std::filesystem::path out_dir = "qwitness_out";
    unsigned workers = 1;

    struct Tolerances {
        double pauli = 1e-12;
        double symbolic = 1e-13;
        double state = 1e-10;
        double unitary = 1e-10;
    } tol;

    struct Witness {
        double theta = 1.5707963267948966;
        std::size_t grid_points = 9;
        std::size_t time_points = 64;
        std::size_t random_draws = 10000;
        std::optional<std::size_t> budget;
        std::size_t mediator_draws = 100;
        std::size_t state_draws = 100;
        double gap_threshold = 0.5;
    } witness;

    struct Homogenize {
        double eta = 0.4;
        std::size_t n = 20;
    } homogenize;

    struct Reservoir {
        std::size_t n = 10;
        std::size_t grid_points = 9;
        std::size_t random_draws = 1000;
        std::optional<std::size_t> budget;
        double distance_threshold = 0.1;
    } reservoir;

    struct Oscillator {
        std::vector<std::size_t> truncations{2, 3, 8};
        double t_max = 6.283185307179586;
        std::size_t t_points = 65;
    } oscillator;
};

/// Strict parse: unknown keys, wrong types and a missing or different
/// schema_version are ConfigErrors.
RunConfig parse_config(const nlohmann::json &j, RunConfig base = {});
/// Reads and parses a JSON file; syntax errors carry line and column.
RunConfig load_config(const std::filesystem::path &path, RunConfig base = {});

const std::vector<std::string> &experiment_names();

struct Check {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    std::string relation;  // "<", ">" or "report"
    bool pass = true;
    std::string anchor;
};

struct ExperimentResult {
    std::string experiment;
    std::vector<Check> checks;
    std::vector<std::string> artifacts;  // file names relative to out_dir

    bool all_passed() const;
    nlohmann::json summary(const RunConfig &config) const;
};

/// Runs one subcommand, writes its CSV/JSON artifacts plus summary.json into
/// config.out_dir. Output bytes depend only on the config, never on the
/// worker count.
ExperimentResult run_experiment(const RunConfig &config);

}  // namespace qw

#endif
