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

#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "qwitness/errors.hpp"
#include "qwitness/experiments.hpp"
#include "qwitness/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qwitness: checks for mediator-based non-classicality witnesses"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string config_path;
    std::uint64_t seed = 0;
    std::string out_dir;
    double eta = 0.0;
    std::size_t n = 0, db = 0, budget = 0;
    unsigned workers = 0;
    auto *o_config = app.add_option("--config", config_path, "JSON run config")->check(CLI::ExistingFile);
    auto *o_seed = app.add_option("--seed", seed, "RNG seed");
    auto *o_out = app.add_option("--out", out_dir, "output directory (overrides QWITNESS_OUT_DIR)");
    auto *o_eta = app.add_option("--eta", eta, "homogenizer coupling");
    auto *o_n = app.add_option("--n", n, "homogenizer reservoir size")->check(CLI::PositiveNumber);
    auto *o_db = app.add_option("--db", db, "oscillator truncation")->check(CLI::Range(2, 64));
    auto *o_budget = app.add_option("--budget", budget, "cap on evaluated search samples");
    auto *o_workers = app.add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 256));
    (void)o_config;

    for (const auto &name : qw::experiment_names()) {
        app.add_subcommand(name, name == "all" ? "run every experiment" : "run the " + name + " experiment");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    qw::RunConfig cfg;
    try {
        if (!config_path.empty()) cfg = qw::load_config(config_path);
        cfg.experiment = app.get_subcommands().front()->get_name();
        if (const char *env = std::getenv("QWITNESS_OUT_DIR"); env && *env) cfg.out_dir = env;
        if (*o_out) cfg.out_dir = out_dir;
        if (*o_seed) cfg.seed = seed;
        if (*o_eta) cfg.homogenize.eta = eta;
        if (*o_n) cfg.homogenize.n = n;
        if (*o_db) cfg.oscillator.truncations = {db};
        if (*o_budget) cfg.witness.budget = cfg.reservoir.budget = budget;
        if (*o_workers) cfg.workers = workers;
    } catch (const qw::ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitUsage;
    }

    qw::ExperimentResult result;
    try {
        result = qw::run_experiment(cfg);
    } catch (const qw::ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error &e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    for (const auto &c : result.checks) {
        std::printf("%-6s %-44s %s", c.pass ? "PASS" : "FAIL", c.name.c_str(), qw::format_double(c.value).c_str());
        if (c.relation != "report") std::printf(" %s %s", c.relation.c_str(), qw::format_double(c.threshold).c_str());
        std::printf("\n");
    }
    std::printf("artifacts in %s\n", cfg.out_dir.string().c_str());
    return result.all_passed() ? kExitPass : kExitCheckFailed;
}
