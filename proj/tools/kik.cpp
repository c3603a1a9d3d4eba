// Copyright 2026 The kik authors
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
#include <string>

#include <CLI11.hpp>

#include "kik/config.hpp"
#include "kik/scenarios.hpp"

int main(int argc, char** argv) {
    CLI::App app{"KIK quantum-error-mitigation scenario runner"};
    app.require_subcommand(1);

    std::string config_path, out_path, format;
    uint64_t seed = 0;
    bool have_seed = false;
    int threads = 0;
    bool timing = false;

    auto* run = app.add_subcommand("run", "Run a scenario config and write results");
    run->add_option("config", config_path, "scenario config file")->required();
    run->add_option("--out", out_path, "output path (overrides [output] path)");
    run->add_option("--format", format, "csv or json (overrides [output] format)")
        ->check(CLI::IsMember({"csv", "json"}));
    run->add_option("--seed", seed, "seed override (wins over KIK_SEED and config)")
        ->each([&](const std::string&) { have_seed = true; });
    run->add_option("--threads", threads, "linear-algebra thread count");
    run->add_flag("--timing", timing, "fill wall_ms with measured timings");

    std::string kind;
    auto* emit = app.add_subcommand("emit-default", "Print a runnable default config");
    emit->add_option("scenario", kind, "one of: ising, cnot_calib, swap_chain, drift, saturation, bounds_sweep")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (emit->parsed()) {
            std::cout << kik::default_config(kind).emit();
            return 0;
        }
        kik::ConfigTree cfg = kik::ConfigTree::parse_file(config_path);
        kik::RunOptions opts;
        if (have_seed) opts.seed_override = seed;
        opts.threads = threads;
        opts.timing = timing;
        auto results = kik::run_scenario(cfg, opts);
        std::string path = out_path.empty() ? cfg.get("output", "path") : out_path;
        std::string fmt = format.empty() ? cfg.get_or("output", "format", "csv") : format;
        kik::write_outputs(cfg, results, path, fmt);
        std::cerr << "wrote " << results.size() << " records to " << path << "\n";
        return 0;
    } catch (const kik::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const kik::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
