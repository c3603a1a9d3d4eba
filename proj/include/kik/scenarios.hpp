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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kik/config.hpp"
#include "kik/types.hpp"

namespace kik {

// One flat output record. bound/extra fields stay empty where a scenario does
// not produce them; wall_ms is zero unless timing is enabled so that equal
// config + seed gives byte-identical output.
struct ScenarioResult {
    std::string scenario;
    std::string params;      // "key=value;key=value"
    int order = 0;           // M
    std::string g_choice;    // taylor | mu | mu^p
    double g_value = 1.0;
    double estimate = 0.0;
    double ideal = 0.0;
    double bias = 0.0;
    double variance = 0.0;
    double bound16 = std::numeric_limits<double>::quiet_NaN();
    double bound17 = std::numeric_limits<double>::quiet_NaN();
    double bound18 = std::numeric_limits<double>::quiet_NaN();
    std::string extra;       // scenario-specific "key=value;..."
    double wall_ms = 0.0;
    uint64_t seed = 0;
    std::string config_hash;
};

struct RunOptions {
    std::optional<uint64_t> seed_override;
    int threads = 0;      // 0 = leave the Eigen default
    bool timing = false;  // fill wall_ms with measured values
};

// Scenario kinds: ising, cnot_calib, swap_chain, drift, saturation, bounds_sweep.
ConfigTree default_config(const std::string& kind);
std::vector<std::string> scenario_kinds();

std::vector<ScenarioResult> run_scenario(const ConfigTree& cfg, const RunOptions& opts = {});

std::vector<ScenarioResult> run_ising(const ConfigTree& cfg, uint64_t seed);
std::vector<ScenarioResult> run_cnot_calibration(const ConfigTree& cfg, uint64_t seed);
std::vector<ScenarioResult> run_swap_chain(const ConfigTree& cfg, uint64_t seed);
std::vector<ScenarioResult> run_drift(const ConfigTree& cfg, uint64_t seed);
std::vector<ScenarioResult> run_saturation(const ConfigTree& cfg, uint64_t seed);
std::vector<ScenarioResult> run_bounds_sweep(const ConfigTree& cfg, uint64_t seed);

// Fixed header, 17 significant digits, RFC-4180 quoting, records sorted by a
// canonical key.
std::string to_csv(std::vector<ScenarioResult> records);
std::string to_json(std::vector<ScenarioResult> records);

// Writes the result file plus a JSON sidecar with the resolved config at
// <path>.config.json.
void write_outputs(const ConfigTree& cfg, const std::vector<ScenarioResult>& records,
                   const std::string& path, const std::string& format);

// GChoice spelled as in configs: "taylor", "mu", "mu^2", "mu^2.5".
struct NamedGChoice {
    std::string name;
    double power = 0.0;  // 0 means taylor
    bool taylor() const { return power == 0.0; }
};
NamedGChoice parse_g_choice(const std::string& s);

}  // namespace kik
