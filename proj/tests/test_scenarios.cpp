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

#include <doctest.h>

#include <cmath>
#include <map>

#include "kik/scenarios.hpp"

using namespace kik;

namespace {

std::map<std::pair<int, std::string>, ScenarioResult> by_order_g(
    const std::vector<ScenarioResult>& rs) {
    std::map<std::pair<int, std::string>, ScenarioResult> m;
    for (const auto& r : rs) m[{r.order, r.g_choice}] = r;
    return m;
}

double extra_value(const ScenarioResult& r, const std::string& key) {
    std::string token = key + "=";
    size_t pos = 0;
    while (pos < r.extra.size()) {
        size_t end = r.extra.find(';', pos);
        if (end == std::string::npos) end = r.extra.size();
        std::string item = r.extra.substr(pos, end - pos);
        if (item.rfind(token, 0) == 0) return std::stod(item.substr(token.size()));
        pos = end + 1;
    }
    throw std::runtime_error("extra key not found: " + key);
}

}  // namespace

TEST_CASE("tiny ising run keeps the qualitative adaptive ordering") {
    ConfigTree cfg = default_config("ising");
    cfg.set("scenario", "qubits", "2");
    cfg.set("noise", "xi_list", "0.02");
    cfg.set("mitigation", "orders", "1");
    auto rs = run_scenario(cfg);
    auto m = by_order_g(rs);
    double f_taylor = m.at({1, "taylor"}).estimate;
    double f_mu = m.at({1, "mu"}).estimate;
    double f_mu2 = m.at({1, "mu^2"}).estimate;
    double f0 = m.at({0, "taylor"}).estimate;
    CHECK(f_mu2 >= f_mu - 1e-9);
    CHECK(f_mu >= f_taylor - 1e-9);
    CHECK(f_taylor > f0);
}

TEST_CASE("cnot calibration reproduces the reported tables") {
    ConfigTree cfg = default_config("cnot_calib");
    auto rs = run_scenario(cfg);
    std::map<std::pair<double, int>, ScenarioResult> m;
    for (const auto& r : rs) {
        double xi = extra_value(r, "f0") >= 0 ? 0 : 0;  // placeholder, params parsed below
        (void)xi;
    }
    // index by (xi from params, order)
    std::map<std::pair<std::string, int>, ScenarioResult> mm;
    for (const auto& r : rs) mm[{r.params, r.order}] = r;

    const std::string p02 = "xi=0.02;chain=11", p01 = "xi=0.01;chain=11";
    // amplitudes approach 1 monotonically and fidelities reproduce the tables
    const double f0_02[5] = {0.967325, 0.997270, 0.999692, 0.999934, 0.999961};
    const double fm_02[5] = {0.967325, 0.997298, 0.999725, 0.999968, 0.999996};
    const double frc_02[5] = {0.967325, 0.997388, 0.999743, 0.999972, 0.999997};
    const double f0_01[5] = {0.983434, 0.999288, 0.999954, 0.999989, 0.999991};
    const double fm_01[5] = {0.983434, 0.999296, 0.999963, 0.999998, 1.000000};
    const double frc_01[5] = {0.983434, 0.999320, 0.999965, 0.999998, 1.000000};
    double prev_a = 0.0, prev_f = 0.0;
    for (int m_order = 0; m_order <= 4; ++m_order) {
        const auto& r = mm.at({p02, m_order});
        CHECK(r.estimate > prev_a);
        prev_a = r.estimate;
        double fm = extra_value(r, "fm");
        CHECK(fm >= prev_f - 1e-12);
        prev_f = fm;
        CHECK(std::abs(extra_value(r, "f0") - f0_02[m_order]) <= 1e-5);
        CHECK(std::abs(fm - fm_02[m_order]) <= 1e-5);
        CHECK(std::abs(extra_value(r, "f0_rc") - frc_02[m_order]) <= 1e-5);
        const auto& r1 = mm.at({p01, m_order});
        CHECK(std::abs(extra_value(r1, "f0") - f0_01[m_order]) <= 1e-5);
        CHECK(std::abs(extra_value(r1, "fm") - fm_01[m_order]) <= 1e-5);
        CHECK(std::abs(extra_value(r1, "f0_rc") - frc_01[m_order]) <= 1e-5);
    }
    // calibrated amplitudes against the reported values; the reproduction
    // tolerance here is 2e-5 (see the acceptance suite for the strict check)
    const double a_02[5] = {0.991671, 0.996210, 0.998235, 0.999181, 0.999631};
    const double a_01[5] = {0.995830, 0.998836, 0.999673, 0.999909, 0.999977};
    for (int m_order = 0; m_order <= 4; ++m_order) {
        CHECK(std::abs(mm.at({p02, m_order}).estimate - a_02[m_order]) <= 2e-5);
        CHECK(std::abs(mm.at({p01, m_order}).estimate - a_01[m_order]) <= 2e-5);
    }
}

TEST_CASE("cnot calibration rejects degenerate grids") {
    ConfigTree cfg = default_config("cnot_calib");
    cfg.set("scenario", "amplitude_points", "1");
    CHECK_THROWS_AS(run_scenario(cfg), RegressionDegenerate);
}

TEST_CASE("swap chain is exact without noise and favors adapted mitigation") {
    ConfigTree cfg = default_config("swap_chain");
    cfg.set("noise", "alpha", "0");
    cfg.set("scenario", "initial_states", "00");
    auto rs = run_scenario(cfg);
    for (const auto& r : rs) CHECK(std::abs(r.estimate - 1.0) <= 1e-9);

    ConfigTree noisy = default_config("swap_chain");
    noisy.set("scenario", "initial_states", "00, 11");
    auto rs2 = run_scenario(noisy);
    std::map<std::pair<std::string, std::pair<int, std::string>>, double> bias;
    for (const auto& r : rs2) bias[{r.params, {r.order, r.g_choice}}] = r.bias;
    for (const auto& [key, b] : bias) {
        if (key.second.second != "mu^2") continue;
        double taylor_bias = bias.at({key.first, {key.second.first, "taylor"}});
        CHECK(b <= taylor_bias + 1e-12);
    }
}

TEST_CASE("block-level rc halves the coherent-overrotation bias at M=3") {
    ConfigTree base = default_config("swap_chain");
    base.set("scenario", "initial_states", "00");
    base.set("scenario", "overrotation", "0.01");
    base.set("mitigation", "orders", "3");
    base.set("mitigation", "g_choices", "mu^2");
    auto plain = run_scenario(base);

    ConfigTree with_rc = default_config("swap_chain");
    with_rc.set("scenario", "initial_states", "00");
    with_rc.set("scenario", "overrotation", "0.01");
    with_rc.set("scenario", "rc", "true");
    with_rc.set("mitigation", "orders", "3");
    with_rc.set("mitigation", "g_choices", "mu^2");
    auto rc = run_scenario(with_rc);

    CHECK(rc.front().bias <= 0.5 * plain.front().bias);
}

TEST_CASE("drift scenario converges with the number of sets") {
    ConfigTree cfg = default_config("drift");
    cfg.set("scenario", "shots", "300");
    cfg.set("noise", "drift_period_shots", "300");
    cfg.set("scenario", "sets_list", "1, 10");
    cfg.set("mitigation", "orders", "2");
    auto rs = run_scenario(cfg);
    std::map<long, double> dev;
    for (const auto& r : rs) {
        long sets = r.params.find("sets=1;") != std::string::npos ? 1 : 10;
        dev[sets] = r.bias;
    }
    CHECK(dev.at(10) < dev.at(1));
}

TEST_CASE("saturation run decreases then plateaus") {
    ConfigTree cfg = default_config("saturation");
    auto rs = run_scenario(cfg);
    std::map<int, double> rel;
    for (const auto& r : rs) rel[r.order] = extra_value(r, "rel_err");
    CHECK(rel.at(3) <= 5e-4);
    CHECK(rel.at(1) < rel.at(0));
    CHECK(rel.at(2) < rel.at(1));
    CHECK(rel.at(8) <= 3.0 * rel.at(5));
}

TEST_CASE("bounds sweep flags hold across the grid") {
    ConfigTree cfg = default_config("bounds_sweep");
    auto rs = run_scenario(cfg);
    bool saw_dephasing = false, saw_zero = false;
    for (const auto& r : rs) {
        if (r.params.find("case=dephasing") != std::string::npos) {
            saw_dephasing = true;
            CHECK(extra_value(r, "min_eig_ratio") == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(extra_value(r, "ordering_ok") == 1.0);
            continue;
        }
        CHECK(extra_value(r, "ordering_ok") == 1.0);
        CHECK(extra_value(r, "min_eig_ok") == 1.0);
        CHECK(extra_value(r, "bias_within_loose") == 1.0);
        if (r.params.find("xi=0;") != std::string::npos) {
            saw_zero = true;
            CHECK(r.bias <= 1e-10);
            CHECK(r.bound18 <= 1e-12);
        }
    }
    CHECK(saw_dephasing);
    CHECK(saw_zero);
}

TEST_CASE("csv output is deterministic and carries the fixed header") {
    ConfigTree cfg = default_config("saturation");
    auto r1 = run_scenario(cfg);
    auto r2 = run_scenario(cfg);
    CHECK(to_csv(r1) == to_csv(r2));
    std::string csv = to_csv(r1);
    CHECK(csv.rfind("scenario,params,M,g_choice,g_value,estimate,ideal,bias,variance,"
                    "bound16,bound17,bound18,extra,wall_ms,seed,config_hash\n",
                    0) == 0);
}

TEST_CASE("csv quoting follows rfc 4180") {
    ScenarioResult r;
    r.scenario = "demo";
    r.params = "note=a,b";
    r.extra = "quote=\"x\"";
    std::string csv = to_csv({r});
    CHECK(csv.find("\"note=a,b\"") != std::string::npos);
    CHECK(csv.find("\"quote=\"\"x\"\"\"") != std::string::npos);
}

TEST_CASE("seed override wins over the config seed") {
    ConfigTree cfg = default_config("saturation");
    RunOptions opts;
    opts.seed_override = 9999;
    auto rs = run_scenario(cfg, opts);
    CHECK(rs.front().seed == 9999);
}
