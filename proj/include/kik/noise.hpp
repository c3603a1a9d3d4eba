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

#include <string>
#include <utility>
#include <vector>

#include "kik/dynamics.hpp"
#include "kik/types.hpp"

namespace kik {

struct NoiseSpec {
    enum class Kind { JumpOperators, PauliChannel, GlobalDepolarizing, Custom };

    Kind kind = Kind::JumpOperators;
    double xi = 0.0;  // overall strength scale, factored out for xi sweeps

    // JumpOperators
    std::vector<std::pair<HilbertOp, double>> jumps;
    // PauliChannel
    std::vector<std::pair<std::string, double>> pauli_terms;
    // GlobalDepolarizing: e^{G} at xi=1 maps rho -> (1-p) rho + p I/d
    double depolarizing_p = 0.0;
    Eigen::Index depolarizing_dim = 0;
    // Custom
    SuperOperator custom;
    bool non_trace_preserving = false;

    static NoiseSpec jump_operators(std::vector<std::pair<HilbertOp, double>> js, double xi);
    static NoiseSpec pauli_channel(std::vector<std::pair<std::string, double>> terms, double xi);
    static NoiseSpec global_depolarizing(double p, Eigen::Index d, double xi);
    static NoiseSpec custom_generator(SuperOperator g, double xi, bool non_tp = false);

    // Number of independently driftable terms.
    int term_count() const;
};

SuperOperator build_generator(const NoiseSpec& spec);

// Per-term amplitude waveform, sampled at integer shot indices.
struct Waveform {
    enum class Kind { Constant, Sinusoid };
    Kind kind = Kind::Constant;
    double value = 1.0;                       // Constant
    double scale = 1.0, offset = 1.0;         // Sinusoid: scale*(offset + trig(omega*t + phase))
    double omega = 0.0, phase = 0.0;
    bool use_sin = false;                     // cos by default

    double operator()(double t) const;

    static Waveform constant(double c) {
        Waveform w;
        w.kind = Kind::Constant;
        w.value = c;
        return w;
    }
    static Waveform cosine(double scale, double offset, double omega, double phase = 0.0) {
        Waveform w;
        w.kind = Kind::Sinusoid;
        w.scale = scale;
        w.offset = offset;
        w.omega = omega;
        w.phase = phase;
        return w;
    }
    static Waveform sine(double scale, double offset, double omega, double phase = 0.0) {
        Waveform w = cosine(scale, offset, omega, phase);
        w.use_sin = true;
        return w;
    }
};

struct DriftProfile {
    std::vector<Waveform> amplitudes;  // one per noise term; empty = all constant 1

    std::vector<double> sample(double t, int n_terms) const;
};

// Generator for one shot: Σ_k xi f_k(n) L_k with n the shot index.
SuperOperator drift_sampled_generator(const NoiseSpec& spec, const DriftProfile& profile,
                                      long shot_index);

// Σ_j Δt_j σ_max(L_j), the integrated spectral norm of the dissipator.
double accumulated_noise(const PulseSchedule& sched);
double spectral_norm(const CMatrix& m);

}  // namespace kik
