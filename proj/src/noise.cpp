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

#include "kik/noise.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace kik {

NoiseSpec NoiseSpec::jump_operators(std::vector<std::pair<HilbertOp, double>> js, double xi) {
    if (xi < 0) throw InvalidSpec("NoiseSpec: xi must be >= 0");
    for (const auto& [a, rate] : js)
        if (rate < 0) throw NegativeRate("NoiseSpec: negative jump rate");
    NoiseSpec s;
    s.kind = Kind::JumpOperators;
    s.xi = xi;
    s.jumps = std::move(js);
    return s;
}

NoiseSpec NoiseSpec::pauli_channel(std::vector<std::pair<std::string, double>> terms, double xi) {
    if (xi < 0) throw InvalidSpec("NoiseSpec: xi must be >= 0");
    for (const auto& [p, alpha] : terms)
        if (alpha < 0) throw InvalidSpec("NoiseSpec: negative Pauli-channel alpha");
    NoiseSpec s;
    s.kind = Kind::PauliChannel;
    s.xi = xi;
    s.pauli_terms = std::move(terms);
    return s;
}

NoiseSpec NoiseSpec::global_depolarizing(double p, Eigen::Index d, double xi) {
    if (p < 0 || p > 1) throw InvalidSpec("NoiseSpec: depolarizing p must be in [0,1]");
    if (xi < 0) throw InvalidSpec("NoiseSpec: xi must be >= 0");
    NoiseSpec s;
    s.kind = Kind::GlobalDepolarizing;
    s.xi = xi;
    s.depolarizing_p = p;
    s.depolarizing_dim = d;
    return s;
}

NoiseSpec NoiseSpec::custom_generator(SuperOperator g, double xi, bool non_tp) {
    if (xi < 0) throw InvalidSpec("NoiseSpec: xi must be >= 0");
    if (!non_tp && !g.annihilates_trace(1e-12))
        throw InvalidSpec("NoiseSpec: custom generator does not annihilate <I| "
                          "(flag non_trace_preserving to allow)");
    NoiseSpec s;
    s.kind = Kind::Custom;
    s.xi = xi;
    s.custom = std::move(g);
    s.non_trace_preserving = non_tp;
    return s;
}

int NoiseSpec::term_count() const {
    switch (kind) {
        case Kind::JumpOperators: return int(jumps.size());
        case Kind::PauliChannel: return int(pauli_terms.size());
        default: return 1;
    }
}

namespace {

SuperOperator depolarizing_generator(double p, Eigen::Index d) {
    // ln of the channel rho -> (1-p) rho + p I/d: the traceless subspace gets
    // ln(1-p), the identity component 0.
    if (p >= 1) throw InvalidSpec("depolarizing generator undefined at p = 1");
    CMatrix id = CMatrix::Identity(d, d);
    CVector vec_id(d * d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) vec_id(i * d + j) = id(i, j);
    CMatrix proj = vec_id * vec_id.adjoint() / double(d);
    CMatrix g = std::log(1.0 - p) * (CMatrix::Identity(d * d, d * d) - proj);
    return SuperOperator(d, std::move(g));
}

}  // namespace

SuperOperator build_generator(const NoiseSpec& spec) {
    switch (spec.kind) {
        case NoiseSpec::Kind::JumpOperators: {
            SuperOperator g = lindblad_superop(spec.jumps);
            g.mat *= spec.xi;
            return g;
        }
        case NoiseSpec::Kind::PauliChannel: {
            SuperOperator g = pauli_channel_superop(spec.pauli_terms);
            g.mat *= spec.xi;
            return g;
        }
        case NoiseSpec::Kind::GlobalDepolarizing: {
            SuperOperator g = depolarizing_generator(spec.depolarizing_p, spec.depolarizing_dim);
            g.mat *= spec.xi;
            return g;
        }
        case NoiseSpec::Kind::Custom: {
            SuperOperator g = spec.custom;
            g.mat *= spec.xi;
            return g;
        }
    }
    throw InvalidSpec("build_generator: unknown kind");
}

double Waveform::operator()(double t) const {
    if (kind == Kind::Constant) return value;
    double trig = use_sin ? std::sin(omega * t + phase) : std::cos(omega * t + phase);
    return scale * (offset + trig);
}

std::vector<double> DriftProfile::sample(double t, int n_terms) const {
    std::vector<double> f(n_terms, 1.0);
    if (!amplitudes.empty()) {
        if (int(amplitudes.size()) != n_terms)
            throw InvalidSpec("DriftProfile: amplitude count does not match noise terms");
        for (int k = 0; k < n_terms; ++k) {
            f[k] = amplitudes[k](t);
            if (f[k] < 0)
                throw InvalidSpec("DriftProfile: negative amplitude sample");
        }
    }
    return f;
}

SuperOperator drift_sampled_generator(const NoiseSpec& spec, const DriftProfile& profile,
                                      long shot_index) {
    if (shot_index < 0) throw InvalidSpec("drift_sampled_generator: negative shot index");
    double t = double(shot_index);
    std::vector<double> f = profile.sample(t, spec.term_count());
    switch (spec.kind) {
        case NoiseSpec::Kind::JumpOperators: {
            std::vector<std::pair<HilbertOp, double>> scaled = spec.jumps;
            for (size_t k = 0; k < scaled.size(); ++k) scaled[k].second *= f[k];
            SuperOperator g = lindblad_superop(scaled);
            g.mat *= spec.xi;
            return g;
        }
        case NoiseSpec::Kind::PauliChannel: {
            std::vector<std::pair<std::string, double>> scaled = spec.pauli_terms;
            for (size_t k = 0; k < scaled.size(); ++k) scaled[k].second *= f[k];
            SuperOperator g = pauli_channel_superop(scaled);
            g.mat *= spec.xi;
            return g;
        }
        default: {
            SuperOperator g = build_generator(spec);
            g.mat *= f[0];
            return g;
        }
    }
}

double spectral_norm(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues().maxCoeff();
}

double accumulated_noise(const PulseSchedule& sched) {
    double acc = 0.0;
    for (const auto& seg : sched.segments)
        acc += seg.duration * spectral_norm(seg.dissipator.mat);
    return acc;
}

}  // namespace kik
