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

#include "kik/coefficients.hpp"
#include "kik/dynamics.hpp"
#include "kik/noise.hpp"
#include "kik/types.hpp"

namespace kik {

struct FoldedEstimates {
    enum class Mode { Exact, Sampled };

    int order = 0;
    std::vector<double> means;      // <A>_m, size M+1
    std::vector<double> variances;  // Var(<A>_m); zero in Exact mode
    std::vector<long> shots;        // N_m; zero in Exact mode
    Mode mode = Mode::Exact;
    uint64_t seed = 0;
};

struct MitigatedResult {
    double estimate = 0.0;
    double variance = 0.0;
    CoefficientSet coefficients;
    double mu = 1.0;
    double g = 1.0;
    FoldedEstimates folds;
};

// Pauli dressings around each evolution block of one folded circuit. The
// composed noiseless circuit must equal the original logical unitary.
struct RCRealization {
    std::vector<std::string> pre;   // one Pauli string per block
    std::vector<std::string> post;
};

// Column-stochastic matrix of readout probabilities p(l|k).
struct MeasurementMatrix {
    int n_qubits = 0;
    RMatrix mat;

    MeasurementMatrix() = default;
    MeasurementMatrix(int n, RMatrix m);
    // Independent per-qubit error rates p(1|0), p(0|1).
    static MeasurementMatrix from_per_qubit(const std::vector<std::pair<double, double>>& rates);

    Eigen::VectorXd distort(const Eigen::VectorXd& p) const;
    Eigen::VectorXd correct(const Eigen::VectorXd& q) const;  // applies the inverse
    const RMatrix& inverse() const;

   private:
    mutable RMatrix inv_;
    mutable bool have_inv_ = false;
};

// Observable diagonal in the measured (computational) basis; any change of
// basis must be folded into the schedule as a pre-measurement rotation.
struct DiagonalObservable {
    Eigen::VectorXd values;  // one eigenvalue per basis state
};

// sched ∥ (pulse_inverse(sched) ∥ sched) x m; total time (2m+1) T.
PulseSchedule folded_schedule(const PulseSchedule& sched, int m);

// mu = Re <rho_dual| K_I K |rho>.
double survival_probability(const PulseSchedule& sched, const VecState& rho);
double survival_probability(const SuperOperator& cycle, const VecState& rho);

MitigatedResult mitigate_exact(const PulseSchedule& sched, const VecObservable& a,
                               const VecState& rho, int order, const GChoice& g);
// Same combination on precomputed propagators (used by the scenario drivers).
MitigatedResult mitigate_exact(const SuperOperator& k, const SuperOperator& k_inv,
                               const VecObservable& a, const VecState& rho, int order,
                               const GChoice& g);

// N_m = round(|a_m| N / Σ|a_m|), largest-remainder correction, every N_m >= 1.
std::vector<long> allocate_shots(const CoefficientSet& coeffs, long total);

struct RCPolicy {
    int realizations = 16;
};

// One Pauli dressing per block, drawn independently per block and realization;
// post layers are the conjugations of the pre layers through the block's
// logical unitary. When count == 4^n and there is a single block the table is
// enumerated instead of sampled.
std::vector<RCRealization> rc_realizations(const std::vector<HilbertOp>& block_logicals,
                                           int count, uint64_t seed);

// Uniform average of the dressed compositions.
SuperOperator twirl_average(const std::vector<SuperOperator>& blocks,
                            const std::vector<HilbertOp>& block_logicals,
                            const std::vector<RCRealization>& realizations);
// Blocks given as spans of schedule segments: boundaries are segment indices
// starting each block ({0, ...}).
SuperOperator twirl_average(const PulseSchedule& sched, const std::vector<int>& block_starts,
                            const std::vector<RCRealization>& realizations);

struct SampledOptions {
    std::optional<RCPolicy> rc;
    std::optional<MeasurementMatrix> readout;
};
MitigatedResult mitigate_sampled(const PulseSchedule& sched, const DiagonalObservable& a,
                                 const VecState& rho, int order, const GChoice& g, long total_shots,
                                 uint64_t seed, const SampledOptions& opts = {});

// Equal mixture over R_Z(±pi/2) conjugations of the imperfect product state:
// per-qubit populations cos^2(dtheta/2), all single-qubit coherences removed.
VecState rotation_averaged_state(const std::vector<double>& delta_theta,
                                 const std::vector<double>& phi);

// Average KIK formula over S interleaved sets with drift-indexed generators
// advancing shot by shot in execution order. Exact per-shot propagation; the
// schedule's own dissipators are replaced by the per-shot generator.
MitigatedResult set_averaged_mitigate(const PulseSchedule& sched, const NoiseSpec& spec,
                                      const DriftProfile& drift, const VecObservable& a,
                                      const VecState& rho, int order, const GChoice& g, int sets,
                                      long total_shots, uint64_t seed);

// splitmix64-style seed derivation so parallel units are scheduling-independent.
uint64_t derive_seed(uint64_t seed, uint64_t unit_index);

}  // namespace kik
