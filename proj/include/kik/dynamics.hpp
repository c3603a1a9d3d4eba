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
#include <string>
#include <vector>

#include "kik/liouville.hpp"
#include "kik/types.hpp"

namespace kik {

// One piecewise-constant slice of the drive: exp[(-i H_superop + L) * duration].
struct Segment {
    double duration = 1.0;
    HilbertOp hamiltonian;      // Hermitian, Hilbert-space
    SuperOperator dissipator;   // generator acting on vectorized states
    std::string label;

    Segment() = default;
    Segment(double dt, HilbertOp h, SuperOperator l, std::string lbl = {});
};

struct PulseSchedule {
    std::vector<Segment> segments;

    PulseSchedule() = default;
    explicit PulseSchedule(std::vector<Segment> segs);

    Eigen::Index dim() const { return segments.front().hamiltonian.dim(); }
    double total_time() const;
    uint64_t content_hash() const;
};

PulseSchedule concat(const PulseSchedule& a, const PulseSchedule& b);

// H_I(t) = -H(T - t): segment order reversed, Hamiltonians negated,
// dissipators kept with the same sign.
PulseSchedule pulse_inverse(const PulseSchedule& sched);

struct Propagator {
    SuperOperator value;
    uint64_t schedule_hash = 0;
    double tolerance = 1e-12;
};

struct PropagateOptions {
    bool noise_free = false;   // drop dissipators (gives the ideal unitary superop)
};
// Time-ordered product over segments of exp[(-iH + L) dt], later segments
// multiplying from the left. Identical segments are exponentiated once.
Propagator propagate(const PulseSchedule& sched, const PropagateOptions& opts = {});

struct MagnusOptions {
    int initial_nodes = 16;     // Gauss-Legendre nodes per segment
    int max_nodes = 256;
    double tol = 1e-10;         // max-norm difference between successive orders
};
// First Magnus term of the interaction-picture noise propagator:
// Omega_1(T) = ∫_0^T U†(t) L(t) U(t) dt with U(t) the noise-free evolution.
SuperOperator magnus1(const PulseSchedule& sched, const MagnusOptions& opts = {});

// propagate(pulse_inverse(sched)) * propagate(sched), the noisy realization of
// the logical identity.
SuperOperator kik_cycle(const PulseSchedule& sched);

// Oracle implementation of K (K_I K)^{-1/2} using the principal branch of the
// inverse square root: Hermitian eigendecomposition when the cycle is
// Hermitian, Schur-based square root otherwise.
SuperOperator exact_kik_reference(const PulseSchedule& sched);
SuperOperator exact_kik_reference(const SuperOperator& k, const SuperOperator& cycle);

// Matrix exponential with a finiteness check.
CMatrix matrix_exp(const CMatrix& a);

}  // namespace kik
