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

#include "kik/dynamics.hpp"
#include "kik/noise.hpp"
#include "kik/types.hpp"

namespace kik {

struct BoundReport {
    double observable_factor = 0.0;  // sqrt(Tr A^2 - (Tr A)^2 / Tr I)
    double accumulated = 0.0;        // ∫ ||L(t)|| dt
    double mu = 1.0;
    int order = 0;
    double bound_adaptive = 0.0;     // adaptive coefficients at g = mu
    double bound_taylor_like = 0.0;  // adaptive coefficients at g = 1
    double bound_loose = 0.0;        // (2M+1)!!/(2^{M+1}(M+1)!) (e^{2∫||L||}-1)^{M+1}
    bool ordering_ok = false;        // bound_adaptive <= bound_taylor_like <= bound_loose
};

// sqrt(Tr A^2 − (Tr A)^2 / Tr I); invariant under A -> A + b I.
double observable_norm_factor(const HilbertOp& a, double tol = kDefaultTol);

// Prefactor (2M+1)!! / (2^{M+1} (M+1)!).
double loose_bound_prefactor(int order);

BoundReport accuracy_bounds(const HilbertOp& a, const PulseSchedule& sched, double mu, int order);
// Same evaluation from the raw ingredients (used in grid sweeps).
BoundReport accuracy_bounds_raw(double observable_factor, double accumulated, double mu,
                                int order);

// e^{2 ∫||L||dt} < 2, the exponential-suppression condition.
bool weak_noise_condition(const PulseSchedule& sched);

struct MinEigReport {
    double min_eigenvalue = 1.0;
    double bound = 1.0;      // e^{-2 ∫||L||dt}
    bool satisfied = true;
    bool hermitian_cycle = true;  // eigenvalues taken from the Hermitian cycle;
                                  // otherwise from the singular values of K
};
MinEigReport min_eigenvalue_bound_check(const PulseSchedule& sched);

// |R_M(λ)| <= (2M+1)!!/(2^{M+1}(M+1)!) λ^{-M-3/2} (1-λ)^{M+1}.
double taylor_remainder_bound(int order, double lambda);
// Actual remainder |λ^{-1/2} - Σ a_Tay λ^m| for comparison.
double taylor_remainder_actual(int order, double lambda);

}  // namespace kik
