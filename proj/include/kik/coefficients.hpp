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

#include <vector>

#include "kik/types.hpp"

namespace kik {

// Mitigation coefficients a_0..a_M. Every constructor keeps Σ a_m = 1, the
// trace-preservation constraint of the combined map.
struct CoefficientSet {
    enum class Kind { Taylor, AdaptiveClosedForm, AdaptiveGeneralLS };

    int order = 0;               // M
    std::vector<double> values;  // size M+1
    double g = 1.0;
    Kind kind = Kind::Taylor;

    double sum() const;
};

// g(mu) choice: 1 or mu^p. Monotone nondecreasing on [0,1] for p >= 0.
struct GChoice {
    enum class Form { One, MuPow };
    Form form = Form::One;
    double power = 1.0;

    static GChoice one() { return GChoice{Form::One, 0.0}; }
    static GChoice mu_pow(double p) {
        if (p < 0) throw OutOfRangeG("GChoice: power must be >= 0");
        return GChoice{Form::MuPow, p};
    }

    bool is_taylor() const { return form == Form::One; }
    double evaluate(double mu) const;
};

// a_m = (-1)^m (2M+1)!! / (2^M (2m+1) m! (M-m)!). Log-gamma evaluation beyond
// M = 10 keeps the factorials in range; M <= 20 overall.
CoefficientSet taylor_coefficients(int order);

// Closed forms for M = 1, 2, 3; reduce to the Taylor set at g = 1.
CoefficientSet adaptive_coefficients(int order, double g);

// General-M least squares: substitute a_M = 1 - Σ_{m<M} a_m into the L2 error
// and solve the stationarity system. M <= 12 (moment-matrix conditioning).
CoefficientSet adaptive_coefficients_ls(int order, double g);

// Dispatch used by the engine: Taylor when the choice is g=1, closed forms for
// M <= 3, least squares otherwise.
CoefficientSet select_coefficients(int order, const GChoice& choice, double mu);

// ∫_g^1 (Σ a_m λ^m − λ^{-1/2})^2 dλ in closed form.
double l2_error(const CoefficientSet& coeffs);

// Lagrange-extrapolation weights to λ=0 with λ_k = (2k+1) λ0; independent of
// λ0 and equal to the Taylor coefficients.
std::vector<double> richardson_weights(int order, double lambda0);

// γ_M(g) = Σ |a_m|.
double sampling_overhead(const CoefficientSet& coeffs);

// Smallest eigenvalue of the reduced-problem Hessian; >= 0 on g in [0,1].
double hessian_min_eigenvalue(int order, double g);

}  // namespace kik
