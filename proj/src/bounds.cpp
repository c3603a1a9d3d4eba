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

#include "kik/bounds.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "kik/coefficients.hpp"

namespace kik {

double observable_norm_factor(const HilbertOp& a, double tol) {
    if (!a.is_hermitian(tol))
        throw NonHermitianInput("observable_norm_factor: A is not Hermitian");
    double tr_a = a.mat.trace().real();
    double tr_a2 = (a.mat * a.mat).trace().real();
    double d = double(a.dim());
    double v = tr_a2 - tr_a * tr_a / d;
    return std::sqrt(std::max(0.0, v));
}

double loose_bound_prefactor(int order) {
    double dfact = 1.0;
    for (int k = 3; k <= 2 * order + 1; k += 2) dfact *= k;
    double fact = 1.0;
    for (int k = 2; k <= order + 1; ++k) fact *= k;
    return dfact / (std::pow(2.0, order + 1) * fact);
}

namespace {

double polynomial_gap(const CoefficientSet& coeffs, double accumulated) {
    // |1 - Σ a_m e^{-2(m+1/2) ∫||L||}|
    double lam = std::exp(-2.0 * accumulated);
    double acc = 0.0;
    for (size_t m = 0; m < coeffs.values.size(); ++m)
        acc += coeffs.values[m] * std::pow(lam, double(m) + 0.5);
    return std::abs(1.0 - acc);
}

}  // namespace

BoundReport accuracy_bounds_raw(double observable_factor, double accumulated, double mu,
                                int order) {
    if (order < 1 || order > 3)
        throw OrderTooLarge("accuracy_bounds: adaptive bounds proven for M = 1, 2, 3");
    if (mu < -1e-9 || mu > 1.0 + 1e-9)
        throw OutOfRangeG("accuracy_bounds: mu must be in [0,1]");
    mu = std::clamp(mu, 0.0, 1.0);
    BoundReport r;
    r.observable_factor = observable_factor;
    r.accumulated = accumulated;
    r.mu = mu;
    r.order = order;
    r.bound_adaptive =
        observable_factor * polynomial_gap(adaptive_coefficients(order, mu), accumulated);
    r.bound_taylor_like =
        observable_factor * polynomial_gap(adaptive_coefficients(order, 1.0), accumulated);
    r.bound_loose = loose_bound_prefactor(order) * observable_factor *
                    std::pow(std::exp(2.0 * accumulated) - 1.0, order + 1);
    r.ordering_ok = r.bound_adaptive <= r.bound_taylor_like + 1e-12 &&
                    r.bound_taylor_like <= r.bound_loose + 1e-12;
    return r;
}

BoundReport accuracy_bounds(const HilbertOp& a, const PulseSchedule& sched, double mu, int order) {
    return accuracy_bounds_raw(observable_norm_factor(a), accumulated_noise(sched), mu, order);
}

bool weak_noise_condition(const PulseSchedule& sched) {
    return accumulated_noise(sched) < 0.5 * std::log(2.0);
}

MinEigReport min_eigenvalue_bound_check(const PulseSchedule& sched) {
    MinEigReport r;
    r.bound = std::exp(-2.0 * accumulated_noise(sched));
    SuperOperator cycle = kik_cycle(sched);
    if (cycle.is_hermitian(1e-9)) {
        Eigen::SelfAdjointEigenSolver<CMatrix> es((cycle.mat + cycle.mat.adjoint()) / 2.0);
        r.min_eigenvalue = es.eigenvalues().minCoeff();
        r.hermitian_cycle = true;
    } else {
        // general case: smallest singular value of K, squared
        SuperOperator k = propagate(sched).value;
        Eigen::JacobiSVD<CMatrix> svd(k.mat);
        double smin = svd.singularValues().minCoeff();
        r.min_eigenvalue = smin * smin;
        r.hermitian_cycle = false;
    }
    r.satisfied = r.min_eigenvalue >= r.bound - 1e-12;
    return r;
}

double taylor_remainder_bound(int order, double lambda) {
    if (lambda <= 0.0 || lambda > 1.0)
        throw OutOfRangeG("taylor_remainder_bound: lambda must be in (0,1]");
    return loose_bound_prefactor(order) * std::pow(lambda, -double(order) - 1.5) *
           std::pow(1.0 - lambda, order + 1);
}

double taylor_remainder_actual(int order, double lambda) {
    if (lambda <= 0.0 || lambda > 1.0)
        throw OutOfRangeG("taylor_remainder_actual: lambda must be in (0,1]");
    CoefficientSet c = taylor_coefficients(order);
    double poly = 0.0;
    for (size_t m = 0; m < c.values.size(); ++m) poly += c.values[m] * std::pow(lambda, double(m));
    return std::abs(1.0 / std::sqrt(lambda) - poly);
}

}  // namespace kik
