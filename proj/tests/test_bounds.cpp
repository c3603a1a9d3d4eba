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
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "kik/bounds.hpp"
#include "kik/coefficients.hpp"
#include "kik/engine.hpp"

using namespace kik;

namespace {

std::mt19937_64 rng(2024);

CMatrix random_hermitian(Eigen::Index d) {
    std::normal_distribution<double> n(0.0, 1.0);
    CMatrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) m(i, j) = Complex(n(rng), n(rng));
    return (m + CMatrix(m.adjoint())) / 2.0;
}

PulseSchedule random_pauli_schedule(double xi) {
    std::uniform_real_distribution<double> u(0.2, 1.0);
    std::vector<std::pair<std::string, double>> terms = {
        {"XI", u(rng) * xi}, {"IY", u(rng) * xi}, {"ZZ", u(rng) * xi}, {"IZ", u(rng) * xi}};
    SuperOperator l = pauli_channel_superop(terms);
    return PulseSchedule({Segment(u(rng), HilbertOp(random_hermitian(4)), l),
                          Segment(u(rng), HilbertOp(random_hermitian(4)), l)});
}

}  // namespace

TEST_CASE("observable norm factor on simple observables") {
    CHECK(observable_norm_factor(pauli_string_op("Z")) == doctest::Approx(std::sqrt(2.0)));
    CHECK(observable_norm_factor(HilbertOp(CMatrix(CMatrix::Identity(2, 2)))) ==
          doctest::Approx(0.0));
    CMatrix p0 = CMatrix::Zero(2, 2);
    p0(0, 0) = 1;
    CHECK(observable_norm_factor(HilbertOp(p0)) == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("observable norm factor is shift invariant") {
    CMatrix a = random_hermitian(4);
    double base = observable_norm_factor(HilbertOp(a));
    for (double b : {-2.0, 0.3, 11.0}) {
        CMatrix shifted = a + b * CMatrix::Identity(4, 4);
        CHECK(observable_norm_factor(HilbertOp(shifted)) == doctest::Approx(base).epsilon(1e-10));
    }
    CMatrix nh(2, 2);
    nh << 0, 1, 0, 0;
    CHECK_THROWS_AS(observable_norm_factor(HilbertOp(nh)), NonHermitianInput);
}

TEST_CASE("loose-bound prefactors") {
    CHECK(loose_bound_prefactor(1) == doctest::Approx(3.0 / 8.0));
    CHECK(loose_bound_prefactor(2) == doctest::Approx(15.0 / 48.0));
    CHECK(loose_bound_prefactor(3) == doctest::Approx(105.0 / 384.0));
    for (int m = 1; m <= 10; ++m) CHECK(loose_bound_prefactor(m) <= 3.0 / 8.0 + 1e-15);
}

TEST_CASE("accuracy bounds vanish at zero noise and follow plug-in arithmetic") {
    BoundReport zero = accuracy_bounds_raw(1.0, 0.0, 1.0, 2);
    CHECK(zero.bound_adaptive == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(zero.bound_taylor_like == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(zero.bound_loose == doctest::Approx(0.0));

    double fa = 1.7, acc = 0.2;
    BoundReport r = accuracy_bounds_raw(fa, acc, 0.8, 2);
    double expect = (15.0 / 48.0) * fa * std::pow(std::exp(2.0 * acc) - 1.0, 3);
    CHECK(r.bound_loose == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("bound ordering holds on the physically reachable (mu, accumulated) grid") {
    // mu = <rho| K_I K |rho> can never drop below the smallest cycle
    // eigenvalue, which itself is bounded by e^{-2 acc}; the ordering proof
    // uses exactly that, so unreachable (mu, acc) pairs are excluded
    for (int m = 1; m <= 3; ++m)
        for (int j = 0; j <= 10; ++j) {
            double acc = 0.05 * j;
            double mu_floor = std::exp(-2.0 * acc);
            for (int i = 0; i <= 10; ++i) {
                double mu = mu_floor + (1.0 - mu_floor) * i / 10.0;
                BoundReport r = accuracy_bounds_raw(1.0, acc, mu, m);
                CHECK(r.ordering_ok);
                CHECK(r.bound_adaptive <= r.bound_taylor_like + 1e-12);
                CHECK(r.bound_taylor_like <= r.bound_loose + 1e-12);
            }
        }
}

TEST_CASE("weak-noise condition thresholds") {
    SuperOperator zero = SuperOperator::Zero(2);
    PulseSchedule silent({Segment(1.0, HilbertOp(CMatrix(CMatrix::Zero(2, 2))), zero)});
    CHECK(weak_noise_condition(silent));

    // sigma_max(Z channel alpha) = 2 alpha; pick durations for 0.34 and 0.35
    SuperOperator l = pauli_channel_superop({{"Z", 0.5}});
    PulseSchedule ok({Segment(0.34, HilbertOp(CMatrix(CMatrix::Zero(2, 2))), l)});
    CHECK(accumulated_noise(ok) == doctest::Approx(0.34));
    CHECK(weak_noise_condition(ok));
    PulseSchedule too_much({Segment(0.35, HilbertOp(CMatrix(CMatrix::Zero(2, 2))), l)});
    CHECK_FALSE(weak_noise_condition(too_much));
}

TEST_CASE("minimum-eigenvalue bound is exact for single-qubit dephasing") {
    double alpha = 0.1;
    SuperOperator l = pauli_channel_superop({{"Z", alpha}});
    PulseSchedule s({Segment(1.0, HilbertOp(CMatrix(CMatrix::Zero(2, 2))), l)});
    MinEigReport r = min_eigenvalue_bound_check(s);
    CHECK(r.satisfied);
    CHECK(r.hermitian_cycle);
    CHECK(r.min_eigenvalue == doctest::Approx(std::exp(-4.0 * alpha)).epsilon(1e-10));
    CHECK(r.min_eigenvalue / r.bound == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("minimum-eigenvalue bound holds for random Pauli schedules") {
    PulseSchedule silent({Segment(1.0, HilbertOp(CMatrix(CMatrix::Zero(2, 2))),
                                  SuperOperator::Zero(2))});
    MinEigReport zero = min_eigenvalue_bound_check(silent);
    CHECK(zero.min_eigenvalue == doctest::Approx(1.0));
    CHECK(zero.bound == doctest::Approx(1.0));
    CHECK(zero.satisfied);

    for (int rep = 0; rep < 20; ++rep) {
        PulseSchedule s = random_pauli_schedule(0.1);
        MinEigReport r = min_eigenvalue_bound_check(s);
        CHECK(r.satisfied);
    }
}

TEST_CASE("taylor remainder bound dominates the actual remainder") {
    CHECK(taylor_remainder_bound(2, 1.0) == doctest::Approx(0.0));
    CHECK(taylor_remainder_actual(2, 1.0) == doctest::Approx(0.0).epsilon(1e-12));

    double b = taylor_remainder_bound(1, 0.5);
    CHECK(b == doctest::Approx((3.0 / 8.0) * std::pow(0.5, -2.5) * 0.25).epsilon(1e-12));
    CHECK(b == doctest::Approx(0.53033).epsilon(1e-4));
    double actual = taylor_remainder_actual(1, 0.5);
    CHECK(actual == doctest::Approx(0.16421).epsilon(1e-3));
    CHECK(actual <= b);

    for (int m = 1; m <= 6; ++m)
        for (double lam : {0.3, 0.5, 0.7, 0.9, 0.99})
            CHECK(taylor_remainder_actual(m, lam) <= taylor_remainder_bound(m, lam) + 1e-12);

    // decreasing in the order at fixed lambda = 0.8
    double prev = std::numeric_limits<double>::infinity();
    for (int m = 1; m <= 6; ++m) {
        double v = taylor_remainder_bound(m, 0.8);
        CHECK(v < prev);
        prev = v;
    }
    CHECK_THROWS_AS(taylor_remainder_bound(1, 0.0), OutOfRangeG);
}

TEST_CASE("measured bias sits below the loose bound when the Magnus gate passes") {
    for (int rep = 0; rep < 10; ++rep) {
        PulseSchedule s = random_pauli_schedule(0.02);
        SuperOperator k = propagate(s).value;
        SuperOperator ki = propagate(pulse_inverse(s)).value;
        SuperOperator u = propagate(s, {.noise_free = true}).value;
        SuperOperator omega = magnus1(s);
        SuperOperator cycle(4, CMatrix(ki.mat * k.mat));
        double resid = spectral_norm(CMatrix(cycle.mat - (2.0 * omega.mat).exp()));

        HilbertOp a = pauli_string_op("ZI");
        CMatrix plus = CMatrix::Constant(4, 4, Complex(0.25, 0));
        VecState rho = vectorize(HilbertOp(plus));
        VecObservable av = observable_vec(a);
        double ideal = expectation(av, u, rho);
        double mu = survival_probability(cycle, rho);
        for (int m = 1; m <= 3; ++m) {
            BoundReport b = accuracy_bounds(a, s, mu, m);
            MitigatedResult r = mitigate_exact(k, ki, av, rho, m, GChoice::mu_pow(1.0));
            double bias = std::abs(r.estimate - ideal);
            if (resid < 0.1 * b.bound_loose) CHECK(bias <= b.bound_loose + 1e-12);
        }
    }
}
