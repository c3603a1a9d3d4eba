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

#include "kik/coefficients.hpp"

#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace kik {

double CoefficientSet::sum() const {
    double s = 0;
    for (double v : values) s += v;
    return s;
}

double GChoice::evaluate(double mu) const {
    if (form == Form::One) return 1.0;
    if (mu < 0) mu = 0;
    if (mu > 1) mu = 1;
    return std::pow(mu, power);
}

namespace {

double log_double_factorial_odd(int n) {
    // (2k+1)!! = (2k+1)! / (2^k k!)
    int k = (n - 1) / 2;
    return std::lgamma(n + 1.0) - k * std::log(2.0) - std::lgamma(k + 1.0);
}

}  // namespace

CoefficientSet taylor_coefficients(int order) {
    if (order < 0) throw OrderTooLarge("taylor_coefficients: order must be >= 0");
    if (order > 20) throw OrderTooLarge("taylor_coefficients: order > 20 not supported");
    CoefficientSet c;
    c.order = order;
    c.g = 1.0;
    c.kind = CoefficientSet::Kind::Taylor;
    c.values.resize(order + 1);
    if (order <= 10) {
        double dfact = 1.0;
        for (int k = 3; k <= 2 * order + 1; k += 2) dfact *= k;
        double mfact = 1.0;  // m!
        for (int m = 0; m <= order; ++m) {
            if (m > 0) mfact *= m;
            double mmfact = 1.0;  // (M-m)!
            for (int k = 2; k <= order - m; ++k) mmfact *= k;
            double val = dfact / (std::pow(2.0, order) * (2 * m + 1) * mfact * mmfact);
            c.values[m] = (m % 2 == 0) ? val : -val;
        }
    } else {
        double logdf = log_double_factorial_odd(2 * order + 1);
        for (int m = 0; m <= order; ++m) {
            double lv = logdf - order * std::log(2.0) - std::log(2.0 * m + 1.0) -
                        std::lgamma(m + 1.0) - std::lgamma(order - m + 1.0);
            double val = std::exp(lv);
            c.values[m] = (m % 2 == 0) ? val : -val;
        }
    }
    return c;
}

CoefficientSet adaptive_coefficients(int order, double g) {
    if (g < 0.0 || g > 1.0) throw OutOfRangeG("adaptive_coefficients: g must be in [0,1]");
    if (order < 1 || order > 3)
        throw OrderTooLarge("adaptive_coefficients: closed forms exist for M = 1, 2, 3");
    double s = std::sqrt(g);
    CoefficientSet c;
    c.order = order;
    c.g = g;
    c.kind = CoefficientSet::Kind::AdaptiveClosedForm;
    if (order == 1) {
        double d3 = std::pow(1.0 + s, 3);
        c.values = {1.0 + 1.0 / d3 + 3.0 / (2.0 * (1.0 + s) * (1.0 + s)),
                    -(5.0 + 3.0 * s) / (2.0 * d3)};
    } else if (order == 2) {
        double d2 = (1.0 + s) * (1.0 + s);
        double d4 = d2 * d2;
        double d5 = d4 * (1.0 + s);
        c.values = {1.0 + 16.0 / (3.0 * d5) - 14.0 / (3.0 * d4) + 4.0 / d2,
                    -4.0 * (10.0 + 8.0 * s + 9.0 * g + 3.0 * g * s) / (3.0 * d5),
                    2.0 * (13.0 + 5.0 * s) / (3.0 * d5)};
    } else {
        double d7 = std::pow(1.0 + s, 7);
        double g2 = g * g, g3 = g2 * g;
        c.values = {(31.0 + 97.0 * s + 276.0 * g + 300.0 * g * s + 270.0 * g2 + 114.0 * g2 * s +
                     28.0 * g3 + 4.0 * g3 * s) /
                        (4.0 * d7),
                    -5.0 * (29.0 + 35.0 * s + 84.0 * g + 44.0 * g * s + 26.0 * g2 + 6.0 * g2 * s) /
                        (4.0 * d7),
                    3.0 * (81.0 + 47.0 * s + 76.0 * g + 20.0 * g * s) / (4.0 * d7),
                    -5.0 * (25.0 + 7.0 * s) / (4.0 * d7)};
    }
    return c;
}

namespace {

// Gram entries ∫_g^1 λ^{m+n} dλ and target moments ∫_g^1 λ^{m-1/2} dλ.
double gram_entry(int m, int n, double g) {
    int p = m + n + 1;
    return (1.0 - std::pow(g, p)) / p;
}

double target_moment(int m, double g) {
    double p = m + 0.5;
    return (1.0 - std::pow(g, p)) / p;
}

}  // namespace

namespace {

using Quad = __float128;

// Gauss-Legendre nodes/weights on [-1, 1] refined to quad precision by Newton
// iteration on the Legendre recurrence.
void gauss_legendre_quad(int n, std::vector<Quad>& x, std::vector<Quad>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev-based initial guess
        Quad t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        Quad dp = 0;
        for (int it = 0; it < 60; ++it) {
            Quad p0 = 1, p1 = t;
            for (int k = 2; k <= n; ++k) {
                Quad p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1);
            Quad step = p1 / dp;
            t -= step;
            double mag = double(step < 0 ? -step : step);
            if (mag < 1e-35) break;
        }
        x[n - 1 - i] = t;
        w[n - 1 - i] = 2.0 / ((1 - t * t) * dp * dp);
    }
}

// Gaussian elimination with partial pivoting on quad scalars; the systems are
// at most 12 x 12.
std::vector<Quad> solve_quad(std::vector<std::vector<Quad>> a, std::vector<Quad> b) {
    int n = int(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r) {
            Quad lhs = a[r][col] < 0 ? -a[r][col] : a[r][col];
            Quad rhs = a[piv][col] < 0 ? -a[piv][col] : a[piv][col];
            if (lhs > rhs) piv = r;
        }
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        if (a[col][col] == 0)
            throw IllConditionedSystem("adaptive_coefficients_ls: singular system");
        for (int r = col + 1; r < n; ++r) {
            Quad f = a[r][col] / a[col][col];
            for (int cc = col; cc < n; ++cc) a[r][cc] -= f * a[col][cc];
            b[r] -= f * b[col];
        }
    }
    std::vector<Quad> out(n);
    for (int r = n - 1; r >= 0; --r) {
        Quad acc = b[r];
        for (int cc = r + 1; cc < n; ++cc) acc -= a[r][cc] * out[cc];
        out[r] = acc / a[r][r];
    }
    return out;
}

}  // namespace

CoefficientSet adaptive_coefficients_ls(int order, double g) {
    if (g < 0.0 || g >= 1.0)
        throw OutOfRangeG("adaptive_coefficients_ls: g must be in [0,1)");
    if (order < 1) throw OrderTooLarge("adaptive_coefficients_ls: order must be >= 1");
    if (order > 12)
        throw OrderTooLarge("adaptive_coefficients_ls: order > 12 exceeds conditioning guard");
    const int m = order;

    // The stationarity system is assembled in the edge-anchored variable
    // tau = (1-lambda)/(1-g) on [0,1]: the constraint Σ a_m = q(1) = 1 then
    // pins the tau-constant term, the moment matrix is Hilbert-like in M
    // alone, and the back-conversion to lambda-monomials stays bounded by
    // binomial factors. Assembling the normal equations directly in the
    // lambda-monomials loses every significant digit as g -> 1.
    std::vector<std::vector<Quad>> a(m, std::vector<Quad>(m));
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= m; ++k) a[j - 1][k - 1] = Quad(1) / (j + k + 1);

    // conditioning guard on the (g-independent) moment matrix
    Eigen::MatrixXd a_d(m, m);
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) a_d(j, k) = double(a[j][k]);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a_d);
    double cond = svd.singularValues().maxCoeff() / svd.singularValues().minCoeff();
    if (!std::isfinite(cond) || cond > 1e12)
        throw IllConditionedSystem("adaptive_coefficients_ls: condition number above 1e12");

    // rhs_j = ∫_0^1 tau^j (lambda^{-1/2} - 1) dtau / w, evaluated through
    // lambda = t^2 so the integrand is polynomial and every (1 - t) factor is
    // available without cancellation; exact at the chosen node count.
    const Quad wq = Quad(1) - Quad(g);
    Quad sq = Quad(sqrtl((long double)g));
    for (int it = 0; it < 3 && sq > 0; ++it) sq = (sq + Quad(g) / sq) / 2;  // quad-precision sqrt
    std::vector<Quad> xs, ws;
    gauss_legendre_quad(2 * m + 8, xs, ws);
    std::vector<Quad> rhs(m, Quad(0));
    for (size_t i = 0; i < xs.size(); ++i) {
        Quad one_minus_t = (Quad(1) - sq) * (Quad(1) - xs[i]) / 2;
        Quad t = Quad(1) - one_minus_t;
        Quad eps_over_w = one_minus_t * (Quad(1) + t) / wq;  // (1 - t^2)/w
        Quad weight = (Quad(1) - sq) * ws[i] / wq;           // 2 * jacobian / w
        Quad p = eps_over_w;
        for (int j = 1; j <= m; ++j) {
            rhs[j - 1] += weight * p * one_minus_t;
            p *= eps_over_w;
        }
    }

    std::vector<Quad> beta = solve_quad(std::move(a), std::move(rhs));

    // q(lambda) = 1 + Σ_k beta_k ((1-lambda)/w)^k -> lambda-monomials
    std::vector<Quad> mono(m + 1, Quad(0));
    mono[0] = Quad(1);
    std::vector<Quad> pow_coeffs(m + 1, Quad(0));
    pow_coeffs[0] = Quad(1);
    for (int k = 1; k <= m; ++k) {
        std::vector<Quad> next(m + 1, Quad(0));
        for (int i = 0; i < k; ++i) {
            next[i] += pow_coeffs[i] / wq;
            next[i + 1] -= pow_coeffs[i] / wq;
        }
        pow_coeffs = std::move(next);
        for (int i = 0; i <= k; ++i) mono[i] += beta[k - 1] * pow_coeffs[i];
    }

    CoefficientSet c;
    c.order = order;
    c.g = g;
    c.kind = CoefficientSet::Kind::AdaptiveGeneralLS;
    c.values.resize(order + 1);
    Quad total = 0;
    for (int j = 0; j < m; ++j) {
        c.values[j] = double(mono[j]);
        total += Quad(c.values[j]);
    }
    c.values[m] = double(Quad(1) - total);  // keep Σ a_m = 1 exactly
    return c;
}

CoefficientSet select_coefficients(int order, const GChoice& choice, double mu) {
    if (order == 0) {
        CoefficientSet c;
        c.order = 0;
        c.values = {1.0};
        c.g = choice.evaluate(mu);
        c.kind = CoefficientSet::Kind::Taylor;
        return c;
    }
    if (choice.is_taylor()) return taylor_coefficients(order);
    double g = choice.evaluate(mu);
    if (g >= 1.0) return taylor_coefficients(order);
    if (order <= 3) return adaptive_coefficients(order, g);
    return adaptive_coefficients_ls(order, g);
}

double l2_error(const CoefficientSet& coeffs) {
    double g = coeffs.g;
    if (g <= 0.0) throw OutOfRangeG("l2_error: -ln(g) diverges at g <= 0");
    if (g > 1.0) throw OutOfRangeG("l2_error: g must be in (0,1]");
    const auto& a = coeffs.values;
    int m = coeffs.order;
    double acc = 0.0;
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j) acc += a[i] * a[j] * gram_entry(i, j, g);
    for (int i = 0; i <= m; ++i) acc -= 2.0 * a[i] * target_moment(i, g);
    acc -= std::log(g);
    return acc;
}

std::vector<double> richardson_weights(int order, double lambda0) {
    if (order < 1) throw OrderTooLarge("richardson_weights: order must be >= 1");
    if (lambda0 <= 0) throw OutOfRangeG("richardson_weights: lambda0 must be > 0");
    std::vector<double> w(order + 1);
    for (int m = 0; m <= order; ++m) {
        double num = 1.0, den = 1.0;
        double lm = (2 * m + 1) * lambda0;
        for (int k = 0; k <= order; ++k) {
            if (k == m) continue;
            double lk = (2 * k + 1) * lambda0;
            num *= lk;
            den *= lk - lm;
        }
        w[m] = num / den;
    }
    return w;
}

double sampling_overhead(const CoefficientSet& coeffs) {
    double s = 0;
    for (double v : coeffs.values) s += std::abs(v);
    return s;
}

double hessian_min_eigenvalue(int order, double g) {
    if (g < 0.0 || g > 1.0) throw OutOfRangeG("hessian_min_eigenvalue: g must be in [0,1]");
    if (order < 1 || order > 3)
        throw OrderTooLarge("hessian_min_eigenvalue: defined for M = 1, 2, 3");
    Eigen::MatrixXd h(order, order);
    for (int j = 0; j < order; ++j)
        for (int k = 0; k < order; ++k) h(j, k) = 2.0 * gram_entry(j, k, g);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    return es.eigenvalues().minCoeff();
}

}  // namespace kik
