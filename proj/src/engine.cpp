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

#include "kik/engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include <Eigen/SVD>

namespace kik {

uint64_t derive_seed(uint64_t seed, uint64_t unit_index) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ull * (unit_index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

PulseSchedule folded_schedule(const PulseSchedule& sched, int m) {
    if (m < 0) throw InvalidSpec("folded_schedule: m must be >= 0");
    PulseSchedule out = sched;
    PulseSchedule inv = pulse_inverse(sched);
    for (int i = 0; i < m; ++i) {
        out = concat(out, inv);
        out = concat(out, sched);
    }
    return out;
}

double survival_probability(const SuperOperator& cycle, const VecState& rho) {
    CRowVector dual = rho.vec.conjugate().transpose();
    Complex val = (dual * (cycle.mat * rho.vec)).value();
    return val.real();
}

double survival_probability(const PulseSchedule& sched, const VecState& rho) {
    return survival_probability(kik_cycle(sched), rho);
}

MitigatedResult mitigate_exact(const SuperOperator& k, const SuperOperator& k_inv,
                               const VecObservable& a, const VecState& rho, int order,
                               const GChoice& g) {
    SuperOperator cycle(k.dim, k_inv.mat * k.mat);
    double mu = 1.0;
    if (!g.is_taylor()) mu = survival_probability(cycle, rho);
    CoefficientSet coeffs = select_coefficients(order, g, mu);

    MitigatedResult r;
    r.mu = mu;
    r.g = coeffs.g;
    r.coefficients = coeffs;
    r.folds.order = order;
    r.folds.mode = FoldedEstimates::Mode::Exact;
    r.folds.means.resize(order + 1);
    r.folds.variances.assign(order + 1, 0.0);
    r.folds.shots.assign(order + 1, 0);

    CVector w = rho.vec;
    double est = 0.0;
    for (int m = 0; m <= order; ++m) {
        double val = (a.vec * (k.mat * w)).value().real();
        r.folds.means[m] = val;
        est += coeffs.values[m] * val;
        if (m < order) w = cycle.mat * w;
    }
    r.estimate = est;
    r.variance = 0.0;
    return r;
}

MitigatedResult mitigate_exact(const PulseSchedule& sched, const VecObservable& a,
                               const VecState& rho, int order, const GChoice& g) {
    SuperOperator k = propagate(sched).value;
    SuperOperator ki = propagate(pulse_inverse(sched)).value;
    return mitigate_exact(k, ki, a, rho, order, g);
}

std::vector<long> allocate_shots(const CoefficientSet& coeffs, long total) {
    long n_folds = long(coeffs.values.size());
    if (total < n_folds)
        throw BudgetTooSmall("allocate_shots: fewer shots than circuits");
    double gamma = sampling_overhead(coeffs);
    std::vector<double> ideal(n_folds);
    std::vector<long> out(n_folds);
    long assigned = 0;
    for (long m = 0; m < n_folds; ++m) {
        ideal[m] = std::abs(coeffs.values[m]) / gamma * double(total);
        out[m] = long(std::floor(ideal[m]));
        assigned += out[m];
    }
    // largest-remainder correction
    std::vector<long> idx(n_folds);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](long i, long j) {
        return (ideal[i] - std::floor(ideal[i])) > (ideal[j] - std::floor(ideal[j]));
    });
    for (long k = 0; assigned < total; ++k, ++assigned) out[idx[k % n_folds]] += 1;
    // floor guard: every circuit gets at least one shot
    for (long m = 0; m < n_folds; ++m) {
        while (out[m] < 1) {
            long donor = long(std::max_element(out.begin(), out.end()) - out.begin());
            if (out[donor] <= 1) throw BudgetTooSmall("allocate_shots: cannot give every circuit a shot");
            out[donor] -= 1;
            out[m] += 1;
        }
    }
    return out;
}

namespace {

std::vector<std::string> all_pauli_strings(int n) {
    static const char letters[4] = {'I', 'X', 'Y', 'Z'};
    std::vector<std::string> out;
    size_t total = size_t(1) << (2 * n);
    out.reserve(total);
    for (size_t idx = 0; idx < total; ++idx) {
        std::string s(n, 'I');
        size_t rem = idx;
        for (int q = n - 1; q >= 0; --q) {
            s[q] = letters[rem % 4];
            rem /= 4;
        }
        out.push_back(std::move(s));
    }
    return out;
}

// Conjugation table P -> U P U† for the block's logical unitary; every image
// must again be a Pauli string (up to phase, which drops in superoperator
// form). Throws UnsupportedLogicalUnitary otherwise.
std::map<std::string, std::string> conjugation_table(const HilbertOp& u, int n) {
    auto strings = all_pauli_strings(n);
    double d = double(u.dim());
    std::map<std::string, std::string> table;
    for (const auto& s : strings) {
        CMatrix c = u.mat * pauli_string_op(s).mat * u.mat.adjoint();
        bool found = false;
        for (const auto& q : strings) {
            Complex ov = (pauli_string_op(q).mat.adjoint() * c).trace() / d;
            if (std::abs(std::abs(ov) - 1.0) < 1e-9) {
                table[s] = q;
                found = true;
                break;
            }
        }
        if (!found)
            throw UnsupportedLogicalUnitary(
                "rc_realizations: block logical unitary does not map Paulis to Paulis");
    }
    return table;
}

int qubits_of_dim(Eigen::Index d) {
    int n = 0;
    while ((Eigen::Index(1) << n) < d) ++n;
    if ((Eigen::Index(1) << n) != d)
        throw NotQubitDimension("expected power-of-two dimension");
    return n;
}

}  // namespace

std::vector<RCRealization> rc_realizations(const std::vector<HilbertOp>& block_logicals,
                                           int count, uint64_t seed) {
    if (block_logicals.empty()) throw InvalidSpec("rc_realizations: no blocks");
    int n = qubits_of_dim(block_logicals.front().dim());
    std::vector<std::map<std::string, std::string>> tables;
    tables.reserve(block_logicals.size());
    for (const auto& u : block_logicals) tables.push_back(conjugation_table(u, n));
    auto strings = all_pauli_strings(n);

    std::vector<RCRealization> out;
    out.reserve(count);
    if (block_logicals.size() == 1 && size_t(count) == strings.size()) {
        for (const auto& s : strings) {
            RCRealization r;
            r.pre = {s};
            r.post = {tables[0].at(s)};
            out.push_back(std::move(r));
        }
        return out;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, strings.size() - 1);
    for (int i = 0; i < count; ++i) {
        RCRealization r;
        for (size_t b = 0; b < block_logicals.size(); ++b) {
            const std::string& s = strings[pick(rng)];
            r.pre.push_back(s);
            r.post.push_back(tables[b].at(s));
        }
        out.push_back(std::move(r));
    }
    return out;
}

SuperOperator twirl_average(const std::vector<SuperOperator>& blocks,
                            const std::vector<HilbertOp>& block_logicals,
                            const std::vector<RCRealization>& realizations) {
    if (blocks.empty() || realizations.empty())
        throw InvalidSpec("twirl_average: nothing to average");
    Eigen::Index d = blocks.front().dim;
    // every realization must preserve the noiseless logical circuit
    CMatrix logical = CMatrix::Identity(d, d);
    for (const auto& u : block_logicals) logical = u.mat * logical;
    SuperOperator logical_s = unitary_superop(HilbertOp(logical));
    CMatrix acc = CMatrix::Zero(d * d, d * d);
    for (const auto& r : realizations) {
        if (r.pre.size() != blocks.size() || r.post.size() != blocks.size())
            throw InvalidSpec("twirl_average: realization block count mismatch");
        CMatrix dressed = CMatrix::Identity(d * d, d * d);
        CMatrix dressed_logical = CMatrix::Identity(d, d);
        for (size_t b = 0; b < blocks.size(); ++b) {
            SuperOperator pre = unitary_superop(pauli_string_op(r.pre[b]));
            SuperOperator post = unitary_superop(pauli_string_op(r.post[b]));
            dressed = post.mat * blocks[b].mat * pre.mat * dressed;
            dressed_logical = pauli_string_op(r.post[b]).mat * block_logicals[b].mat *
                              pauli_string_op(r.pre[b]).mat * dressed_logical;
        }
        SuperOperator check = unitary_superop(HilbertOp(dressed_logical));
        if ((check.mat - logical_s.mat).cwiseAbs().maxCoeff() > 1e-9)
            throw UnsupportedLogicalUnitary("twirl_average: realization changes the logical circuit");
        acc += dressed;
    }
    acc /= double(realizations.size());
    return SuperOperator(d, std::move(acc));
}

SuperOperator twirl_average(const PulseSchedule& sched, const std::vector<int>& block_starts,
                            const std::vector<RCRealization>& realizations) {
    if (block_starts.empty() || block_starts.front() != 0)
        throw InvalidSpec("twirl_average: block starts must begin at 0");
    std::vector<SuperOperator> blocks;
    std::vector<HilbertOp> logicals;
    int n_segs = int(sched.segments.size());
    for (size_t b = 0; b < block_starts.size(); ++b) {
        int lo = block_starts[b];
        int hi = (b + 1 < block_starts.size()) ? block_starts[b + 1] : n_segs;
        if (lo >= hi || hi > n_segs) throw InvalidSpec("twirl_average: bad block boundaries");
        PulseSchedule blk(std::vector<Segment>(sched.segments.begin() + lo,
                                               sched.segments.begin() + hi));
        blocks.push_back(propagate(blk).value);
        // noise-free net unitary of the block
        Eigen::Index d = blk.dim();
        CMatrix u = CMatrix::Identity(d, d);
        for (const auto& seg : blk.segments) {
            CMatrix h = Complex(0, -1) * seg.hamiltonian.mat * seg.duration;
            u = matrix_exp(h) * u;
        }
        logicals.push_back(HilbertOp(std::move(u)));
    }
    return twirl_average(blocks, logicals, realizations);
}

MeasurementMatrix::MeasurementMatrix(int n, RMatrix m) : n_qubits(n), mat(std::move(m)) {
    Eigen::Index dim = Eigen::Index(1) << n;
    if (mat.rows() != dim || mat.cols() != dim)
        throw DimensionMismatch("MeasurementMatrix: size must be 2^n x 2^n");
    for (Eigen::Index j = 0; j < dim; ++j) {
        double colsum = mat.col(j).sum();
        if (std::abs(colsum - 1.0) > 1e-9)
            throw InvalidSpec("MeasurementMatrix: columns must sum to 1");
        for (Eigen::Index i = 0; i < dim; ++i)
            if (mat(i, j) < 0.0 || mat(i, j) > 1.0)
                throw InvalidSpec("MeasurementMatrix: entries must lie in [0,1]");
    }
}

MeasurementMatrix MeasurementMatrix::from_per_qubit(
    const std::vector<std::pair<double, double>>& rates) {
    RMatrix m = RMatrix::Identity(1, 1);
    for (const auto& [p10, p01] : rates) {
        // p10 = p(read 1 | prepared 0), p01 = p(read 0 | prepared 1)
        RMatrix q(2, 2);
        q << 1.0 - p10, p01, p10, 1.0 - p01;
        RMatrix out(m.rows() * 2, m.cols() * 2);
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                out.block(i * 2, j * 2, 2, 2) = m(i, j) * q;
        m = std::move(out);
    }
    return MeasurementMatrix(int(rates.size()), std::move(m));
}

const RMatrix& MeasurementMatrix::inverse() const {
    if (!have_inv_) {
        Eigen::JacobiSVD<RMatrix> svd(mat);
        double smin = svd.singularValues().minCoeff();
        double smax = svd.singularValues().maxCoeff();
        if (smin <= 0 || smax / smin > 1e8)
            throw SingularMeasurementMatrix("MeasurementMatrix: condition number above 1e8");
        inv_ = mat.partialPivLu().solve(RMatrix::Identity(mat.rows(), mat.cols()));
        have_inv_ = true;
    }
    return inv_;
}

Eigen::VectorXd MeasurementMatrix::distort(const Eigen::VectorXd& p) const { return mat * p; }

Eigen::VectorXd MeasurementMatrix::correct(const Eigen::VectorXd& q) const {
    return inverse() * q;
}

namespace {

Eigen::VectorXd outcome_distribution(const SuperOperator& circuit, const VecState& rho) {
    Eigen::Index d = circuit.dim;
    CVector final_vec = circuit.mat * rho.vec;
    Eigen::VectorXd p(d);
    for (Eigen::Index k = 0; k < d; ++k) p(k) = std::max(0.0, final_vec(k * d + k).real());
    double s = p.sum();
    if (s <= 0) throw NumericalError("outcome_distribution: vanishing total probability");
    return p / s;
}

std::vector<long> multinomial(const Eigen::VectorXd& p, long n, std::mt19937_64& rng) {
    std::vector<long> counts(p.size(), 0);
    double remaining_p = 1.0;
    long remaining_n = n;
    for (Eigen::Index k = 0; k + 1 < p.size() && remaining_n > 0; ++k) {
        double pk = std::clamp(p(k) / remaining_p, 0.0, 1.0);
        std::binomial_distribution<long> bin(remaining_n, pk);
        long c = bin(rng);
        counts[k] = c;
        remaining_n -= c;
        remaining_p -= p(k);
        if (remaining_p <= 0) break;
    }
    counts[p.size() - 1] += remaining_n;
    return counts;
}

struct SampleMoments {
    double mean = 0.0;
    double var = 0.0;  // per-shot variance (population form)
};

SampleMoments sample_observable(const Eigen::VectorXd& dist, const Eigen::VectorXd& shot_values,
                                long shots, std::mt19937_64& rng) {
    std::vector<long> counts = multinomial(dist, shots, rng);
    double m1 = 0.0, m2 = 0.0;
    for (Eigen::Index k = 0; k < dist.size(); ++k) {
        double f = double(counts[k]) / double(shots);
        m1 += f * shot_values(k);
        m2 += f * shot_values(k) * shot_values(k);
    }
    return SampleMoments{m1, m2 - m1 * m1};
}

}  // namespace

MitigatedResult mitigate_sampled(const PulseSchedule& sched, const DiagonalObservable& a,
                                 const VecState& rho, int order, const GChoice& g, long total_shots,
                                 uint64_t seed, const SampledOptions& opts) {
    Eigen::Index d = sched.dim();
    if (a.values.size() != d) throw DimensionMismatch("mitigate_sampled: observable size");
    SuperOperator k = propagate(sched).value;
    SuperOperator ki = propagate(pulse_inverse(sched)).value;
    SuperOperator cycle(d, ki.mat * k.mat);

    double mu = 1.0;
    if (!g.is_taylor()) mu = survival_probability(cycle, rho);
    CoefficientSet coeffs = select_coefficients(order, g, mu);
    std::vector<long> shots = allocate_shots(coeffs, total_shots);

    // Per-shot values: the observable itself, or its readout-corrected image
    // A^T M^{-1} when sampling distorted outcomes.
    Eigen::VectorXd shot_values = a.values;
    if (opts.readout)
        shot_values = (a.values.transpose() * opts.readout->inverse()).transpose();

    MitigatedResult r;
    r.mu = mu;
    r.g = coeffs.g;
    r.coefficients = coeffs;
    r.folds.order = order;
    r.folds.mode = FoldedEstimates::Mode::Sampled;
    r.folds.seed = seed;
    r.folds.means.resize(order + 1);
    r.folds.variances.resize(order + 1);
    r.folds.shots = shots;

    if (opts.rc) qubits_of_dim(d);  // RC path requires a qubit register
    HilbertOp logical_u, logical_ui;
    if (opts.rc) {
        // noise-free net unitaries of the K and K_I blocks
        CMatrix u = CMatrix::Identity(d, d);
        for (const auto& seg : sched.segments)
            u = matrix_exp(CMatrix(Complex(0, -1) * seg.hamiltonian.mat * seg.duration)) * u;
        logical_u = HilbertOp(u);
        logical_ui = HilbertOp(CMatrix(u.adjoint()));
    }

    for (int m = 0; m <= order; ++m) {
        std::mt19937_64 rng(derive_seed(seed, uint64_t(m)));
        if (!opts.rc) {
            CVector w = rho.vec;
            for (int i = 0; i < m; ++i) w = cycle.mat * w;
            SuperOperator fold(d, CMatrix(k.mat));
            VecState state(d, std::move(w));
            Eigen::VectorXd p = outcome_distribution(fold, state);
            Eigen::VectorXd q = opts.readout ? opts.readout->distort(p) : p;
            SampleMoments mom = sample_observable(q, shot_values, shots[m], rng);
            r.folds.means[m] = mom.mean;
            r.folds.variances[m] = mom.var / double(shots[m]);
        } else {
            int blocks_count = 2 * m + 1;
            std::vector<HilbertOp> logicals;
            std::vector<SuperOperator> block_ops;
            for (int b = 0; b < blocks_count; ++b) {
                bool is_k = (b % 2 == 0);
                logicals.push_back(is_k ? logical_u : logical_ui);
                block_ops.push_back(is_k ? k : ki);
            }
            auto reals = rc_realizations(logicals, opts.rc->realizations,
                                         derive_seed(seed, 1000 + uint64_t(m)));
            long n_r = long(reals.size());
            long base = shots[m] / n_r, rem = shots[m] % n_r;
            double mean_acc = 0.0, var_acc = 0.0;
            for (long i = 0; i < n_r; ++i) {
                long ni = base + (i < rem ? 1 : 0);
                if (ni == 0) continue;
                CMatrix dressed = CMatrix::Identity(d * d, d * d);
                for (int b = 0; b < blocks_count; ++b) {
                    SuperOperator pre = unitary_superop(pauli_string_op(reals[i].pre[b]));
                    SuperOperator post = unitary_superop(pauli_string_op(reals[i].post[b]));
                    dressed = post.mat * block_ops[b].mat * pre.mat * dressed;
                }
                Eigen::VectorXd p = outcome_distribution(SuperOperator(d, std::move(dressed)), rho);
                Eigen::VectorXd q = opts.readout ? opts.readout->distort(p) : p;
                SampleMoments mom = sample_observable(q, shot_values, ni, rng);
                mean_acc += mom.mean;
                var_acc += mom.var / double(ni);
            }
            r.folds.means[m] = mean_acc / double(n_r);
            r.folds.variances[m] = var_acc / double(n_r * n_r);
        }
    }

    double est = 0.0, var = 0.0;
    for (int m = 0; m <= order; ++m) {
        est += coeffs.values[m] * r.folds.means[m];
        var += coeffs.values[m] * coeffs.values[m] * r.folds.variances[m];
    }
    r.estimate = est;
    r.variance = var;
    return r;
}

VecState rotation_averaged_state(const std::vector<double>& delta_theta,
                                 const std::vector<double>& phi) {
    if (delta_theta.size() != phi.size())
        throw DimensionMismatch("rotation_averaged_state: angle list sizes differ");
    int n = int(delta_theta.size());
    Eigen::Index d = Eigen::Index(1) << n;
    CVector psi = CVector::Ones(1);
    for (int q = 0; q < n; ++q) {
        CVector loc(2);
        loc << std::cos(delta_theta[q] / 2.0),
            std::exp(Complex(0, phi[q])) * std::sin(delta_theta[q] / 2.0);
        CVector next(psi.size() * 2);
        for (Eigen::Index i = 0; i < psi.size(); ++i) {
            next(2 * i) = psi(i) * loc(0);
            next(2 * i + 1) = psi(i) * loc(1);
        }
        psi = std::move(next);
    }
    CMatrix rho_psi = psi * psi.adjoint();
    CMatrix acc = CMatrix::Zero(d, d);
    for (long mask = 0; mask < (1L << n); ++mask) {
        CMatrix rot = CMatrix::Identity(1, 1);
        for (int q = 0; q < n; ++q) {
            double sign = (mask >> q) & 1 ? 1.0 : -1.0;
            CMatrix rz(2, 2);
            rz << std::exp(Complex(0, -sign * M_PI / 4)), 0, 0, std::exp(Complex(0, sign * M_PI / 4));
            rot = kron(rot, rz);
        }
        acc += rot * rho_psi * rot.adjoint();
    }
    acc /= double(1L << n);
    return vectorize(HilbertOp(std::move(acc)));
}

MitigatedResult set_averaged_mitigate(const PulseSchedule& sched, const NoiseSpec& spec,
                                      const DriftProfile& drift, const VecObservable& a,
                                      const VecState& rho, int order, const GChoice& g, int sets,
                                      long total_shots, uint64_t seed) {
    if (sets < 1) throw InvalidSpec("set_averaged_mitigate: need at least one set");
    if (total_shots < long(sets) * (order + 1))
        throw BudgetTooSmall("set_averaged_mitigate: budget below one shot per circuit per set");

    auto with_generator = [&](const SuperOperator& gen) {
        std::vector<Segment> segs = sched.segments;
        for (auto& s : segs) s.dissipator = gen;
        return PulseSchedule(std::move(segs));
    };

    double mu = 1.0;
    if (!g.is_taylor()) {
        SuperOperator gen0 = drift_sampled_generator(spec, drift, 0);
        mu = survival_probability(with_generator(gen0), rho);
    }
    CoefficientSet coeffs = select_coefficients(order, g, mu);

    // shots per set, then per fold within a set, remainders to the earliest
    std::vector<long> set_shots(sets, total_shots / sets);
    for (long i = 0; i < total_shots % sets; ++i) set_shots[i] += 1;

    long shot_clock = 0;
    std::vector<double> set_estimates;
    set_estimates.reserve(sets);
    std::vector<double> fold_mean_acc(order + 1, 0.0);
    std::vector<long> fold_shot_acc(order + 1, 0);
    for (int s = 0; s < sets; ++s) {
        long ns = set_shots[s];
        std::vector<long> nm(order + 1, ns / (order + 1));
        for (long i = 0; i < ns % (order + 1); ++i) nm[i] += 1;
        double est = 0.0;
        for (int m = 0; m <= order; ++m) {
            if (nm[m] == 0)
                throw BudgetTooSmall("set_averaged_mitigate: empty fold inside a set");
            double acc = 0.0;
            for (long j = 0; j < nm[m]; ++j) {
                SuperOperator gen = drift_sampled_generator(spec, drift, shot_clock);
                PulseSchedule shot_sched = with_generator(gen);
                SuperOperator k = propagate(shot_sched).value;
                SuperOperator ki = propagate(pulse_inverse(shot_sched)).value;
                CMatrix cyc = ki.mat * k.mat;
                CVector w = rho.vec;
                for (int i = 0; i < m; ++i) w = cyc * w;
                acc += (a.vec * (k.mat * w)).value().real();
                shot_clock += 1;
            }
            double mean = acc / double(nm[m]);
            est += coeffs.values[m] * mean;
            fold_mean_acc[m] += mean * double(nm[m]);
            fold_shot_acc[m] += nm[m];
        }
        set_estimates.push_back(est);
    }

    MitigatedResult r;
    r.mu = mu;
    r.g = coeffs.g;
    r.coefficients = coeffs;
    r.folds.order = order;
    r.folds.mode = FoldedEstimates::Mode::Exact;
    r.folds.seed = seed;
    r.folds.means.resize(order + 1);
    r.folds.variances.assign(order + 1, 0.0);
    r.folds.shots.resize(order + 1);
    for (int m = 0; m <= order; ++m) {
        r.folds.means[m] = fold_mean_acc[m] / double(fold_shot_acc[m]);
        r.folds.shots[m] = fold_shot_acc[m];
    }
    double mean = 0.0;
    for (double e : set_estimates) mean += e;
    mean /= double(sets);
    double var = 0.0;
    for (double e : set_estimates) var += (e - mean) * (e - mean);
    var = sets > 1 ? var / double(sets) / double(sets) : 0.0;  // spread of the set average
    r.estimate = mean;
    r.variance = var;
    return r;
}

}  // namespace kik
