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

#include "kik/dynamics.hpp"

#include <cmath>
#include <map>
#include <tuple>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

namespace kik {

Segment::Segment(double dt, HilbertOp h, SuperOperator l, std::string lbl)
    : duration(dt), hamiltonian(std::move(h)), dissipator(std::move(l)), label(std::move(lbl)) {
    if (duration <= 0) throw InvalidSpec("Segment: duration must be positive");
    if (!hamiltonian.is_hermitian(kDefaultTol))
        throw NonHermitianInput("Segment: Hamiltonian is not Hermitian");
    if (dissipator.dim != hamiltonian.dim())
        throw DimensionMismatch("Segment: dissipator dimension mismatch");
}

PulseSchedule::PulseSchedule(std::vector<Segment> segs) : segments(std::move(segs)) {
    if (segments.empty()) throw InvalidSpec("PulseSchedule: empty schedule");
    Eigen::Index d = segments.front().hamiltonian.dim();
    for (const auto& s : segments)
        if (s.hamiltonian.dim() != d)
            throw DimensionMismatch("PulseSchedule: mixed segment dimensions");
}

double PulseSchedule::total_time() const {
    double t = 0;
    for (const auto& s : segments) t += s.duration;
    return t;
}

namespace {

uint64_t fnv1a(const void* data, size_t n, uint64_t h = 1469598103934665603ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

uint64_t hash_matrix(const CMatrix& m, uint64_t h) {
    return fnv1a(m.data(), sizeof(Complex) * size_t(m.size()), h);
}

}  // namespace

uint64_t PulseSchedule::content_hash() const {
    uint64_t h = 1469598103934665603ull;
    for (const auto& s : segments) {
        h = fnv1a(&s.duration, sizeof(double), h);
        h = hash_matrix(s.hamiltonian.mat, h);
        h = hash_matrix(s.dissipator.mat, h);
    }
    return h;
}

PulseSchedule concat(const PulseSchedule& a, const PulseSchedule& b) {
    std::vector<Segment> segs = a.segments;
    segs.insert(segs.end(), b.segments.begin(), b.segments.end());
    return PulseSchedule(std::move(segs));
}

PulseSchedule pulse_inverse(const PulseSchedule& sched) {
    std::vector<Segment> segs;
    segs.reserve(sched.segments.size());
    for (auto it = sched.segments.rbegin(); it != sched.segments.rend(); ++it) {
        Segment s = *it;
        s.hamiltonian.mat = -s.hamiltonian.mat;
        if (!s.label.empty()) s.label = "inv:" + s.label;
        segs.push_back(std::move(s));
    }
    return PulseSchedule(std::move(segs));
}

CMatrix matrix_exp(const CMatrix& a) {
    CMatrix e = a.exp();
    if (!e.allFinite())
        throw ExponentialDidNotConverge("matrix_exp: non-finite entries in result");
    return e;
}

Propagator propagate(const PulseSchedule& sched, const PropagateOptions& opts) {
    Eigen::Index d = sched.dim();
    CMatrix total = CMatrix::Identity(d * d, d * d);
    std::map<uint64_t, CMatrix> cache;
    for (const auto& seg : sched.segments) {
        SuperOperator hs = hamiltonian_superop(seg.hamiltonian);
        CMatrix gen = Complex(0, -1) * hs.mat;
        if (!opts.noise_free) gen += seg.dissipator.mat;
        gen *= seg.duration;
        uint64_t key = hash_matrix(gen, 1469598103934665603ull);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, matrix_exp(gen)).first;
        total = it->second * total;
    }
    Propagator p;
    p.value = SuperOperator(d, std::move(total));
    p.schedule_hash = sched.content_hash();
    return p;
}

namespace {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    // Golub-Welsch: nodes are eigenvalues of the Jacobi matrix.
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) {
        double b = i / std::sqrt(4.0 * i * i - 1.0);
        j(i, i - 1) = b;
        j(i - 1, i) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        x[i] = es.eigenvalues()(i);
        w[i] = 2.0 * es.eigenvectors()(0, i) * es.eigenvectors()(0, i);
    }
}

// ∫ over one segment of U†(t) L U(t) with U(t) = e^{-iHs*t} * U0. The segment
// Hamiltonian superoperator is Hermitian, so e^{-iHs*t} comes from one
// eigendecomposition evaluated at every node.
CMatrix segment_magnus(const SuperOperator& hs, const CMatrix& l, const CMatrix& u0, double dt,
                       int nodes) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hs.mat);
    const CMatrix& v = es.eigenvectors();
    Eigen::VectorXd lam = es.eigenvalues();
    CMatrix l_in_basis = v.adjoint() * l * v;
    std::vector<double> x, w;
    gauss_legendre(nodes, x, w);
    CMatrix acc = CMatrix::Zero(l.rows(), l.cols());
    for (int k = 0; k < nodes; ++k) {
        double t = 0.5 * dt * (x[k] + 1.0);
        double wt = 0.5 * dt * w[k];
        CVector phase(lam.size());
        for (Eigen::Index i = 0; i < lam.size(); ++i)
            phase(i) = std::exp(Complex(0, -lam(i) * t));
        // U(t)† L U(t) in the eigenbasis: conj(phase_i) L_ij phase_j
        CMatrix term = (phase.conjugate() * phase.transpose()).cwiseProduct(l_in_basis);
        acc += wt * term;
    }
    CMatrix seg = v * acc * v.adjoint();
    return u0.adjoint() * seg * u0;
}

}  // namespace

SuperOperator magnus1(const PulseSchedule& sched, const MagnusOptions& opts) {
    Eigen::Index d = sched.dim();
    Eigen::Index dd = d * d;
    CMatrix omega = CMatrix::Zero(dd, dd);
    CMatrix u_acc = CMatrix::Identity(dd, dd);
    for (const auto& seg : sched.segments) {
        SuperOperator hs = hamiltonian_superop(seg.hamiltonian);
        int nodes = opts.initial_nodes;
        CMatrix est = segment_magnus(hs, seg.dissipator.mat, u_acc, seg.duration, nodes);
        while (true) {
            if (nodes * 2 > opts.max_nodes)
                throw QuadratureNotConverged("magnus1: node doubling exceeded limit");
            CMatrix next = segment_magnus(hs, seg.dissipator.mat, u_acc, seg.duration, nodes * 2);
            double diff = (next - est).cwiseAbs().maxCoeff();
            est = std::move(next);
            nodes *= 2;
            if (diff < opts.tol) break;
        }
        omega += est;
        CMatrix ugen = Complex(0, -1) * hs.mat * seg.duration;
        u_acc = matrix_exp(ugen) * u_acc;
    }
    return SuperOperator(d, std::move(omega));
}

SuperOperator kik_cycle(const PulseSchedule& sched) {
    SuperOperator k = propagate(sched).value;
    SuperOperator ki = propagate(pulse_inverse(sched)).value;
    return SuperOperator(k.dim, ki.mat * k.mat);
}

SuperOperator exact_kik_reference(const SuperOperator& k, const SuperOperator& cycle) {
    Eigen::Index dd = cycle.mat.rows();
    CMatrix inv_sqrt;
    if (cycle.is_hermitian(1e-9)) {
        Eigen::SelfAdjointEigenSolver<CMatrix> es((cycle.mat + cycle.mat.adjoint()) / 2.0);
        Eigen::VectorXd ev = es.eigenvalues();
        CVector scale(ev.size());
        for (Eigen::Index i = 0; i < ev.size(); ++i) {
            if (ev(i) <= 0)
                throw BranchCutViolation("exact_kik_reference: non-positive cycle eigenvalue");
            scale(i) = 1.0 / std::sqrt(ev(i));
        }
        inv_sqrt = es.eigenvectors() * scale.asDiagonal() * es.eigenvectors().adjoint();
    } else {
        Eigen::ComplexEigenSolver<CMatrix> es(cycle.mat);
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
            if (es.eigenvalues()(i).real() <= 0)
                throw BranchCutViolation(
                    "exact_kik_reference: cycle eigenvalue with non-positive real part");
        CMatrix root = cycle.mat.sqrt();  // Schur-based principal square root
        inv_sqrt = root.partialPivLu().solve(CMatrix::Identity(dd, dd));
    }
    return SuperOperator(cycle.dim, k.mat * inv_sqrt);
}

SuperOperator exact_kik_reference(const PulseSchedule& sched) {
    SuperOperator k = propagate(sched).value;
    SuperOperator ki = propagate(pulse_inverse(sched)).value;
    SuperOperator cycle(k.dim, ki.mat * k.mat);
    return exact_kik_reference(k, cycle);
}

}  // namespace kik
