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

#include "kik/liouville.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace kik {

CMatrix pauli_matrix(char p) {
    CMatrix m(2, 2);
    switch (p) {
        case 'I': m << 1, 0, 0, 1; break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default:
            throw InvalidPauliString(std::string("invalid Pauli letter '") + p + "'");
    }
    return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

HilbertOp pauli_string_op(const std::string& s) {
    if (s.empty()) throw InvalidPauliString("empty Pauli string");
    CMatrix out = pauli_matrix(s[0]);
    for (size_t k = 1; k < s.size(); ++k) out = kron(out, pauli_matrix(s[k]));
    return HilbertOp(std::move(out));
}

CMatrix op_on_qubit(const CMatrix& a, int j, int n) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (int k = 0; k < n; ++k) {
        if (k == j)
            out = kron(out, a);
        else
            out = kron(out, CMatrix::Identity(2, 2));
    }
    return out;
}

CMatrix VecState::unvectorized() const {
    CMatrix rho(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) rho(i, j) = vec(i * dim + j);
    return rho;
}

bool VecState::is_physical(double tol) const {
    CMatrix rho = unvectorized();
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    return std::abs(rho.trace() - Complex(1, 0)) <= tol;
}

bool SuperOperator::is_trace_preserving(double tol) const {
    CMatrix id = CMatrix::Identity(dim, dim);
    CRowVector bra(dim * dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) bra(i * dim + j) = std::conj(id(i, j));
    CRowVector out = bra * mat;
    return (out - bra).cwiseAbs().maxCoeff() <= tol;
}

bool SuperOperator::annihilates_trace(double tol) const {
    CMatrix id = CMatrix::Identity(dim, dim);
    CRowVector bra(dim * dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) bra(i * dim + j) = std::conj(id(i, j));
    CRowVector out = bra * mat;
    return out.cwiseAbs().maxCoeff() <= tol;
}

VecState vectorize(const HilbertOp& rho) {
    Eigen::Index d = rho.dim();
    CVector v(d * d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) v(i * d + j) = rho.mat(i, j);
    return VecState(d, std::move(v));
}

VecObservable observable_vec(const HilbertOp& a) {
    Eigen::Index d = a.dim();
    CRowVector v(d * d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) v(i * d + j) = std::conj(a.mat(i, j));
    return VecObservable(d, std::move(v));
}

SuperOperator hamiltonian_superop(const HilbertOp& h, double tol) {
    if (!h.is_hermitian(tol))
        throw NonHermitianInput("hamiltonian_superop: H is not Hermitian");
    Eigen::Index d = h.dim();
    CMatrix id = CMatrix::Identity(d, d);
    return SuperOperator(d, kron(h.mat, id) - kron(id, h.mat.transpose()));
}

SuperOperator lindblad_superop(const std::vector<std::pair<HilbertOp, double>>& jumps) {
    if (jumps.empty()) throw InvalidSpec("lindblad_superop: empty jump list has no dimension");
    Eigen::Index d = jumps.front().first.dim();
    CMatrix id = CMatrix::Identity(d, d);
    CMatrix out = CMatrix::Zero(d * d, d * d);
    for (const auto& [a, rate] : jumps) {
        if (rate < 0) throw NegativeRate("lindblad_superop: negative rate");
        if (a.dim() != d) throw DimensionMismatch("lindblad_superop: mixed dimensions");
        CMatrix ada = a.mat.adjoint() * a.mat;
        out += rate * (kron(a.mat, a.mat.conjugate()) - 0.5 * kron(ada, id) -
                       0.5 * kron(id, ada.transpose()));
    }
    return SuperOperator(d, std::move(out));
}

SuperOperator lindblad_superop_zero(Eigen::Index d) {
    return SuperOperator::Zero(d);
}

SuperOperator pauli_channel_superop(const std::vector<std::pair<std::string, double>>& terms) {
    if (terms.empty()) throw InvalidSpec("pauli_channel_superop: empty term list has no dimension");
    Eigen::Index d = Eigen::Index(1) << terms.front().first.size();
    CMatrix out = CMatrix::Zero(d * d, d * d);
    CMatrix id2 = CMatrix::Identity(d * d, d * d);
    for (const auto& [s, alpha] : terms) {
        HilbertOp p = pauli_string_op(s);
        if (p.dim() != d) throw InvalidPauliString("pauli_channel_superop: mixed string lengths");
        out += alpha * (kron(p.mat, p.mat.transpose()) - id2);
    }
    return SuperOperator(d, std::move(out));
}

SuperOperator unitary_superop(const HilbertOp& u) {
    return SuperOperator(u.dim(), kron(u.mat, u.mat.conjugate()));
}

Expectation expectation_full(const VecObservable& a, const SuperOperator& s, const VecState& rho) {
    if (a.dim != s.dim || s.dim != rho.dim)
        throw DimensionMismatch("expectation: dimension mismatch");
    Complex val = (a.vec * (s.mat * rho.vec)).value();
    return Expectation{val.real(), std::abs(val.imag())};
}

double expectation(const VecObservable& a, const SuperOperator& s, const VecState& rho) {
    return expectation_full(a, s, rho).value;
}

namespace {

// All n-qubit Pauli strings in lexicographic I<X<Y<Z-free order; index j maps
// base-4 digits to {I,X,Y,Z} with qubit 0 as the most significant digit.
std::vector<std::string> pauli_basis_strings(int n) {
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

}  // namespace

PauliTransferMatrix ptm_of(const SuperOperator& s, double tol) {
    Eigen::Index d = s.dim;
    int n = 0;
    while ((Eigen::Index(1) << n) < d) ++n;
    if ((Eigen::Index(1) << n) != d)
        throw NotQubitDimension("ptm_of: dimension is not a power of two");
    auto strings = pauli_basis_strings(n);
    Eigen::Index nb = Eigen::Index(strings.size());
    std::vector<CVector> kets(nb);
    std::vector<CRowVector> bras(nb);
    for (Eigen::Index j = 0; j < nb; ++j) {
        HilbertOp p = pauli_string_op(strings[j]);
        kets[j] = vectorize(p).vec;
        bras[j] = observable_vec(p).vec;
    }
    PauliTransferMatrix r;
    r.n_qubits = n;
    r.mat.resize(nb, nb);
    for (Eigen::Index j = 0; j < nb; ++j) {
        CVector col = s.mat * kets[j];
        for (Eigen::Index i = 0; i < nb; ++i) {
            Complex e = (bras[i] * col).value() / double(d);
            if (std::abs(e.imag()) > tol)
                throw NumericalError("ptm_of: entry has non-negligible imaginary part");
            r.mat(i, j) = e.real();
        }
    }
    return r;
}

double avg_gate_fidelity_ptm(const PauliTransferMatrix& r_lambda, const PauliTransferMatrix& r_u) {
    if (r_lambda.mat.rows() != r_u.mat.rows())
        throw DimensionMismatch("avg_gate_fidelity_ptm: size mismatch");
    Eigen::JacobiSVD<RMatrix> svd(r_lambda.mat);
    double smin = svd.singularValues().minCoeff();
    double smax = svd.singularValues().maxCoeff();
    if (smin <= 0 || smax / smin > 1e10)
        throw SingularPTM("avg_gate_fidelity_ptm: PTM condition number too large");
    double d = std::pow(2.0, r_lambda.n_qubits);
    RMatrix inv = r_lambda.mat.partialPivLu().solve(RMatrix::Identity(r_lambda.mat.rows(), r_lambda.mat.cols()));
    return ((inv * r_u.mat).trace() + d) / (d * (d + 1.0));
}

double avg_gate_fidelity_ptm_adjoint(const PauliTransferMatrix& r_lambda,
                                     const PauliTransferMatrix& r_u) {
    if (r_lambda.mat.rows() != r_u.mat.rows())
        throw DimensionMismatch("avg_gate_fidelity_ptm_adjoint: size mismatch");
    double d = std::pow(2.0, r_lambda.n_qubits);
    return ((r_lambda.mat.transpose() * r_u.mat).trace() + d) / (d * (d + 1.0));
}

namespace {

CMatrix psd_sqrt(const CMatrix& m, const FidelityOptions& opts, const char* who) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
    Eigen::VectorXd ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) < opts.psd_clamp && !opts.clamp_negative)
            throw NotDensityMatrix(std::string(who) + ": negative eigenvalue");
        if (ev(i) < 0) ev(i) = 0;
    }
    return es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double state_fidelity(const HilbertOp& rho, const HilbertOp& sigma, const FidelityOptions& opts) {
    if (rho.dim() != sigma.dim()) throw DimensionMismatch("state_fidelity: dimension mismatch");
    if (!opts.clamp_negative) {
        if (std::abs(rho.mat.trace().real() - 1.0) > opts.trace_tol ||
            std::abs(sigma.mat.trace().real() - 1.0) > opts.trace_tol)
            throw NotDensityMatrix("state_fidelity: trace differs from 1");
    }
    CMatrix sr = psd_sqrt(rho.mat, opts, "state_fidelity(rho)");
    CMatrix inner = sr * sigma.mat * sr;
    // inner is Hermitian PSD up to numerical noise; clamp for the outer sqrt
    Eigen::SelfAdjointEigenSolver<CMatrix> es((inner + inner.adjoint()) / 2.0);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        double ev = es.eigenvalues()(i);
        if (ev < opts.psd_clamp && !opts.clamp_negative)
            throw NotDensityMatrix("state_fidelity: inner product has negative eigenvalue");
        if (ev > 0) acc += std::sqrt(ev);
    }
    return acc * acc;
}

}  // namespace kik
