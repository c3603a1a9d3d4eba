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

#include <string>
#include <utility>
#include <vector>

#include "kik/types.hpp"

namespace kik {

// Pauli algebra helpers. Strings are like "XIZ", one letter per qubit,
// leftmost letter = qubit 0 (leftmost tensor factor).
CMatrix pauli_matrix(char p);
HilbertOp pauli_string_op(const std::string& s);
CMatrix kron(const CMatrix& a, const CMatrix& b);
// A acting on qubit j of an n-qubit register.
CMatrix op_on_qubit(const CMatrix& a, int j, int n);

// Row-major vectorization: |B> = (B_11, B_12, ..., B_dd)^T.
// Satisfies vectorize(B C D) = (B ⊗ D^T) vectorize(C).
VecState vectorize(const HilbertOp& rho);
VecObservable observable_vec(const HilbertOp& a);

// H ⊗ I − I ⊗ H^T, the Liouville representation of -i-free [H, ·].
SuperOperator hamiltonian_superop(const HilbertOp& h, double tol = kDefaultTol);

// Σ_k γ_k (A_k ⊗ A_k^* − ½A_k†A_k ⊗ I − ½I ⊗ (A_k†A_k)^T).
SuperOperator lindblad_superop(const std::vector<std::pair<HilbertOp, double>>& jumps);

// Σ α_k (P_k ⊗ P_k^T − I). Hermitian for real α.
SuperOperator pauli_channel_superop(const std::vector<std::pair<std::string, double>>& terms);

// Superoperator of a unitary: U ⊗ U^*.
SuperOperator unitary_superop(const HilbertOp& u);

struct Expectation {
    double value = 0.0;
    double imag_residual = 0.0;
};
Expectation expectation_full(const VecObservable& a, const SuperOperator& s, const VecState& rho);
double expectation(const VecObservable& a, const SuperOperator& s, const VecState& rho);

// (R_Λ)_ij = (1/d) Tr[P_i Λ(P_j)]; imaginary parts must be < tol and are discarded.
PauliTransferMatrix ptm_of(const SuperOperator& s, double tol = kDefaultTol);

// F = (Tr(R_Λ^{-1} R_U) + d) / (d(d+1)), implemented exactly as written.
double avg_gate_fidelity_ptm(const PauliTransferMatrix& r_lambda, const PauliTransferMatrix& r_u);
// Standard variant with the adjoint in place of the inverse. The two differ
// for noisy channels; reported fidelity tables follow this variant.
double avg_gate_fidelity_ptm_adjoint(const PauliTransferMatrix& r_lambda,
                                     const PauliTransferMatrix& r_u);

struct FidelityOptions {
    double psd_clamp = -1e-9;      // eigenvalues below this reject the input
    double trace_tol = 1e-8;
    bool clamp_negative = false;   // clamp slightly negative eigenvalues instead of rejecting
};
// Uhlmann fidelity [Tr sqrt(sqrt(rho) sigma sqrt(rho))]^2.
double state_fidelity(const HilbertOp& rho, const HilbertOp& sigma, const FidelityOptions& opts = {});

}  // namespace kik
