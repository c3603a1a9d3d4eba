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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace kik {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using CRowVector = Eigen::RowVectorXcd;
using RMatrix = Eigen::MatrixXd;

// Error hierarchy. ConfigError maps to CLI exit code 2, NumericalError to 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : Error {
    using Error::Error;
};
struct NumericalError : Error {
    using Error::Error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct NonHermitianInput : Error { using Error::Error; };
struct NegativeRate : Error { using Error::Error; };
struct InvalidPauliString : Error { using Error::Error; };
struct NotQubitDimension : Error { using Error::Error; };
struct SingularPTM : NumericalError { using NumericalError::NumericalError; };
struct NotDensityMatrix : Error { using Error::Error; };
struct ExponentialDidNotConverge : NumericalError { using NumericalError::NumericalError; };
struct QuadratureNotConverged : NumericalError { using NumericalError::NumericalError; };
struct BranchCutViolation : NumericalError { using NumericalError::NumericalError; };
struct InvalidSpec : ConfigError { using ConfigError::ConfigError; };
struct OrderTooLarge : Error { using Error::Error; };
struct OutOfRangeG : Error { using Error::Error; };
struct IllConditionedSystem : NumericalError { using NumericalError::NumericalError; };
struct BudgetTooSmall : Error { using Error::Error; };
struct SingularMeasurementMatrix : NumericalError { using NumericalError::NumericalError; };
struct UnsupportedLogicalUnitary : Error { using Error::Error; };
struct RegressionDegenerate : Error { using Error::Error; };

constexpr double kDefaultTol = 1e-10;

// Operator on the d-dimensional Hilbert space.
struct HilbertOp {
    CMatrix mat;

    HilbertOp() = default;
    explicit HilbertOp(CMatrix m) : mat(std::move(m)) {
        if (mat.rows() != mat.cols())
            throw DimensionMismatch("HilbertOp: matrix must be square");
    }

    Eigen::Index dim() const { return mat.rows(); }

    bool is_hermitian(double tol = kDefaultTol) const {
        return (mat - mat.adjoint()).cwiseAbs().maxCoeff() <= tol;
    }
    bool is_unitary(double tol = kDefaultTol) const {
        CMatrix r = mat.adjoint() * mat;
        r -= CMatrix::Identity(dim(), dim());
        return r.cwiseAbs().maxCoeff() <= tol;
    }
};

// Row-major vectorized density matrix |rho>.
struct VecState {
    Eigen::Index dim = 0;  // Hilbert dimension d; vector length is d^2
    CVector vec;

    VecState() = default;
    VecState(Eigen::Index d, CVector v) : dim(d), vec(std::move(v)) {
        if (vec.size() != dim * dim)
            throw DimensionMismatch("VecState: length must be dim^2");
    }

    CMatrix unvectorized() const;
    // Hermitian within tol and unit trace within tol (used by `physical` checks).
    bool is_physical(double tol = kDefaultTol) const;
};

// Row vector <A| built from a Hermitian observable A.
struct VecObservable {
    Eigen::Index dim = 0;
    CRowVector vec;

    VecObservable() = default;
    VecObservable(Eigen::Index d, CRowVector v) : dim(d), vec(std::move(v)) {
        if (vec.size() != dim * dim)
            throw DimensionMismatch("VecObservable: length must be dim^2");
    }
};

// Dense d^2 x d^2 matrix acting on vectorized states.
struct SuperOperator {
    Eigen::Index dim = 0;  // Hilbert dimension d
    CMatrix mat;

    SuperOperator() = default;
    SuperOperator(Eigen::Index d, CMatrix m) : dim(d), mat(std::move(m)) {
        if (mat.rows() != mat.cols() || mat.rows() != dim * dim)
            throw DimensionMismatch("SuperOperator: matrix must be d^2 x d^2");
    }
    static SuperOperator Identity(Eigen::Index d) {
        return SuperOperator(d, CMatrix::Identity(d * d, d * d));
    }
    static SuperOperator Zero(Eigen::Index d) {
        return SuperOperator(d, CMatrix::Zero(d * d, d * d));
    }

    bool is_hermitian(double tol = kDefaultTol) const {
        return (mat - mat.adjoint()).cwiseAbs().maxCoeff() <= tol;
    }
    // <I| S = <I| (trace preservation of the map).
    bool is_trace_preserving(double tol = kDefaultTol) const;
    // <I| S = 0 (trace preservation of the generator e^{St}).
    bool annihilates_trace(double tol = 1e-12) const;
};

// 4^n x 4^n real Pauli transfer matrix.
struct PauliTransferMatrix {
    int n_qubits = 0;
    RMatrix mat;
};

}  // namespace kik
