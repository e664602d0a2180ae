// Copyright 2026 The qwitness Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QWITNESS_DENSE_OPERATOR_HPP
#define QWITNESS_DENSE_OPERATOR_HPP

#include <Eigen/Dense>
#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "qwitness/pauli.hpp"

namespace qw {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Bloch = std::array<double, 3>;

/// Complex matrix acting on a tensor product with the listed subsystem
/// dimensions. Subsystem 0 is the most significant index.
class DenseOperator {
   public:
    DenseOperator() = default;
    DenseOperator(std::vector<std::size_t> dims, Matrix entries);

    static DenseOperator identity(std::vector<std::size_t> dims);
    static DenseOperator qubits(std::size_t num_qubits, Matrix entries);

    const std::vector<std::size_t> &dims() const { return dims_; }
    const Matrix &matrix() const { return entries_; }
    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    bool all_qubits() const;

    DenseOperator adjoint() const { return {dims_, entries_.adjoint()}; }
    Complex trace() const { return entries_.trace(); }
    double norm() const { return entries_.norm(); }

    /// ‖A − A†‖_F
    double hermiticity_residual() const;
    /// ‖A†A − I‖_F
    double unitarity_residual() const;

    friend DenseOperator operator*(const DenseOperator &a, const DenseOperator &b);
    friend DenseOperator operator+(const DenseOperator &a, const DenseOperator &b);
    friend DenseOperator operator-(const DenseOperator &a, const DenseOperator &b);
    friend DenseOperator operator*(Complex s, const DenseOperator &a) { return {a.dims_, s * a.entries_}; }

   private:
    std::vector<std::size_t> dims_;
    Matrix entries_;
};

/// Z = diag(1, −1), X = [[0,1],[1,0]], Y = [[0,−i],[i,0]].
Matrix pauli_matrix(Pauli p);

DenseOperator kron(const DenseOperator &a, const DenseOperator &b);
Matrix kron(const Matrix &a, const Matrix &b);

DenseOperator to_dense(const OperatorExpr &expr);
DenseOperator to_dense(const OperatorExpr &expr, const std::vector<std::size_t> &dims);
DenseOperator to_dense(const PauliString &p);

/// Coefficients Tr(P†D)/2^n over all Pauli strings; terms below
/// kDropTolerance are dropped.
OperatorExpr pauli_decompose(const DenseOperator &d);

/// Traces out every subsystem not listed in `keep`. The result keeps the
/// remaining subsystems in their original order.
DenseOperator partial_trace(const DenseOperator &d, std::span<const std::size_t> keep);

/// e^{−iHt} through the Hermitian eigendecomposition of H.
DenseOperator expm_hermitian(const DenseOperator &h, double t);

/// Frobenius norm of AB − BA.
double commutator_norm(const Matrix &a, const Matrix &b);

// --- states -------------------------------------------------------------

/// Throws ContractViolation unless rho is Hermitian, unit trace and
/// positive semidefinite within tol.
void require_density_matrix(const Matrix &rho, double tol = 1e-10);
double min_eigenvalue(const Matrix &hermitian);
Matrix density_from_bloch(const Bloch &r);
Bloch bloch_vector(const Matrix &rho);
Matrix projector(const Vector &ket);
/// ½‖ρ − σ‖₁
double trace_distance(const Matrix &rho, const Matrix &sigma);

}  // namespace qw

#endif
