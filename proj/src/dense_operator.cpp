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

#include "qwitness/dense_operator.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qwitness/errors.hpp"

namespace qw {

namespace {

std::size_t product(const std::vector<std::size_t> &dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

std::string dims_string(const std::vector<std::size_t> &dims) {
    std::string s = "(";
    for (std::size_t k = 0; k < dims.size(); ++k) s += (k ? "," : "") + std::to_string(dims[k]);
    return s + ")";
}

void require_same_dims(const DenseOperator &a, const DenseOperator &b) {
    if (a.dims() != b.dims()) {
        throw StructuralError("dimension profiles differ: " + dims_string(a.dims()) + " vs " + dims_string(b.dims()));
    }
}

// Column j of a Pauli string: P|j> = phase |row>.
struct PauliColumn {
    std::size_t row;
    Complex phase;
};

PauliColumn pauli_column(const PauliLabel &label, std::size_t j) {
    const std::size_t n = label.size();
    std::size_t row = j;
    Complex phase = 1.0;
    for (std::size_t s = 0; s < n; ++s) {
        std::size_t bit_pos = n - 1 - s;
        bool bit = (j >> bit_pos) & 1U;
        switch (label[s]) {
            case Pauli::I:
                break;
            case Pauli::X:
                row ^= std::size_t{1} << bit_pos;
                break;
            case Pauli::Y:
                row ^= std::size_t{1} << bit_pos;
                phase *= bit ? Complex(0, -1) : Complex(0, 1);
                break;
            case Pauli::Z:
                if (bit) phase = -phase;
                break;
        }
    }
    return {row, phase};
}

}  // namespace

DenseOperator::DenseOperator(std::vector<std::size_t> dims, Matrix entries)
    : dims_(std::move(dims)), entries_(std::move(entries)) {
    auto side = static_cast<Eigen::Index>(product(dims_));
    if (entries_.rows() != side || entries_.cols() != side) {
        throw StructuralError("matrix of size " + std::to_string(entries_.rows()) + "x" +
                              std::to_string(entries_.cols()) + " does not match dims " + dims_string(dims_));
    }
}

DenseOperator DenseOperator::identity(std::vector<std::size_t> dims) {
    auto side = static_cast<Eigen::Index>(product(dims));
    return {std::move(dims), Matrix::Identity(side, side)};
}

DenseOperator DenseOperator::qubits(std::size_t num_qubits, Matrix entries) {
    return {std::vector<std::size_t>(num_qubits, 2), std::move(entries)};
}

bool DenseOperator::all_qubits() const {
    return std::all_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 2; });
}

double DenseOperator::hermiticity_residual() const { return (entries_ - entries_.adjoint()).norm(); }

double DenseOperator::unitarity_residual() const {
    return (entries_.adjoint() * entries_ - Matrix::Identity(entries_.rows(), entries_.cols())).norm();
}

DenseOperator operator*(const DenseOperator &a, const DenseOperator &b) {
    require_same_dims(a, b);
    return {a.dims_, a.entries_ * b.entries_};
}

DenseOperator operator+(const DenseOperator &a, const DenseOperator &b) {
    require_same_dims(a, b);
    return {a.dims_, a.entries_ + b.entries_};
}

DenseOperator operator-(const DenseOperator &a, const DenseOperator &b) {
    require_same_dims(a, b);
    return {a.dims_, a.entries_ - b.entries_};
}

Matrix pauli_matrix(Pauli p) {
    Matrix m(2, 2);
    switch (p) {
        case Pauli::I:
            m << 1, 0, 0, 1;
            break;
        case Pauli::X:
            m << 0, 1, 1, 0;
            break;
        case Pauli::Y:
            m << 0, Complex(0, -1), Complex(0, 1), 0;
            break;
        case Pauli::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

DenseOperator kron(const DenseOperator &a, const DenseOperator &b) {
    std::vector<std::size_t> dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return {std::move(dims), kron(a.matrix(), b.matrix())};
}

DenseOperator to_dense(const OperatorExpr &expr) {
    return to_dense(expr, std::vector<std::size_t>(expr.num_qubits(), 2));
}

DenseOperator to_dense(const OperatorExpr &expr, const std::vector<std::size_t> &dims) {
    if (dims.size() != expr.num_qubits()) {
        throw StructuralError("to_dense: " + std::to_string(expr.num_qubits()) + " Pauli sites but dims " +
                              dims_string(dims));
    }
    if (!std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 2; })) {
        throw StructuralError("to_dense: Pauli input requires qubit dims, got " + dims_string(dims));
    }
    const std::size_t side = std::size_t{1} << expr.num_qubits();
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(side), static_cast<Eigen::Index>(side));
    for (const auto &[label, c] : expr.terms()) {
        for (std::size_t j = 0; j < side; ++j) {
            auto col = pauli_column(label, j);
            m(static_cast<Eigen::Index>(col.row), static_cast<Eigen::Index>(j)) += c * col.phase;
        }
    }
    return {dims, std::move(m)};
}

DenseOperator to_dense(const PauliString &p) { return to_dense(OperatorExpr(p)); }

OperatorExpr pauli_decompose(const DenseOperator &d) {
    if (!d.all_qubits()) throw StructuralError("pauli_decompose: non-qubit dims " + dims_string(d.dims()));
    const std::size_t n = d.dims().size();
    const std::size_t side = d.dim();
    const Matrix &m = d.matrix();
    OperatorExpr out(n);
    for (const auto &basis : all_pauli_strings(n)) {
        const PauliLabel &label = basis.terms().begin()->first;
        // Tr(P† D) = Σ_j conj(phase_j) D(row_j, j)
        Complex acc = 0.0;
        for (std::size_t j = 0; j < side; ++j) {
            auto col = pauli_column(label, j);
            acc += std::conj(col.phase) * m(static_cast<Eigen::Index>(col.row), static_cast<Eigen::Index>(j));
        }
        acc /= static_cast<double>(side);
        if (std::abs(acc) >= kDropTolerance) out += OperatorExpr(PauliString(label, acc));
    }
    return out;
}

DenseOperator partial_trace(const DenseOperator &d, std::span<const std::size_t> keep) {
    const auto &dims = d.dims();
    if (keep.empty()) throw StructuralError("partial_trace: empty keep set");
    std::vector<bool> kept(dims.size(), false);
    for (auto k : keep) {
        if (k >= dims.size()) throw StructuralError("partial_trace: subsystem " + std::to_string(k) + " out of range");
        if (kept[k]) throw StructuralError("partial_trace: subsystem " + std::to_string(k) + " listed twice");
        kept[k] = true;
    }

    std::vector<std::size_t> keep_dims;
    std::vector<std::size_t> strides(dims.size());
    std::size_t stride = 1;
    for (std::size_t s = dims.size(); s-- > 0;) {
        strides[s] = stride;
        stride *= dims[s];
    }
    std::vector<std::size_t> keep_order, trace_order;
    for (std::size_t s = 0; s < dims.size(); ++s) {
        if (kept[s]) {
            keep_order.push_back(s);
            keep_dims.push_back(dims[s]);
        } else {
            trace_order.push_back(s);
        }
    }

    // Full index offsets contributed by each kept / traced multi-index.
    auto offsets = [&](const std::vector<std::size_t> &order) {
        std::size_t count = 1;
        for (auto s : order) count *= dims[s];
        std::vector<std::size_t> out(count, 0);
        for (std::size_t idx = 0; idx < count; ++idx) {
            std::size_t rem = idx;
            std::size_t off = 0;
            for (std::size_t k = order.size(); k-- > 0;) {
                std::size_t s = order[k];
                off += (rem % dims[s]) * strides[s];
                rem /= dims[s];
            }
            out[idx] = off;
        }
        return out;
    };
    const auto keep_off = offsets(keep_order);
    const auto trace_off = offsets(trace_order);

    const auto side = static_cast<Eigen::Index>(keep_off.size());
    Matrix out = Matrix::Zero(side, side);
    const Matrix &m = d.matrix();
    for (Eigen::Index a = 0; a < side; ++a) {
        for (Eigen::Index b = 0; b < side; ++b) {
            Complex acc = 0.0;
            for (auto t : trace_off) {
                acc += m(static_cast<Eigen::Index>(keep_off[a] + t), static_cast<Eigen::Index>(keep_off[b] + t));
            }
            out(a, b) = acc;
        }
    }
    return {std::move(keep_dims), std::move(out)};
}

DenseOperator expm_hermitian(const DenseOperator &h, double t) {
    double herm = h.hermiticity_residual();
    if (!(herm <= 1e-10)) {
        throw ContractViolation("expm_hermitian: input not Hermitian (residual " + std::to_string(herm) + ")");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(h.matrix());
    Vector phases = (eig.eigenvalues().cast<Complex>() * Complex(0.0, -t)).array().exp();
    Matrix u = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
    return {h.dims(), std::move(u)};
}

double commutator_norm(const Matrix &a, const Matrix &b) { return (a * b - b * a).norm(); }

double min_eigenvalue(const Matrix &hermitian) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitian, Eigen::EigenvaluesOnly);
    return eig.eigenvalues().minCoeff();
}

void require_density_matrix(const Matrix &rho, double tol) {
    if (rho.rows() != rho.cols() || rho.rows() == 0) throw ContractViolation("density matrix must be square");
    if ((rho - rho.adjoint()).norm() > tol) throw ContractViolation("density matrix is not Hermitian");
    if (std::abs(rho.trace() - Complex(1.0)) > tol) throw ContractViolation("density matrix trace is not 1");
    if (min_eigenvalue(rho) < -tol) throw ContractViolation("density matrix is not positive semidefinite");
}

Matrix density_from_bloch(const Bloch &r) {
    Matrix rho = 0.5 * (pauli_matrix(Pauli::I) + r[0] * pauli_matrix(Pauli::X) + r[1] * pauli_matrix(Pauli::Y) +
                        r[2] * pauli_matrix(Pauli::Z));
    return rho;
}

Bloch bloch_vector(const Matrix &rho) {
    if (rho.rows() != 2 || rho.cols() != 2) throw StructuralError("bloch_vector: expected a qubit state");
    return {(rho * pauli_matrix(Pauli::X)).trace().real(), (rho * pauli_matrix(Pauli::Y)).trace().real(),
            (rho * pauli_matrix(Pauli::Z)).trace().real()};
}

Matrix projector(const Vector &ket) { return ket * ket.adjoint(); }

double trace_distance(const Matrix &rho, const Matrix &sigma) {
    Matrix diff = rho - sigma;
    Matrix herm = 0.5 * (diff + diff.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> eig(herm, Eigen::EigenvaluesOnly);
    return 0.5 * eig.eigenvalues().cwiseAbs().sum();
}

}  // namespace qw
