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

#include "qwitness/oscillator.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "qwitness/conservation.hpp"
#include "qwitness/errors.hpp"
#include "qwitness/heisenberg.hpp"
#include "qwitness/parallel.hpp"

namespace qw {

namespace {

Matrix eye(std::size_t d) { return Matrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)); }

Matrix mapped_pauli(Pauli p, const HPQubit &q) {
    switch (p) {
        case Pauli::I:
            return eye(q.d);
        case Pauli::X:
            return 2.0 * q.qx;
        case Pauli::Y:
            return 2.0 * q.qy;
        case Pauli::Z:
            return 2.0 * q.qz;
    }
    return {};
}

Matrix mapped_expr(const OperatorExpr &e, const HPQubit &qa, const HPQubit &qb) {
    if (e.num_qubits() != 2) throw StructuralError("mapped_expr: expected a two-qubit expression");
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(qa.d * qb.d), static_cast<Eigen::Index>(qa.d * qb.d));
    for (const auto &[label, c] : e.terms()) out += c * kron(mapped_pauli(label[0], qa), mapped_pauli(label[1], qb));
    return out;
}

}  // namespace

FockOperators fock_ops(std::size_t d) {
    if (d < 2) throw StructuralError("fock_ops: truncation must keep at least two levels");
    FockOperators f;
    f.d = d;
    f.a = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t n = 1; n < d; ++n) {
        f.a(static_cast<Eigen::Index>(n - 1), static_cast<Eigen::Index>(n)) = std::sqrt(static_cast<double>(n));
    }
    f.adag = f.a.adjoint();
    f.number = f.adag * f.a;
    return f;
}

Matrix clamped_sqrt(const Matrix &hermitian) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitian);
    Eigen::VectorXd root = eig.eigenvalues().unaryExpr([](double v) { return std::sqrt(std::max(v, 0.0)); });
    return eig.eigenvectors() * root.cast<Complex>().asDiagonal() * eig.eigenvectors().adjoint();
}

HPQubit hp_qubit(double s, std::size_t d) {
    if (!(s > 0.0)) throw ContractViolation("hp_qubit: spin must be positive");
    const FockOperators f = fock_ops(d);
    HPQubit q;
    q.s = s;
    q.d = d;
    const Matrix k = clamped_sqrt(2.0 * s * eye(d) - f.number);
    const Matrix raise = k * f.a;  // √(2s − a†a) a
    const Matrix lower = f.adag * k;
    q.qx = 0.5 * (raise + lower);
    q.qy = (raise - lower) / Complex(0.0, 2.0);
    q.qz = s * eye(d) - f.number;
    return q;
}

double su2_residual(const HPQubit &q) {
    auto comm = [](const Matrix &a, const Matrix &b) -> Matrix { return a * b - b * a; };
    const Complex i(0.0, 1.0);
    return std::max({(comm(q.qx, q.qy) - i * q.qz).norm(), (comm(q.qy, q.qz) - i * q.qx).norm(),
                     (comm(q.qz, q.qx) - i * q.qy).norm()});
}

DenseOperator hp_hamiltonian(std::size_t d_b) {
    const FockOperators fa = fock_ops(2);
    const FockOperators fb = fock_ops(d_b);
    const HPQubit qa = hp_qubit(0.5, 2);
    const Matrix ia = eye(2);
    const Matrix ib = eye(d_b);

    Matrix h = 1.5 * kron(ia, ib - fb.number);
    h += 0.5 * kron(ia - fa.number, ib);
    h += kron(qa.qx, 0.5 * ib + fb.number);
    const Matrix hop = kron(clamped_sqrt(ia - fa.number) * fa.a, fb.adag * clamped_sqrt(ib - fb.number));
    h += 0.25 * (hop + hop.adjoint());
    return DenseOperator({2, d_b}, h);
}

DenseOperator hp_mapped_hnet(std::size_t d_b) {
    return DenseOperator({2, d_b}, mapped_expr(hnet_build(), hp_qubit(0.5, 2), hp_qubit(0.5, d_b)));
}

Matrix traceless_part(const Matrix &a) {
    const auto n = a.rows();
    return a - (a.trace() / static_cast<double>(n)) * Matrix::Identity(n, n);
}

HPComparison compare_with_hnet(std::size_t d_b) {
    const Matrix h = traceless_part(hp_hamiltonian(d_b).matrix());
    const Matrix g = traceless_part(hp_mapped_hnet(d_b).matrix());
    HPComparison out;
    out.difference = h - g;
    out.residual = out.difference.norm();
    out.norm_hamiltonian = h.norm();
    out.norm_mapped = g.norm();
    return out;
}

double number_commutator(std::size_t d_b) {
    const Matrix h = hp_hamiltonian(d_b).matrix();
    const Matrix nb = kron(eye(2), fock_ops(d_b).number);
    return commutator_norm(h, nb);
}

double conservation_audit(std::size_t d_b) {
    const Matrix h = hp_hamiltonian(d_b).matrix();
    const Matrix c = mapped_expr(ConservedQuantity::nonadditive().expr, hp_qubit(0.5, 2), hp_qubit(0.5, d_b));
    return commutator_norm(h, c);
}

OscillatorRun oscillator_witness_run(std::size_t d_b, const std::vector<double> &t_grid, unsigned workers) {
    const DenseOperator hop = hp_hamiltonian(d_b);
    if (hop.hermiticity_residual() > 1e-12) throw ContractViolation("oscillator: Hamiltonian is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> eig(hop.matrix());
    const Matrix &v = eig.eigenvectors();
    const Eigen::VectorXd &lambda = eig.eigenvalues();
    const std::size_t dim = 2 * d_b;
    const std::size_t keep[] = {0};

    OscillatorRun run;
    run.d_b = d_b;
    run.t = t_grid;
    run.coherence.assign(d_b, std::vector<double>(t_grid.size(), 0.0));

    struct Partial {
        double unitarity = 0.0, trace_err = 0.0, min_eig = 0.0;
    };
    std::vector<Partial> partial(std::max(1U, workers));
    parallel_chunks(t_grid.size(), workers, [&](std::size_t begin, std::size_t end, unsigned w) {
        Partial &p = partial[w];
        for (std::size_t k = begin; k < end; ++k) {
            Eigen::VectorXcd phase = (lambda.cast<Complex>() * Complex(0.0, -t_grid[k])).array().exp();
            const Matrix u = v * phase.asDiagonal() * v.adjoint();
            p.unitarity = std::max(p.unitarity, (u.adjoint() * u - eye(dim)).norm());
            for (std::size_t m = 0; m < d_b; ++m) {
                // |0⟩_Q ⊗ |m⟩_M is basis index m; its image is column m of U.
                const Vector psi = u.col(static_cast<Eigen::Index>(m));
                const Matrix q =
                    partial_trace(DenseOperator({2, d_b}, psi * psi.adjoint()), keep).matrix();
                p.trace_err = std::max(p.trace_err, std::abs(q.trace() - 1.0));
                p.min_eig = std::min(p.min_eig, min_eigenvalue(q));
                run.coherence[m][k] = 2.0 * std::abs(q(0, 1));
            }
        }
    });
    for (const auto &p : partial) {
        run.max_unitarity_residual = std::max(run.max_unitarity_residual, p.unitarity);
        run.max_trace_error = std::max(run.max_trace_error, p.trace_err);
        run.min_eigenvalue = std::min(run.min_eigenvalue, p.min_eig);
    }
    for (const auto &row : run.coherence) {
        run.max_coherence.push_back(row.empty() ? 0.0 : *std::max_element(row.begin(), row.end()));
    }
    return run;
}

}  // namespace qw
