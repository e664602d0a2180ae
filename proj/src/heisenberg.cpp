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

#include "qwitness/heisenberg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "qwitness/errors.hpp"

namespace qw {

namespace {

// Rewrites an expression in the t_0 basis as a function of the descriptors
// in `frame`: each σ_a^Q σ_b^M becomes q_a^Q(t) q_b^M(t).
OperatorExpr substitute(const OperatorExpr &expr, const DescriptorFrame &frame) {
    OperatorExpr out(2);
    for (const auto &[label, c] : expr.terms()) {
        OperatorExpr term = OperatorExpr::identity(2) * c;
        for (std::size_t site = 0; site < 2; ++site) {
            if (label[site] == Pauli::I) continue;
            term = term * frame.q[site][static_cast<std::size_t>(label[site]) - 1];
        }
        out += term;
    }
    return out;
}

}  // namespace

std::string GateSpec::name() const {
    char buf[48];
    switch (kind) {
        case GateKind::kCnotMQ:
            return "CNOT_MQ";
        case GateKind::kCphaseMQ:
            return "CPHASE_MQ";
        case GateKind::kRyM:
            std::snprintf(buf, sizeof buf, "RY_M(%.17g)", angle);
            return buf;
        case GateKind::kSwap:
            return "SWAP";
        case GateKind::kPartialSwap:
            std::snprintf(buf, sizeof buf, "PARTIAL_SWAP(%.17g)", angle);
            return buf;
    }
    throw StructuralError("unknown gate kind");
}

Circuit witness_circuit() {
    constexpr double half_pi = std::numbers::pi / 2;
    return {GateSpec::cnot(), GateSpec::ry(half_pi), GateSpec::cphase(), GateSpec::swap(), GateSpec::ry(-half_pi),
            GateSpec::cnot()};
}

OperatorExpr gate_expr(const GateSpec &g) {
    const auto id = OperatorExpr::identity(2);
    const auto z_m = OperatorExpr::from_label("IZ");
    const auto on = 0.5 * (id - z_m);
    const auto off = 0.5 * (id + z_m);
    switch (g.kind) {
        case GateKind::kCnotMQ:
            return off + on * OperatorExpr::from_label("XI");
        case GateKind::kCphaseMQ:
            return off + on * OperatorExpr::from_label("ZI");
        case GateKind::kRyM:
            return std::cos(g.angle / 2) * id + Complex(0, -std::sin(g.angle / 2)) * OperatorExpr::from_label("IY");
        case GateKind::kSwap:
            return 0.5 * OperatorExpr::from_terms({{"II", 1}, {"XX", 1}, {"YY", 1}, {"ZZ", 1}});
        case GateKind::kPartialSwap:
            return std::cos(g.angle) * id + Complex(0, std::sin(g.angle)) * gate_expr(GateSpec::swap());
    }
    throw StructuralError("unknown gate kind");
}

DenseOperator gate_unitary(const GateSpec &g) { return to_dense(gate_expr(g)); }

DenseOperator circuit_unitary(const Circuit &c, std::size_t upto) {
    DenseOperator u = DenseOperator::identity({2, 2});
    for (std::size_t k = 0; k < c.size() && k < upto; ++k) u = gate_unitary(c[k]) * u;
    return u;
}

DescriptorFrame canonical_frame() {
    DescriptorFrame f;
    f.time = 0;
    const char *q_labels[3] = {"XI", "YI", "ZI"};
    const char *m_labels[3] = {"IX", "IY", "IZ"};
    for (std::size_t k = 0; k < 3; ++k) {
        f.q[kProbe][k] = OperatorExpr::from_label(q_labels[k]);
        f.q[kMediator][k] = OperatorExpr::from_label(m_labels[k]);
    }
    return f;
}

std::vector<DescriptorFrame> evolve_descriptors(const Circuit &c, const DescriptorFrame &frame0) {
    if (c.empty()) throw StructuralError("evolve_descriptors: empty circuit");
    std::vector<DescriptorFrame> frames{frame0};
    for (std::size_t k = 0; k < c.size(); ++k) {
        const DescriptorFrame &prev = frames.back();
        OperatorExpr u = substitute(gate_expr(c[k]), prev);
        OperatorExpr u_dag = u.adjoint();
        DescriptorFrame next;
        next.time = prev.time + 1;
        for (std::size_t s = 0; s < 2; ++s) {
            for (std::size_t j = 0; j < 3; ++j) next.q[s][j] = u_dag * prev.q[s][j] * u;
        }
        frames.push_back(std::move(next));
    }
    return frames;
}

std::vector<DescriptorFrame> evolve_descriptors_composite(const Circuit &c, const DescriptorFrame &frame0) {
    if (c.empty()) throw StructuralError("evolve_descriptors: empty circuit");
    std::vector<DescriptorFrame> frames{frame0};
    std::array<std::array<DenseOperator, 3>, 2> dense0;
    for (std::size_t s = 0; s < 2; ++s) {
        for (std::size_t j = 0; j < 3; ++j) dense0[s][j] = to_dense(frame0.q[s][j]);
    }
    for (std::size_t k = 1; k <= c.size(); ++k) {
        DenseOperator w = circuit_unitary(c, k);
        DescriptorFrame f;
        f.time = frame0.time + k;
        for (std::size_t s = 0; s < 2; ++s) {
            for (std::size_t j = 0; j < 3; ++j) f.q[s][j] = pauli_decompose(w.adjoint() * dense0[s][j] * w);
        }
        frames.push_back(std::move(f));
    }
    return frames;
}

const std::array<std::array<std::array<const char *, 3>, 2>, 7> &descriptor_table_expected() {
    static const std::array<std::array<std::array<const char *, 3>, 2>, 7> table = {{
        {{{"+XI", "+YI", "+ZI"}, {"+IX", "+IY", "+IZ"}}},
        {{{"+XI", "+YZ", "+ZZ"}, {"+XX", "+XY", "+IZ"}}},
        {{{"+XI", "+YZ", "+ZZ"}, {"+IZ", "+XY", "-XX"}}},
        {{{"-IX", "-ZY", "+ZZ"}, {"+ZI", "+YX", "-XX"}}},
        {{{"+ZI", "+YX", "-XX"}, {"-IX", "-ZY", "+ZZ"}}},
        {{{"+ZI", "+YX", "-XX"}, {"-ZZ", "-ZY", "-IX"}}},
        {{{"+ZI", "-YI", "+XI"}, {"-IZ", "-IY", "-IX"}}},
    }};
    return table;
}

std::vector<TableCell> compare_with_descriptor_table(const std::vector<DescriptorFrame> &frames, double tol) {
    const auto &table = descriptor_table_expected();
    if (frames.size() != table.size()) {
        throw StructuralError("compare_with_descriptor_table: expected " + std::to_string(table.size()) + " frames");
    }
    std::vector<TableCell> cells;
    for (std::size_t t = 0; t < table.size(); ++t) {
        for (std::size_t s = 0; s < 2; ++s) {
            for (std::size_t j = 0; j < 3; ++j) {
                const OperatorExpr &e = frames[t].q[s][j];
                auto label = e.signed_label(tol);
                TableCell cell{t, s, static_cast<Component>(j), table[t][s][j], label ? *label : e.to_string(), false};
                cell.match = label && *label == cell.expected;
                cells.push_back(std::move(cell));
            }
        }
    }
    return cells;
}

double frame_algebra_residual(const DescriptorFrame &frame) {
    const Matrix id = Matrix::Identity(4, 4);
    double worst = 0.0;
    for (std::size_t s = 0; s < 2; ++s) {
        std::array<Matrix, 3> m;
        for (std::size_t j = 0; j < 3; ++j) {
            m[j] = to_dense(frame.q[s][j]).matrix();
            worst = std::max(worst, (m[j] - m[j].adjoint()).norm());
            worst = std::max(worst, (m[j] * m[j] - id).norm());
        }
        for (std::size_t i = 0; i < 3; ++i) {
            std::size_t j = (i + 1) % 3;
            std::size_t k = (i + 2) % 3;
            worst = std::max(worst, (m[i] * m[j] - m[j] * m[i] - Complex(0, 2) * m[k]).norm());
        }
    }
    return worst;
}

Bloch witness_state_check(const Matrix &mediator_state) {
    if (mediator_state.rows() != 2 || mediator_state.cols() != 2) {
        throw ContractViolation("witness_state_check: mediator state must be a qubit density matrix");
    }
    require_density_matrix(mediator_state);
    Matrix probe = Matrix::Zero(2, 2);
    probe(0, 0) = 1.0;
    DenseOperator rho({2, 2}, kron(probe, mediator_state));
    DenseOperator u = circuit_unitary(witness_circuit());
    DenseOperator out = u * rho * u.adjoint();
    const std::size_t keep[] = {kProbe};
    return bloch_vector(partial_trace(out, keep).matrix());
}

OperatorExpr hnet_build() {
    constexpr double half_pi = std::numbers::pi / 2;
    return 2.0 * gate_expr(GateSpec::cnot()) + gate_expr(GateSpec::ry(half_pi)) + gate_expr(GateSpec::ry(-half_pi)) +
           gate_expr(GateSpec::cphase()) + gate_expr(GateSpec::swap());
}

}  // namespace qw
