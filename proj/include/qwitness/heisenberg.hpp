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

#ifndef QWITNESS_HEISENBERG_HPP
#define QWITNESS_HEISENBERG_HPP

#include <array>
#include <string>
#include <vector>

#include "qwitness/dense_operator.hpp"
#include "qwitness/pauli.hpp"

namespace qw {

// Two-qubit register, site 0 = Q (probe), site 1 = M (mediator).
inline constexpr std::size_t kProbe = 0;
inline constexpr std::size_t kMediator = 1;

enum class GateKind { kCnotMQ, kCphaseMQ, kRyM, kSwap, kPartialSwap };

/// One gate of the two-qubit register. Controlled gates act when M is |1⟩,
/// i.e. through the projector ½(I − Z_M).
struct GateSpec {
    GateKind kind = GateKind::kSwap;
    double angle = 0.0;

    static GateSpec cnot() { return {GateKind::kCnotMQ, 0.0}; }
    static GateSpec cphase() { return {GateKind::kCphaseMQ, 0.0}; }
    static GateSpec ry(double theta) { return {GateKind::kRyM, theta}; }
    static GateSpec swap() { return {GateKind::kSwap, 0.0}; }
    static GateSpec partial_swap(double eta) { return {GateKind::kPartialSwap, eta}; }

    std::string name() const;
};

using Circuit = std::vector<GateSpec>;

/// CNOT, RY(π/2) on M, CPHASE, SWAP, RY(−π/2) on M, CNOT.
Circuit witness_circuit();

/// The gate written in the t_0 Pauli basis of (Q, M).
OperatorExpr gate_expr(const GateSpec &g);
DenseOperator gate_unitary(const GateSpec &g);
/// U_k ⋯ U_1 for the first `upto` gates (all when upto exceeds the length).
DenseOperator circuit_unitary(const Circuit &c, std::size_t upto = static_cast<std::size_t>(-1));

enum class Component { kX = 0, kY = 1, kZ = 2 };

/// Heisenberg descriptors (q_x, q_y, q_z) of Q and M at one time slice,
/// each written in the t_0 Pauli basis.
struct DescriptorFrame {
    std::size_t time = 0;
    std::array<std::array<OperatorExpr, 3>, 2> q;

    const OperatorExpr &at(std::size_t subsystem, Component c) const {
        return q[subsystem][static_cast<std::size_t>(c)];
    }
};

DescriptorFrame canonical_frame();

/// Gate-at-a-time evolution: each gate is rewritten in the previous frame's
/// descriptors and conjugates them. Returns gates+1 frames (t_0 … t_k).
std::vector<DescriptorFrame> evolve_descriptors(const Circuit &c, const DescriptorFrame &frame0);

/// The same frames from the dense composite product, U_1†⋯U_k† P U_k⋯U_1,
/// decomposed back into Pauli strings.
std::vector<DescriptorFrame> evolve_descriptors_composite(const Circuit &c, const DescriptorFrame &frame0);

/// Signed labels of the published descriptor table, [time][subsystem][component].
const std::array<std::array<std::array<const char *, 3>, 2>, 7> &descriptor_table_expected();

struct TableCell {
    std::size_t time;
    std::size_t subsystem;
    Component component;
    std::string expected;
    std::string computed;  // signed label, or the full expression when not a single term
    bool match;
};

std::vector<TableCell> compare_with_descriptor_table(const std::vector<DescriptorFrame> &frames, double tol = 1e-12);

/// Largest su(2) residual ‖[q_i, q_j] − 2i ε_ijk q_k‖_F over both subsystems,
/// plus Hermiticity and involution residuals, in dense form.
double frame_algebra_residual(const DescriptorFrame &frame);

/// Bloch vector of Q after the witness circuit, with Q starting in |0⟩ and
/// M in `mediator_state`. Throws ContractViolation on an invalid state.
Bloch witness_state_check(const Matrix &mediator_state);

/// 2·CNOT + RY(π/2) + RY(−π/2) + CPHASE + SWAP in the t_0 Pauli basis.
OperatorExpr hnet_build();

}  // namespace qw

#endif
