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

#ifndef QWITNESS_OSCILLATOR_HPP
#define QWITNESS_OSCILLATOR_HPP

#include <cstddef>
#include <vector>

#include "qwitness/dense_operator.hpp"

namespace qw {

/// Truncated Fock-space ladder operators on levels 0 … d−1.
struct FockOperators {
    std::size_t d = 0;
    Matrix a;
    Matrix adag;
    Matrix number;
};

/// Throws StructuralError for d < 2.
FockOperators fock_ops(std::size_t d);

/// V √max(λ, 0) V† for a Hermitian matrix. Negative eigenvalues, which the
/// truncation produces on high Fock levels, are clamped to zero.
Matrix clamped_sqrt(const Matrix &hermitian);

/// Spin-s generators built from one mode:
///   q_z = s − a†a,  q_x = (K a + a† K)/2,  q_y = (K a − a† K)/(2i),
/// with K = clamped_sqrt(2s − a†a). At s = ½, d = 2 these are σ/2.
struct HPQubit {
    double s = 0.5;
    std::size_t d = 2;
    Matrix qx, qy, qz;
};

/// Throws ContractViolation unless s > 0.
HPQubit hp_qubit(double s, std::size_t d);

/// max ‖[q_i, q_j] − i ε_ijk q_k‖_F over the three pairs.
double su2_residual(const HPQubit &q);

/// Q = mode a (two levels), M = mode b (d_b levels), Q ⊗ M ordering:
///   3/2(I − b†b) + ½(I − a†a) + q_x^a (½ + b†b)
///   + ¼ [√(1−a†a) a ⊗ b† √(1−b†b) + h.c.]
DenseOperator hp_hamiltonian(std::size_t d_b);

/// The qubit H_net with every σ_k replaced by 2 q_k of the matching mode.
DenseOperator hp_mapped_hnet(std::size_t d_b);

/// A − Tr(A)/dim · I
Matrix traceless_part(const Matrix &a);

struct HPComparison {
    Matrix difference;  // traceless(hp_hamiltonian) − traceless(hp_mapped_hnet)
    double residual = 0.0;
    double norm_hamiltonian = 0.0;
    double norm_mapped = 0.0;
};

HPComparison compare_with_hnet(std::size_t d_b);

/// ‖[H, b†b]‖_F for hp_hamiltonian(d_b).
double number_commutator(std::size_t d_b);

/// ‖[H, C]‖_F with C the image of Z_Q + Z_M + Z_Q Z_M (σ_z → 2 q_z).
double conservation_audit(std::size_t d_b);

struct OscillatorRun {
    std::size_t d_b = 2;
    std::vector<double> t;
    /// coherence[m][k]: Q coherence at t[k] with M starting in Fock state m.
    std::vector<std::vector<double>> coherence;
    std::vector<double> max_coherence;
    double max_unitarity_residual = 0.0;
    double max_trace_error = 0.0;
    double min_eigenvalue = 0.0;
};

/// Q starts in |0⟩; every Fock state of M is tried. One eigendecomposition,
/// time points split across workers.
OscillatorRun oscillator_witness_run(std::size_t d_b, const std::vector<double> &t_grid, unsigned workers = 1);

}  // namespace qw

#endif
