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

#ifndef QWITNESS_HOMOGENIZER_HPP
#define QWITNESS_HOMOGENIZER_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qwitness/conservation.hpp"
#include "qwitness/dense_operator.hpp"
#include "qwitness/report.hpp"

namespace qw {

/// cos η I + i sin η SWAP on two qubits.
DenseOperator partial_swap(double eta);

/// Exact collision: (Tr_M, Tr_Q) of P(η)(ρ⊗ξ)P(η)†.
std::pair<Matrix, Matrix> homogenize_step(const Matrix &rho, const Matrix &xi, double eta);

/// Closed-form recursion
///   ρ' = cos²η ρ + sin²η ξ + i cos η sin η [ξ, ρ]
///   ξ' = cos²η ξ + sin²η ρ − i cos η sin η [ξ, ρ]
std::pair<Matrix, Matrix> homogenize_step_recursion(const Matrix &rho, const Matrix &xi, double eta);

/// Scalar κ in ρ = κ ξ + rest, with rest in span{I, Paulis orthogonal to the
/// traceless part of ξ}. Throws ContractViolation when ξ is maximally mixed.
double xi_coefficient(const Matrix &rho, const Matrix &xi);

struct HomogenizerConfig {
    std::size_t n = 20;
    double eta = 0.4;
    Matrix rho0 = density_from_bloch({0.0, 0.0, 1.0});
    Matrix xi = density_from_bloch({1.0, 0.0, 0.0});

    /// Throws ContractViolation on N = 0 or an invalid state.
    void validate() const;
};

struct HomogenizerTrajectory {
    std::vector<Matrix> rho;       // ρ^(0) … ρ^(N)
    std::vector<Matrix> xi_used;   // ξ'_1 … ξ'_N
    std::vector<double> trace_distance;
    std::vector<double> kappa;
    std::vector<double> kappa_predicted;  // 1 − cos^{2n}η (1 − κ_0)
    std::vector<double> rest_norm;        // ‖ρ^(n) − κ ξ‖_F
    std::vector<double> recursion_residual;  // max entry |exact − recursion| per step
    double min_eigenvalue = 0.0;          // over every ρ^(n) and ξ'_n
};

/// N collisions with a fresh reservoir qubit each time.
HomogenizerTrajectory run(const HomogenizerConfig &config);

/// System states after each collision from the full 2^{N+1} joint state.
/// Only for small N; used to cross-check the fresh-ancilla shortcut.
std::vector<Matrix> run_joint(const HomogenizerConfig &config);

struct ReservoirConfig {
    std::size_t n = 10;
    /// Empty means kπ/32 for k = 1..16.
    std::vector<double> eta_grid;
    std::size_t grid_points = 9;
    double lo = -2.0;
    double hi = 2.0;
    std::size_t random_draws = 1000;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    /// Cap on evaluated parameter points (grid first, then random draws).
    std::optional<std::size_t> max_points;
    double distance_threshold = 0.1;
    double image_threshold = 0.5;
    double admissibility_tol = 1e-10;

    std::vector<double> etas() const;
};

/// Classical-bit reservoir ξ = |0⟩ acting on ρ = |+⟩ through
/// U(η) = cos η I + i sin η H, H from `family` with H² = I.
WitnessReport classical_reservoir_check(const ReservoirConfig &config, const HamiltonianFamily &family);

/// The family used by default: the classical-bit family constrained by the
/// non-additive law and restricted to classical mediator operators.
HamiltonianFamily reservoir_family();

}  // namespace qw

#endif
