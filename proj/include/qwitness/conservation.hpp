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

#ifndef QWITNESS_CONSERVATION_HPP
#define QWITNESS_CONSERVATION_HPP

#include <Eigen/Dense>
#include "json.hpp"
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qwitness/dense_operator.hpp"
#include "qwitness/pauli.hpp"

namespace qw {

enum class ConservationKind { kAdditive, kNonAdditive, kChannel3, kCustom };

struct ConservedQuantity {
    ConservationKind kind = ConservationKind::kCustom;
    OperatorExpr expr;
    std::string name;

    /// Z_Q + Z_M
    static ConservedQuantity additive();
    /// Z_Q + Z_M + Z_Q Z_M
    static ConservedQuantity nonadditive();
    /// Z_Q + Z_M + Z_M' + Z_Q Z_M' + Z_M Z_M' on (Q, M, M').
    static ConservedQuantity channel3();
    static ConservedQuantity custom(OperatorExpr expr, std::string name);
};

enum class SiteRole { kProbe, kMediator, kEnvironment };

/// Real span of Hermitian operators with homogeneous linear constraints on
/// the coefficients. Constraint rows are kept in reduced row-echelon form.
struct HamiltonianFamily {
    std::vector<OperatorExpr> basis;
    std::vector<std::string> params;
    std::vector<SiteRole> roles;
    Eigen::MatrixXd constraints;  // rows: Σ_k row(k)·param_k = 0
    std::optional<ConservedQuantity> conserved;
    std::vector<std::string> notes;

    std::size_t num_params() const { return basis.size(); }
    std::size_t num_qubits() const { return roles.size(); }
    std::size_t constraint_rank() const { return static_cast<std::size_t>(constraints.rows()); }
    std::size_t free_dimension() const { return num_params() - constraint_rank(); }
    bool empty() const { return free_dimension() == 0; }

    /// Columns span the admissible parameter vectors. Each column sets one
    /// free parameter to 1 and solves for the pivots.
    Eigen::MatrixXd null_space() const;
    /// Names of the free (non-pivot) parameters, in column order.
    std::vector<std::size_t> free_params() const;
    bool admits(std::span<const double> p, double tol = 1e-12) const;
    /// Full parameter vector from values of the free parameters.
    std::vector<double> complete(std::span<const double> free_values) const;
    OperatorExpr member(std::span<const double> p) const;
    /// Random admissible parameter vector, free parameters uniform in [lo, hi].
    std::vector<double> sample(std::mt19937_64 &rng, double lo = -2.0, double hi = 2.0) const;
    /// Human-readable constraints such as "alpha = -a".
    std::vector<std::string> describe_constraints() const;
};

struct CommutantResult {
    std::vector<OperatorExpr> basis;
    std::size_t ambient_dimension = 0;
    std::size_t constraint_rank = 0;
    std::size_t dimension = 0;
    /// Set when C is proportional to the identity; the full ambient span is returned.
    bool degenerate = false;
};

/// Real subspace {H ∈ span(ambient) : [H, C] = 0}. Throws StructuralError on
/// an empty ambient list.
CommutantResult commutant_basis(const ConservedQuantity &c, std::span<const OperatorExpr> ambient);

/// Adds the linear constraints that make every member commute with C.
HamiltonianFamily constrain_family(const HamiltonianFamily &family, const ConservedQuantity &c);

/// Keeps members whose non-probe tensor factors are I or Z only; parameters
/// forced to zero are removed.
HamiltonianFamily classicality_filter(const HamiltonianFamily &family);

enum class ConservationMode { kHamiltonian, kUnitary };

/// ‖[target, C]‖_F. Both modes compute the same norm; the mode only labels
/// what the target is.
double check_conservation(const DenseOperator &target, const ConservedQuantity &c,
                          ConservationMode mode = ConservationMode::kHamiltonian);

enum class GammaReading { kOnZ, kOnY };

/// Probe-plus-classical-bit family α X_Q + β Y_Q + γ Z_Q + a X_Q Z_M + b Y_Q Z_M + c Z_Q Z_M.
/// kOnY puts γ on Y_Q instead, which duplicates the β direction.
HamiltonianFamily classical_bit_family(GammaReading reading = GammaReading::kOnZ);
/// Same on (Q, M, M') with Z_M' as the controlling factor plus a' Z_M Z_M'.
HamiltonianFamily channel_family();
/// Unconstrained span of the given Pauli labels, e.g. {"ZI", "IZ"}.
HamiltonianFamily family_from_labels(const std::vector<std::string> &labels, std::vector<SiteRole> roles);

/// Reduced row-echelon form with pivot threshold tol; zero rows removed.
Eigen::MatrixXd rref(const Eigen::MatrixXd &m, double tol = 1e-10);

nlohmann::json to_json(const HamiltonianFamily &family);

}  // namespace qw

#endif
