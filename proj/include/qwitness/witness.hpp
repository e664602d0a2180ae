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

#ifndef QWITNESS_WITNESS_HPP
#define QWITNESS_WITNESS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qwitness/conservation.hpp"
#include "qwitness/dense_operator.hpp"
#include "qwitness/report.hpp"

namespace qw {

using Vec3 = std::array<double, 3>;

enum class Axis { kX = 0, kY = 1, kZ = 2 };

char axis_char(Axis a);

// ---------------------------------------------------------------------------
// Rotations of the probe.
//
// Single convention source: R = cos(θ/2) I − i sin(θ/2) n·σ, and the image of
// a generator is R† σ_j R. For a unit axis this is the rotation of e_j by −θ:
//
//     R† σ_j R = cos θ σ_j − sin θ (n × e_j)·σ + (1 − cos θ) n_j n·σ.
// ---------------------------------------------------------------------------

struct RotationSpec {
    Vec3 axis{0.0, 0.0, 1.0};
    double angle = 0.0;

    /// Throws ContractViolation unless ‖axis‖ = 1 within 1e-10.
    void validate() const;
};

Matrix rotation_unitary(const RotationSpec &spec);

/// Pauli coefficients (x, y, z) of R† σ_j R for a unit axis.
Vec3 rotation_image(const RotationSpec &spec, Axis generator);

/// The same expansion without assuming ‖n‖ = 1:
///   (cos²(θ/2) − sin²(θ/2)|n|²) e_j − sin θ (n × e_j) + 2 sin²(θ/2) n_j n.
/// Its components are the polynomial systems solved below.
Vec3 rotation_image_polynomial(const Vec3 &n, double theta, Axis generator);

struct SignedAxis {
    Axis axis = Axis::kX;
    int sign = 1;
};

/// Image of each probe generator under the wanted map, indexed by generator.
struct TargetMap {
    std::array<SignedAxis, 3> image;

    /// q_z → q_x, q_y → −q_y, q_x → q_z.
    static TargetMap witness_target();
    Vec3 image_of(Axis generator) const;
    /// Determinant of the 3×3 signed-permutation matrix (±1).
    int determinant() const;
    std::string describe() const;
};

struct AxisRoot {
    Vec3 n{};
    double norm = 0.0;
    bool acceptable = false;  // unit norm within 1e-8
    double residual = 0.0;    // max |polynomial residual|
};

struct AxisSystemSolution {
    std::string name;
    Axis generator = Axis::kZ;
    Vec3 rhs{};
    std::vector<AxisRoot> roots;  // every real root
    /// Set when the solution set is not finite (sin θ = 0 cases).
    bool continuum = false;

    std::vector<Vec3> acceptable_roots() const;
};

/// All real roots of rotation_image_polynomial(n, θ, j) = rhs.
AxisSystemSolution solve_generator_system(Axis generator, const Vec3 &rhs, double theta, std::string name = "");

struct AxisSystemReport {
    double theta = 0.0;
    TargetMap target;
    /// One system per generator in z, x, y order; a generator mapped to minus
    /// itself additionally gets a "<axis>_flipped" variant with the opposite
    /// sign on its own component.
    std::vector<AxisSystemSolution> systems;
    std::vector<Vec3> common_roots;          // acceptable roots shared by z, x, y
    std::vector<Vec3> common_roots_flipped;  // same with the flipped variant
    bool has_flipped_variant = false;

    const AxisSystemSolution *find(const std::string &name) const;
    WitnessReport to_report() const;
};

AxisSystemReport solve_axis_system(const TargetMap &target, double theta);

// ---------------------------------------------------------------------------
// Mediator models and searches.
// ---------------------------------------------------------------------------

enum class MediatorKind { kClassicalBit, kQubit, kReservoir, kOscillator };

struct MediatorModel {
    MediatorKind kind = MediatorKind::kClassicalBit;
    /// Allowed single-site operators on the mediator.
    std::vector<Pauli> allowed;
    bool diagonal_states_only = true;

    static MediatorModel classical_bit() { return {MediatorKind::kClassicalBit, {Pauli::I, Pauli::Z}, true}; }
    static MediatorModel qubit() { return {MediatorKind::kQubit, {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}, false}; }
};

/// Joint initial matrix ¼(I + r·q^Q + s_z q_z^M + Σ t_k q_k^Q q_z^M).
struct ProductStateSpec {
    Vec3 r{};
    double s_z = 0.0;
    Vec3 t{};

    Matrix density() const;
    /// Smallest eigenvalue of density(); negative means not a state.
    double min_eigenvalue() const;
};

struct SearchBudget {
    std::size_t grid_points = 9;
    double lo = -2.0;
    double hi = 2.0;
    std::size_t time_points = 64;
    double t_max = 6.283185307179586;
    std::size_t random_draws = 10000;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    /// Cap on evaluated (parameters, time) samples; grid first, then random.
    std::optional<std::size_t> max_evaluations;
    /// The observable-level map counts as unreachable when the smallest
    /// residual found stays above this.
    double gap_threshold = 0.5;
};

/// Grid plus seeded random search over the classical-filtered constrained
/// family for the observable-level map and the state-level coherence task.
/// Always flagged UNPROVEN: the search is evidence, the root systems are the
/// argument.
WitnessReport classical_impossibility_search(const ConservedQuantity &c, const TargetMap &target,
                                             const SearchBudget &budget);

/// max ‖U† Z_M U − Z_M‖_F over random members of the classical-filtered family
/// with U = e^{−iHt}, t uniform in [0, 2π].
double mediator_invariance_residual(const HamiltonianFamily &family, std::size_t draws, std::uint64_t seed);

enum class Interaction { kSwap, kExchange };

/// Qubit-mediator demonstrations of the witnessing task.
WitnessReport quantum_demo(Interaction interaction);

/// (X_Q + iY_Q)(X_M − iY_M) + (X_Q − iY_Q)(X_M + iY_M)
OperatorExpr exchange_hamiltonian();

/// 2|ρ_01|. Throws ContractViolation for an invalid qubit state.
double coherence(const Matrix &rho);

}  // namespace qw

#endif
