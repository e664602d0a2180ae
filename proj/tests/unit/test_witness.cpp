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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qwitness/errors.hpp"
#include "qwitness/homogenizer.hpp"
#include "qwitness/witness.hpp"

using namespace qw;

namespace {

const double kHalfPi = std::numbers::pi / 2;

// Pauli coefficients of R†σ_jR with R built by hand.
Vec3 image_oracle(const Vec3 &n, double theta, int j) {
    oracle::M ns = n[0] * oracle::sigma('X') + n[1] * oracle::sigma('Y') + n[2] * oracle::sigma('Z');
    oracle::M r = std::cos(theta / 2) * oracle::sigma('I') - oracle::C(0, std::sin(theta / 2)) * ns;
    oracle::M img = r.adjoint() * oracle::sigma("XYZ"[j]) * r;
    Vec3 out{};
    for (int k = 0; k < 3; ++k) out[static_cast<std::size_t>(k)] = ((oracle::sigma("XYZ"[k]) * img).trace() / 2.0).real();
    return out;
}

Vec3 random_unit(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Vec3 v{g(rng), g(rng), g(rng)};
    double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    for (auto &x : v) x /= n;
    return v;
}

double dist(const Vec3 &a, const Vec3 &b) {
    return std::sqrt(std::pow(a[0] - b[0], 2) + std::pow(a[1] - b[1], 2) + std::pow(a[2] - b[2], 2));
}

// Max residual of the three target-map systems at n (y with the corrected sign).
double target_residual(const Vec3 &n, double theta, bool flipped_y) {
    auto t = TargetMap::witness_target();
    double worst = 0.0;
    for (Axis a : {Axis::kX, Axis::kY, Axis::kZ}) {
        Vec3 rhs = t.image_of(a);
        if (a == Axis::kY && flipped_y) rhs = {0.0, 1.0, 0.0};
        Vec3 img = rotation_image_polynomial(n, theta, a);
        worst = std::max(worst, dist(img, rhs));
    }
    return worst;
}

}  // namespace

TEST_CASE("rotation_image matches dense conjugation") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> ang(-6.0, 6.0);
    for (int k = 0; k < 300; ++k) {
        Vec3 n = random_unit(rng);
        double th = ang(rng);
        for (int j = 0; j < 3; ++j) {
            Vec3 got = rotation_image({n, th}, static_cast<Axis>(j));
            CHECK(dist(got, image_oracle(n, th, j)) < 1e-12);
            CHECK(dist(rotation_image_polynomial(n, th, static_cast<Axis>(j)), got) < 1e-12);
        }
    }
}

TEST_CASE("rotation_image sign examples") {
    auto z = rotation_image({{0.0, 1.0, 0.0}, kHalfPi}, Axis::kZ);
    CHECK(dist(z, {-1.0, 0.0, 0.0}) < 1e-12);
    auto z2 = rotation_image({{0.0, -1.0, 0.0}, kHalfPi}, Axis::kZ);
    CHECK(z2[0] == doctest::Approx(1.0));
    CHECK_THROWS_AS(rotation_image({{1.0, 1.0, 0.0}, 1.0}, Axis::kX), ContractViolation);
}

TEST_CASE("witness target map") {
    auto t = TargetMap::witness_target();
    CHECK(t.determinant() == 1);
    CHECK(dist(t.image_of(Axis::kZ), {1.0, 0.0, 0.0}) == 0.0);
    CHECK(dist(t.image_of(Axis::kY), {0.0, -1.0, 0.0}) == 0.0);
}

TEST_CASE("target root sets at a quarter turn") {
    auto rep = solve_axis_system(TargetMap::witness_target(), kHalfPi);
    auto z = rep.find("z")->acceptable_roots();
    auto x = rep.find("x")->acceptable_roots();
    REQUIRE(z.size() == 1);
    REQUIRE(x.size() == 1);
    CHECK(dist(z[0], {0.0, -1.0, 0.0}) < 1e-10);
    CHECK(dist(x[0], {0.0, 1.0, 0.0}) < 1e-10);
    CHECK(rep.find("y")->acceptable_roots().empty());
    REQUIRE(rep.has_flipped_variant);
    auto yp = rep.find("y_flipped")->acceptable_roots();
    CHECK(yp.size() == 2);
    CHECK(rep.common_roots.empty());
    CHECK(rep.common_roots_flipped.empty());
    for (const auto &s : rep.systems)
        for (const auto &r : s.roots) CHECK(r.residual < 1e-10);
    CHECK(rep.to_report().verdict == "NO_CONSISTENT_AXIS");
}

TEST_CASE("brute-force sphere scan agrees with the root sets") {
    // Fibonacci lattice on the unit sphere.
    const int n = 200000;
    double best_z = 1e9, best_y = 1e9, best_all = 1e9, best_all_flipped = 1e9;
    Vec3 arg_z{};
    for (int k = 0; k < n; ++k) {
        double y = 1 - 2 * (k + 0.5) / n;
        double r = std::sqrt(1 - y * y);
        double phi = k * std::numbers::pi * (3 - std::sqrt(5.0));
        Vec3 v{r * std::cos(phi), y, r * std::sin(phi)};
        double rz = dist(rotation_image_polynomial(v, kHalfPi, Axis::kZ), {1.0, 0.0, 0.0});
        if (rz < best_z) {
            best_z = rz;
            arg_z = v;
        }
        best_y = std::min(best_y, dist(rotation_image_polynomial(v, kHalfPi, Axis::kY), {0.0, -1.0, 0.0}));
        best_all = std::min(best_all, target_residual(v, kHalfPi, false));
        best_all_flipped = std::min(best_all_flipped, target_residual(v, kHalfPi, true));
    }
    // (0, −1, 0) is a double root, so the lattice minimum is only loosely located.
    CHECK(best_z < 1e-3);
    CHECK(dist(arg_z, {0.0, -1.0, 0.0}) < 0.05);
    CHECK(best_y > 0.5);
    CHECK(best_all > 0.5);
    CHECK(best_all_flipped > 0.5);
}

TEST_CASE("property: the solver recovers the generating axis") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ang(0.2, 2.9);
    for (int k = 0; k < 500; ++k) {
        Vec3 n = random_unit(rng);
        double th = ang(rng) * (k % 2 ? 1 : -1);
        Axis a = static_cast<Axis>(k % 3);
        auto sol = solve_generator_system(a, rotation_image({n, th}, a), th);
        bool found = false;
        for (const auto &r : sol.acceptable_roots()) found |= dist(r, n) < 1e-7;
        CHECK_MESSAGE(found, "theta=" << th << " n=(" << n[0] << "," << n[1] << "," << n[2] << ")");
        for (const auto &r : sol.roots) CHECK(r.residual < 1e-9);
    }
}

TEST_CASE("degenerate angles are flagged") {
    auto id = solve_generator_system(Axis::kZ, {0.0, 0.0, 1.0}, 0.0);
    CHECK(id.continuum);
    auto none = solve_generator_system(Axis::kZ, {1.0, 0.0, 0.0}, 0.0);
    CHECK_FALSE(none.continuum);
    CHECK(none.roots.empty());
    auto half = solve_generator_system(Axis::kZ, {0.0, 0.0, -1.0}, std::numbers::pi);
    CHECK(half.continuum);
}

TEST_CASE("classical mediator: Z_M is frozen") {
    CHECK(mediator_invariance_residual(reservoir_family(), 100, 5) < 1e-10);
    auto qubit = family_from_labels({"XX", "YY", "ZI"}, {SiteRole::kProbe, SiteRole::kMediator});
    CHECK(mediator_invariance_residual(qubit, 20, 5) > 0.1);
}

TEST_CASE("classical search: budget and determinism") {
    SearchBudget b;
    b.grid_points = 3;
    b.time_points = 8;
    b.random_draws = 64;
    b.seed = 12;
    auto one = classical_impossibility_search(ConservedQuantity::nonadditive(), TargetMap::witness_target(), b);
    b.workers = 3;
    auto three = classical_impossibility_search(ConservedQuantity::nonadditive(), TargetMap::witness_target(), b);
    CHECK(one.to_json() == three.to_json());
    CHECK(one.has_flag("UNPROVEN"));
    // Sector 0 only sees a Z_Q rotation; the target map needs at least 2√2.
    CHECK(one.find("min_residual_sector0")->value >= 2 * std::sqrt(2.0) - 1e-9);
    CHECK(one.find("max_commutator_H_ZM")->value < 1e-12);

    b.max_evaluations = 0;
    auto empty = classical_impossibility_search(ConservedQuantity::nonadditive(), TargetMap::witness_target(), b);
    CHECK(empty.has_flag("UNPROVEN"));
    CHECK(empty.verdict.rfind("UNPROVEN", 0) == 0);
    CHECK(empty.residuals.empty());
}

TEST_CASE("quantum demos") {
    auto swap = quantum_demo(Interaction::kSwap);
    CHECK(swap.verdict == "WITNESSED");
    CHECK(swap.find("bloch_error_plus")->value < 1e-10);
    CHECK(swap.find("bloch_error_minus")->value < 1e-10);
    auto ex = quantum_demo(Interaction::kExchange);
    CHECK(ex.find("commutator_additive")->value < 1e-12);
    CHECK(ex.series.at("coherence").front() < 1e-12);
    // Oracle: the exchange Hamiltonian is 2(XX + YY).
    oracle::M h = 2.0 * (oracle::pauli("XX") + oracle::pauli("YY"));
    CHECK((to_dense(exchange_hamiltonian()).matrix() - h).norm() < 1e-12);
}

TEST_CASE("product state spec and coherence") {
    ProductStateSpec s{{0.0, 0.0, 1.0}, 1.0, {0.0, 0.0, 1.0}};
    CHECK(std::abs(s.min_eigenvalue()) < 1e-12);
    oracle::M want = oracle::M::Zero(4, 4);
    want(0, 0) = 1.0;
    CHECK((s.density() - want).norm() < 1e-12);
    ProductStateSpec bad{{0.0, 0.0, 2.0}, 0.0, {}};
    CHECK(bad.min_eigenvalue() < 0);
    CHECK(coherence(density_from_bloch({0.6, 0.0, 0.8})) == doctest::Approx(0.6));
    CHECK_THROWS_AS(coherence(Matrix::Identity(2, 2)), ContractViolation);
}
