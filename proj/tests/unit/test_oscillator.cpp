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

#include "doctest.h"
#include "oracles.hpp"
#include "qwitness/errors.hpp"
#include "qwitness/heisenberg.hpp"
#include "qwitness/oscillator.hpp"

using namespace qw;

TEST_CASE("fock operators") {
    auto f2 = fock_ops(2);
    oracle::M a2 = oracle::M::Zero(2, 2);
    a2(0, 1) = 1.0;
    CHECK((f2.a - a2).norm() == 0.0);
    auto f3 = fock_ops(3);
    for (int n = 0; n < 3; ++n) CHECK(f3.number(n, n).real() == doctest::Approx(n));
    CHECK_THROWS_AS(fock_ops(1), StructuralError);
}

TEST_CASE("truncation defect sits on the top level only") {
    for (std::size_t d : {2, 3, 5, 8}) {
        auto f = fock_ops(d);
        Matrix defect = f.a * f.adag - f.adag * f.a - Matrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        auto top = static_cast<Eigen::Index>(d - 1);
        CHECK(defect(top, top).real() == doctest::Approx(-static_cast<double>(d)));
        defect(top, top) = 0.0;
        CHECK(defect.norm() < 1e-14);
    }
}

TEST_CASE("spin-1/2 generators at d = 2 are half the Pauli matrices") {
    auto q = hp_qubit(0.5, 2);
    CHECK((q.qx - 0.5 * oracle::sigma('X')).norm() < 1e-15);
    CHECK((q.qy - 0.5 * oracle::sigma('Y')).norm() < 1e-15);
    CHECK((q.qz - 0.5 * oracle::sigma('Z')).norm() < 1e-15);
    CHECK(su2_residual(q) < 1e-12);
    CHECK(su2_residual(hp_qubit(0.5, 4)) > 1e-3);  // truncation artifact, reported elsewhere
}

TEST_CASE("clamped square root") {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 0) = 4.0;
    m(1, 1) = -1.0;
    m(2, 2) = 0.25;
    Matrix r = clamped_sqrt(m);
    CHECK(r(0, 0).real() == doctest::Approx(2.0));
    CHECK(std::abs(r(1, 1)) < 1e-15);
    CHECK(r(2, 2).real() == doctest::Approx(0.5));
}

TEST_CASE("HP Hamiltonian is Hermitian at every truncation") {
    for (std::size_t d : {2, 3, 4, 8}) CHECK(hp_hamiltonian(d).hermiticity_residual() < 1e-12);
}

TEST_CASE("d_b = 2 expansion written out by hand") {
    // Q = a (two levels), M = b; with s = ½, √(1 − a†a) = |0⟩⟨0| and
    // √(1 − a†a)a = |0⟩⟨1| = σ⁺ (raising in the q_z = ½ − a†a convention).
    oracle::M sp = oracle::M::Zero(2, 2);
    sp(0, 1) = 1.0;
    oracle::M n1 = oracle::M::Zero(2, 2);
    n1(1, 1) = 1.0;
    oracle::M id = oracle::sigma('I');
    oracle::M hop = oracle::kron(sp, sp.adjoint());
    oracle::M want = 1.5 * oracle::kron(id, id - n1) + 0.5 * oracle::kron(id - n1, id) +
                     oracle::kron(0.5 * oracle::sigma('X'), 0.5 * id + n1) + 0.25 * (hop + hop.adjoint());
    CHECK((hp_hamiltonian(2).matrix() - want).norm() < 1e-14);
    // At d = 2 the mapped H_net is H_net itself.
    CHECK((hp_mapped_hnet(2).matrix() - to_dense(hnet_build()).matrix()).norm() < 1e-14);
}

TEST_CASE("oscillator witness run") {
    std::vector<double> ts;
    for (int k = 0; k <= 64; ++k) ts.push_back(2 * M_PI * k / 64);
    for (std::size_t d : {2, 3, 8}) {
        auto r = oscillator_witness_run(d, ts);
        CHECK(r.max_unitarity_residual < 1e-10);
        CHECK(r.max_trace_error < 1e-10);
        CHECK(r.min_eigenvalue > -1e-10);
        for (const auto &row : r.coherence) {
            CHECK(row.front() < 1e-12);
            for (double c : row) CHECK(c <= 1.0 + 1e-12);
        }
    }
    auto r2 = oscillator_witness_run(2, ts);
    CHECK(r2.max_coherence[1] > 0.0);
    auto r4 = oscillator_witness_run(3, ts, 3);
    auto r1 = oscillator_witness_run(3, ts, 1);
    CHECK(r4.coherence == r1.coherence);
}

TEST_CASE("reported quantities are finite") {
    for (std::size_t d : {2, 3}) {
        CHECK(std::isfinite(number_commutator(d)));
        CHECK(std::isfinite(conservation_audit(d)));
        CHECK(std::isfinite(compare_with_hnet(d).residual));
    }
}
