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
#include "qwitness/conservation.hpp"
#include "qwitness/heisenberg.hpp"

using namespace qw;

namespace {

// Gate matrices written out entry by entry in the |q m⟩ basis (index 2q + m).
std::vector<oracle::M> hand_circuit() {
    using oracle::M;
    M cnot = M::Zero(4, 4);
    cnot(0, 0) = cnot(2, 2) = 1.0;  // m = 0: identity
    cnot(3, 1) = cnot(1, 3) = 1.0;  // m = 1: flip q
    M cphase = M::Identity(4, 4);
    cphase(3, 3) = -1.0;
    auto ry = [](double th) {
        M r(2, 2);
        r << std::cos(th / 2), -std::sin(th / 2), std::sin(th / 2), std::cos(th / 2);
        return oracle::kron(M::Identity(2, 2), r);
    };
    M swap = M::Zero(4, 4);
    swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
    const double h = std::numbers::pi / 2;
    return {cnot, ry(h), cphase, swap, ry(-h), cnot};
}

// Decompose a 4×4 operator and return its signed label if it is ±P.
std::string signed_label_oracle(const oracle::M &q) {
    std::string hit;
    for (char a : std::string("IXYZ")) {
        for (char b : std::string("IXYZ")) {
            std::string l{a, b};
            oracle::C c = (oracle::pauli(l) * q).trace() / 4.0;
            if (std::abs(c) < 1e-12) continue;
            if (!hit.empty() || std::abs(std::abs(c.real()) - 1) > 1e-12 || std::abs(c.imag()) > 1e-12) return "?";
            hit = (c.real() > 0 ? "+" : "-") + l;
        }
    }
    return hit;
}

}  // namespace

TEST_CASE("gate unitaries match hand-written matrices") {
    auto hand = hand_circuit();
    auto circuit = witness_circuit();
    REQUIRE(circuit.size() == hand.size());
    for (std::size_t k = 0; k < hand.size(); ++k) {
        CHECK((gate_unitary(circuit[k]).matrix() - hand[k]).norm() < 1e-14);
        CHECK((to_dense(gate_expr(circuit[k])).matrix() - hand[k]).norm() < 1e-14);
    }
}

TEST_CASE("descriptor table: symbolic route against dense conjugation") {
    auto hand = hand_circuit();
    auto frames = evolve_descriptors(witness_circuit(), canonical_frame());
    REQUIRE(frames.size() == 7);
    const auto &table = descriptor_table_expected();
    oracle::M w = oracle::M::Identity(4, 4);
    const char *q_labels[3] = {"XI", "YI", "ZI"};
    const char *m_labels[3] = {"IX", "IY", "IZ"};
    for (std::size_t t = 0; t < 7; ++t) {
        if (t > 0) w = hand[t - 1] * w;
        for (std::size_t j = 0; j < 3; ++j) {
            std::string q = signed_label_oracle(w.adjoint() * oracle::pauli(q_labels[j]) * w);
            std::string m = signed_label_oracle(w.adjoint() * oracle::pauli(m_labels[j]) * w);
            CHECK(q == table[t][0][j]);
            CHECK(m == table[t][1][j]);
            CHECK(frames[t].q[0][j].signed_label().value_or("?") == q);
            CHECK(frames[t].q[1][j].signed_label().value_or("?") == m);
        }
    }
}

TEST_CASE("compare_with_descriptor_table reports zero mismatches") {
    auto cells = compare_with_descriptor_table(evolve_descriptors(witness_circuit(), canonical_frame()));
    CHECK(cells.size() == 42);
    for (const auto &c : cells) CHECK_MESSAGE(c.match, "t" << c.time << " " << c.expected << " vs " << c.computed);
}

TEST_CASE("symbolic and composite routes agree") {
    auto a = evolve_descriptors(witness_circuit(), canonical_frame());
    auto b = evolve_descriptors_composite(witness_circuit(), canonical_frame());
    for (std::size_t t = 0; t < a.size(); ++t)
        for (std::size_t s = 0; s < 2; ++s)
            for (std::size_t j = 0; j < 3; ++j) CHECK((a[t].q[s][j] - b[t].q[s][j]).max_abs_coeff() < 1e-12);
}

TEST_CASE("property: descriptors keep the Pauli algebra at every slice") {
    for (const auto &f : evolve_descriptors(witness_circuit(), canonical_frame())) CHECK(frame_algebra_residual(f) < 1e-12);
}

TEST_CASE("property: random circuits keep the algebra and both routes agree") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> pick(0, 4);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        Circuit c;
        for (int k = 0; k < 5; ++k) {
            switch (pick(rng)) {
                case 0: c.push_back(GateSpec::cnot()); break;
                case 1: c.push_back(GateSpec::cphase()); break;
                case 2: c.push_back(GateSpec::ry(angle(rng))); break;
                case 3: c.push_back(GateSpec::swap()); break;
                default: c.push_back(GateSpec::partial_swap(angle(rng))); break;
            }
        }
        auto a = evolve_descriptors(c, canonical_frame());
        auto b = evolve_descriptors_composite(c, canonical_frame());
        CHECK(frame_algebra_residual(a.back()) < 1e-10);
        for (std::size_t s = 0; s < 2; ++s)
            for (std::size_t j = 0; j < 3; ++j) CHECK((a.back().q[s][j] - b.back().q[s][j]).max_abs_coeff() < 1e-10);
    }
}

TEST_CASE("witness circuit leaves Q in +X for any mediator state") {
    std::mt19937_64 rng(4);
    std::normal_distribution<double> g;
    for (int k = 0; k < 100; ++k) {
        Vector v(2);
        v << Complex(g(rng), g(rng)), Complex(g(rng), g(rng));
        v.normalize();
        Bloch b = witness_state_check(v * v.adjoint());
        CHECK(std::abs(b[0] - 1) < 1e-10);
        CHECK(std::abs(b[1]) < 1e-10);
        CHECK(std::abs(b[2]) < 1e-10);
    }
    // Mixed mediator too.
    Bloch b = witness_state_check(0.5 * Matrix::Identity(2, 2));
    CHECK(std::abs(b[0] - 1) < 1e-10);
}

TEST_CASE("H_net conserves the non-additive law term by term") {
    OperatorExpr h = hnet_build();
    CHECK(h.is_hermitian());
    CHECK(commutator(h, ConservedQuantity::nonadditive().expr).max_abs_coeff() < 1e-13);
    CHECK(h.coeff("XX").real() == doctest::Approx(0.5));
    // Independent dense check.
    oracle::M c = oracle::pauli("ZI") + oracle::pauli("IZ") + oracle::pauli("ZZ");
    oracle::M hd = to_dense(h).matrix();
    CHECK((hd * c - c * hd).norm() < 1e-12);
}
