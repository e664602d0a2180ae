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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qwitness/dense_operator.hpp"
#include "qwitness/errors.hpp"
#include "qwitness/pauli.hpp"

using namespace qw;

TEST_CASE("single-site products carry the group phase") {
    auto xy = pauli_mul(PauliString::parse("X"), PauliString::parse("Y"));
    CHECK(xy.label() == "Z");
    CHECK(xy.coeff() == Complex(0, 1));
    auto yx = pauli_mul(PauliString::parse("Y"), PauliString::parse("X"));
    CHECK(yx.coeff() == Complex(0, -1));
    auto zz = pauli_mul(PauliString::parse("Z"), PauliString::parse("Z"));
    CHECK(zz.label() == "I");
    CHECK(zz.coeff() == Complex(1, 0));
}

TEST_CASE("pauli_mul agrees with dense products") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = 1 + trial % 3;
        auto a = oracle::random_label(rng, n);
        auto b = oracle::random_label(rng, n);
        auto p = pauli_mul(PauliString::parse(a), PauliString::parse(b));
        oracle::M want = oracle::pauli(a) * oracle::pauli(b);
        oracle::M got = p.coeff() * oracle::pauli(p.label());
        CHECK((want - got).norm() < 1e-14);
    }
}

TEST_CASE("site-count mismatch is a structural error") {
    CHECK_THROWS_AS(pauli_mul(PauliString::parse("XI"), PauliString::parse("X")), StructuralError);
    CHECK_THROWS_AS(OperatorExpr::from_label("XI") + OperatorExpr::from_label("X"), StructuralError);
    CHECK_THROWS_AS(PauliString::parse("XQ"), StructuralError);
}

TEST_CASE("canonical form drops tiny coefficients") {
    auto e = OperatorExpr::from_label("XX") + OperatorExpr::from_label("XX", -1.0 + 1e-15);
    CHECK(e.is_zero());
    auto f = OperatorExpr::from_label("ZI", 2.0) + OperatorExpr::from_label("IZ", 1e-14);
    CHECK(f.size() == 1);
}

TEST_CASE("signed labels") {
    CHECK(OperatorExpr::from_label("XZ", -1.0).signed_label().value() == "-XZ");
    CHECK(OperatorExpr::from_label("YI").signed_label().value() == "+YI");
    CHECK_FALSE(OperatorExpr::from_label("YI", 0.5).signed_label().has_value());
    CHECK_FALSE((OperatorExpr::from_label("XI") + OperatorExpr::from_label("IX")).signed_label().has_value());
}

TEST_CASE("commutator of anticommuting strings") {
    auto c = commutator(OperatorExpr::from_label("XI"), OperatorExpr::from_label("ZI"));
    CHECK(c.coeff("YI") == Complex(0, -2));
    CHECK(commutator(OperatorExpr::from_label("XX"), OperatorExpr::from_label("ZZ")).is_zero());
}

TEST_CASE("property: dense round trip over random expressions") {
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t n = 1 + trial % 3;
        OperatorExpr e(n);
        for (int k = 0; k < 4; ++k) e += OperatorExpr::from_label(oracle::random_label(rng, n), Complex(g(rng), g(rng)));
        oracle::M dense = oracle::M::Zero(1 << n, 1 << n);
        for (const auto &[label, c] : e.terms()) dense += c * oracle::pauli(label_string(label));
        CHECK((to_dense(e).matrix() - dense).norm() < 1e-12);
        auto back = pauli_decompose(to_dense(e));
        CHECK((back - e).max_abs_coeff() < 1e-12);
    }
}

TEST_CASE("property: product of expressions matches dense product") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 200; ++trial) {
        OperatorExpr a(2), b(2);
        for (int k = 0; k < 3; ++k) {
            a += OperatorExpr::from_label(oracle::random_label(rng, 2), g(rng));
            b += OperatorExpr::from_label(oracle::random_label(rng, 2), Complex(0, g(rng)));
        }
        oracle::M want = to_dense(a).matrix() * to_dense(b).matrix();
        CHECK((to_dense(a * b).matrix() - want).norm() < 1e-12);
        CHECK((to_dense(commutator(a, b)).matrix() - (want - to_dense(b).matrix() * to_dense(a).matrix())).norm() < 1e-12);
    }
}

TEST_CASE("hermiticity and adjoint") {
    auto h = OperatorExpr::from_terms({{"XY", 1.5}, {"ZI", -0.5}});
    CHECK(h.is_hermitian());
    auto a = OperatorExpr::from_label("XY", Complex(0, 1));
    CHECK_FALSE(a.is_hermitian());
    CHECK(a.adjoint().coeff("XY") == Complex(0, -1));
}

TEST_CASE("all_pauli_strings enumerates 4^n labels in order") {
    auto s = all_pauli_strings(2);
    REQUIRE(s.size() == 16);
    CHECK(s.front().to_string().find("II") != std::string::npos);
    CHECK(s[1].signed_label().value() == "+IX");
    CHECK(s.back().signed_label().value() == "+ZZ");
}
