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
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qwitness/dense_operator.hpp"
#include "qwitness/errors.hpp"

using namespace qw;

TEST_CASE("pauli matrices follow the fixed convention") {
    for (char c : std::string("IXYZ")) CHECK((pauli_matrix(pauli_from_char(c)) - oracle::sigma(c)).norm() == 0.0);
}

TEST_CASE("site 0 is the most significant factor") {
    Matrix zi = to_dense(OperatorExpr::from_label("ZI")).matrix();
    CHECK(zi(1, 1).real() == doctest::Approx(1.0));
    CHECK(zi(2, 2).real() == doctest::Approx(-1.0));
}

TEST_CASE("non-qubit dims are rejected by to_dense") {
    CHECK_THROWS_AS(to_dense(OperatorExpr::from_label("XI"), {3, 2}), StructuralError);
}

TEST_CASE("partial trace against explicit sums") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::Index da = 2 + trial % 2, db = 2 + trial % 3;
        Matrix a(da * db, da * db);
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = Complex(g(rng), g(rng));
        DenseOperator d({static_cast<std::size_t>(da), static_cast<std::size_t>(db)}, a);
        const std::size_t k0[] = {0}, k1[] = {1};
        CHECK((partial_trace(d, k0).matrix() - oracle::trace_second(a, da, db)).norm() < 1e-12);
        CHECK((partial_trace(d, k1).matrix() - oracle::trace_first(a, da, db)).norm() < 1e-12);
    }
}

TEST_CASE("partial trace rejects bad keep lists") {
    DenseOperator d = DenseOperator::identity({2, 2});
    const std::size_t dup[] = {0, 0};
    const std::size_t out_of_range[] = {2};
    CHECK_THROWS(partial_trace(d, dup));
    CHECK_THROWS(partial_trace(d, out_of_range));
    CHECK_THROWS(partial_trace(d, std::span<const std::size_t>()));
}

TEST_CASE("expm_hermitian matches a Taylor oracle") {
    std::mt19937_64 rng(8);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 30; ++trial) {
        Matrix a(4, 4);
        for (Eigen::Index i = 0; i < 4; ++i)
            for (Eigen::Index j = 0; j < 4; ++j) a(i, j) = Complex(g(rng), g(rng));
        Matrix h = a + a.adjoint();
        double t = 0.3 * trial;
        DenseOperator u = expm_hermitian(DenseOperator::qubits(2, h), t);
        CHECK((u.matrix() - oracle::expm_taylor(h, t)).norm() < 1e-9);
        CHECK(u.unitarity_residual() < 1e-12);
    }
}

TEST_CASE("expm_hermitian rejects non-Hermitian input") {
    Matrix a = Matrix::Zero(2, 2);
    a(0, 1) = 1.0;
    CHECK_THROWS_AS(expm_hermitian(DenseOperator::qubits(1, a), 1.0), ContractViolation);
}

TEST_CASE("state helpers") {
    Matrix plus = density_from_bloch({1.0, 0.0, 0.0});
    auto b = bloch_vector(plus);
    CHECK(b[0] == doctest::Approx(1.0));
    CHECK(trace_distance(plus, density_from_bloch({-1.0, 0.0, 0.0})) == doctest::Approx(1.0));
    CHECK(trace_distance(plus, density_from_bloch({0.0, 0.0, 1.0})) == doctest::Approx(std::sqrt(0.5)));
    Matrix bad = Matrix::Identity(2, 2);
    CHECK_THROWS_AS(require_density_matrix(bad), ContractViolation);
    Matrix negative = density_from_bloch({0.0, 0.0, 1.0});
    negative(0, 0) = 1.2;
    negative(1, 1) = -0.2;
    CHECK_THROWS_AS(require_density_matrix(negative), ContractViolation);
}

TEST_CASE("general-dimension kron matches the oracle") {
    Matrix a = Matrix::Random(2, 2), b = Matrix::Random(3, 3);
    CHECK((kron(a, b) - oracle::kron(a, b)).norm() < 1e-14);
}
