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
#include "qwitness/conservation.hpp"
#include "qwitness/errors.hpp"

using namespace qw;

namespace {

// dim {H real span of `labels` : [H, C] = 0} from an SVD rank count.
std::size_t commutant_dim_oracle(const std::vector<std::string> &labels, const oracle::M &c) {
    Eigen::MatrixXd map(2 * c.size(), static_cast<Eigen::Index>(labels.size()));
    for (std::size_t k = 0; k < labels.size(); ++k) {
        oracle::M p = oracle::pauli(labels[k]);
        oracle::M comm = p * c - c * p;
        for (Eigen::Index e = 0; e < comm.size(); ++e) {
            map(e, static_cast<Eigen::Index>(k)) = comm.data()[e].real();
            map(comm.size() + e, static_cast<Eigen::Index>(k)) = comm.data()[e].imag();
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(map);
    svd.setThreshold(1e-10);
    return labels.size() - static_cast<std::size_t>(svd.rank());
}

std::vector<std::string> two_qubit_labels() {
    std::vector<std::string> out;
    for (char a : std::string("IXYZ"))
        for (char b : std::string("IXYZ")) out.push_back(std::string{a, b});
    return out;
}

}  // namespace

TEST_CASE("additive law: commutant dimension 6 matches the SVD oracle") {
    auto r = commutant_basis(ConservedQuantity::additive(), all_pauli_strings(2));
    oracle::M c = oracle::pauli("ZI") + oracle::pauli("IZ");
    CHECK(r.dimension == 6);
    CHECK(r.dimension == commutant_dim_oracle(two_qubit_labels(), c));
    CHECK(r.ambient_dimension == 16);
    CHECK_FALSE(r.degenerate);
    for (const auto &b : r.basis) CHECK(commutator(b, ConservedQuantity::additive().expr).max_abs_coeff() < 1e-12);
}

TEST_CASE("non-additive law: commutant dimension matches the SVD oracle") {
    auto r = commutant_basis(ConservedQuantity::nonadditive(), all_pauli_strings(2));
    oracle::M c = oracle::pauli("ZI") + oracle::pauli("IZ") + oracle::pauli("ZZ");
    CHECK(r.dimension == commutant_dim_oracle(two_qubit_labels(), c));
}

TEST_CASE("commutant error paths") {
    CHECK_THROWS_AS(commutant_basis(ConservedQuantity::additive(), std::span<const OperatorExpr>()), StructuralError);
    std::vector<OperatorExpr> dependent{OperatorExpr::from_label("XI"), OperatorExpr::from_label("XI", 2.0)};
    CHECK_THROWS_AS(commutant_basis(ConservedQuantity::additive(), dependent), ContractViolation);
    auto id = ConservedQuantity::custom(OperatorExpr::identity(2), "identity");
    auto r = commutant_basis(id, all_pauli_strings(2));
    CHECK(r.degenerate);
    CHECK(r.dimension == 16);
}

TEST_CASE("classical-bit family under the non-additive law") {
    auto f = constrain_family(classical_bit_family(), ConservedQuantity::nonadditive());
    CHECK(f.constraint_rank() == 2);
    CHECK(f.describe_constraints() == std::vector<std::string>{"alpha = -a", "beta = -b"});
    oracle::M c = oracle::pauli("ZI") + oracle::pauli("IZ") + oracle::pauli("ZZ");
    CHECK(f.free_dimension() == commutant_dim_oracle({"XI", "YI", "ZI", "XZ", "YZ", "ZZ"}, c));
    // Hand-built member with α = −a, β = −b commutes.
    std::vector<double> p{0.7, -1.1, 0.3, -0.7, 1.1, 2.0};
    CHECK(f.admits(p));
    std::vector<double> bad{0.7, -1.1, 0.3, 0.7, 1.1, 2.0};
    CHECK_FALSE(f.admits(bad));
}

TEST_CASE("property: sampled members commute with the conserved quantity") {
    std::mt19937_64 rng(99);
    auto c = ConservedQuantity::nonadditive();
    auto f = constrain_family(classical_bit_family(), c);
    for (int k = 0; k < 200; ++k) {
        auto p = f.sample(rng);
        CHECK(f.admits(p));
        CHECK(commutator(f.member(p), c.expr).max_abs_coeff() < 1e-12);
    }
    auto ch = constrain_family(channel_family(), ConservedQuantity::channel3());
    for (int k = 0; k < 200; ++k) {
        auto p = ch.sample(rng);
        CHECK(commutator(ch.member(p), ConservedQuantity::channel3().expr).max_abs_coeff() < 1e-12);
    }
}

TEST_CASE("channel family keeps the coupling between the two mediators free") {
    auto f = constrain_family(channel_family(), ConservedQuantity::channel3());
    auto d = f.describe_constraints();
    CHECK(d == std::vector<std::string>{"alpha = -a", "beta = -b"});
    auto free = f.free_params();
    bool a_prime_free = false;
    for (auto k : free) a_prime_free |= f.params[k] == "a_prime";
    CHECK(a_prime_free);
}

TEST_CASE("gamma-on-Y reading duplicates the beta direction") {
    auto f = classical_bit_family(GammaReading::kOnY);
    CHECK_FALSE(f.notes.empty());
    CHECK(f.basis[1].signed_label() == f.basis[2].signed_label());
}

TEST_CASE("classicality filter removes forced-zero parameters") {
    auto f = family_from_labels({"XI", "XX", "ZZ", "IY"}, {SiteRole::kProbe, SiteRole::kMediator});
    auto g = classicality_filter(f);
    CHECK(g.params == std::vector<std::string>{"XI", "ZZ"});
}

TEST_CASE("rref of a known matrix") {
    Eigen::MatrixXd m(3, 3);
    m << 1, 2, 3, 2, 4, 6, 1, 0, 1;
    auto r = rref(m);
    REQUIRE(r.rows() == 2);
    CHECK(r(0, 0) == doctest::Approx(1.0));
    CHECK(r(0, 2) == doctest::Approx(1.0));
    CHECK(r(1, 1) == doctest::Approx(1.0));
    CHECK(r(1, 2) == doctest::Approx(1.0));
}

TEST_CASE("check_conservation modes give the same number") {
    auto u = DenseOperator::qubits(2, oracle::pauli("XX"));
    double a = check_conservation(u, ConservedQuantity::additive(), ConservationMode::kUnitary);
    double b = check_conservation(u, ConservedQuantity::additive(), ConservationMode::kHamiltonian);
    CHECK(a == b);
    CHECK(a > 1.0);
}
