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

#ifndef QWITNESS_PAULI_HPP
#define QWITNESS_PAULI_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qw {

using Complex = std::complex<double>;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// One label per site. Site 0 is the leftmost tensor factor (the probe Q),
/// site 1 the mediator M, then ancillas in interaction order.
using PauliLabel = std::vector<Pauli>;

/// Coefficients with modulus below this are dropped when canonicalizing.
inline constexpr double kDropTolerance = 1e-13;

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);
std::string label_string(const PauliLabel &label);
PauliLabel parse_label(std::string_view text);

/// A weighted tensor product of single-site Paulis.
class PauliString {
   public:
    PauliString(PauliLabel sites, Complex coeff = 1.0);
    static PauliString parse(std::string_view label, Complex coeff = 1.0);
    static PauliString identity(std::size_t num_qubits);
    static PauliString single(std::size_t num_qubits, std::size_t site, Pauli p);

    std::size_t num_qubits() const { return sites_.size(); }
    const PauliLabel &sites() const { return sites_; }
    Complex coeff() const { return coeff_; }
    bool is_zero() const { return coeff_ == Complex(0.0); }
    std::string label() const { return label_string(sites_); }

   private:
    PauliLabel sites_;
    Complex coeff_;
};

/// Product with the accumulated group phase. Throws StructuralError on a
/// site-count mismatch.
PauliString pauli_mul(const PauliString &a, const PauliString &b);

/// Weighted sum of Pauli strings on a fixed number of qubits, kept in
/// canonical form (no coefficient below kDropTolerance).
class OperatorExpr {
   public:
    explicit OperatorExpr(std::size_t num_qubits = 0);
    OperatorExpr(const PauliString &p);  // NOLINT(google-explicit-constructor)

    static OperatorExpr identity(std::size_t num_qubits);
    static OperatorExpr from_label(std::string_view label, Complex coeff = 1.0);
    /// Sum of labelled terms, e.g. {{"XX", 1}, {"YY", 1}}.
    static OperatorExpr from_terms(const std::vector<std::pair<std::string, Complex>> &terms);

    std::size_t num_qubits() const { return num_qubits_; }
    const std::map<PauliLabel, Complex> &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    Complex coeff(const PauliLabel &label) const;
    Complex coeff(std::string_view label) const { return coeff(parse_label(label)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_hermitian(double tol = kDropTolerance) const;
    double max_abs_coeff() const;
    OperatorExpr adjoint() const;

    /// The single signed term if the expression is one Pauli product with
    /// coefficient ±1 (within tol) and every other coefficient below tol.
    std::optional<std::string> signed_label(double tol = 1e-12) const;
    std::string to_string() const;

    OperatorExpr &operator+=(const OperatorExpr &o);
    OperatorExpr &operator-=(const OperatorExpr &o);
    OperatorExpr &operator*=(Complex s);

    friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr &b) { return a += b; }
    friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr &b) { return a -= b; }
    friend OperatorExpr operator-(OperatorExpr a) { return a *= -1.0; }
    friend OperatorExpr operator*(OperatorExpr a, Complex s) { return a *= s; }
    friend OperatorExpr operator*(Complex s, OperatorExpr a) { return a *= s; }
    friend OperatorExpr operator*(const OperatorExpr &a, const OperatorExpr &b);

   private:
    void add_term(const PauliLabel &label, Complex c);
    void check_sites(const OperatorExpr &o) const;

    std::size_t num_qubits_;
    std::map<PauliLabel, Complex> terms_;
};

/// AB − BA in canonical form.
OperatorExpr commutator(const OperatorExpr &a, const OperatorExpr &b);

/// All 4^n Pauli strings with unit coefficient, in lexicographic I<X<Y<Z order.
std::vector<OperatorExpr> all_pauli_strings(std::size_t num_qubits);

}  // namespace qw

#endif
