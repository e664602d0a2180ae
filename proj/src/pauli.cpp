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

#include "qwitness/pauli.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qwitness/errors.hpp"

namespace qw {

namespace {

// i^k for k in 0..3.
Complex i_power(int k) {
    switch (k & 3) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {-1.0, 0.0};
        default:
            return {0.0, -1.0};
    }
}

// Single-site product a*b = i^phase * result.
struct SiteProduct {
    Pauli result;
    int phase;
};

SiteProduct site_mul(Pauli a, Pauli b) {
    if (a == Pauli::I) return {b, 0};
    if (b == Pauli::I) return {a, 0};
    if (a == b) return {Pauli::I, 0};
    auto ia = static_cast<int>(a);
    auto ib = static_cast<int>(b);
    auto third = static_cast<Pauli>(6 - ia - ib);
    // X*Y = iZ, Y*Z = iX, Z*X = iY; reversed order picks up -i.
    bool cyclic = (ib - ia + 3) % 3 == 1;
    return {third, cyclic ? 1 : 3};
}

}  // namespace

char pauli_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
            return Pauli::I;
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
        default:
            throw StructuralError(std::string("unknown Pauli label '") + c + "'");
    }
}

std::string label_string(const PauliLabel &label) {
    std::string out;
    out.reserve(label.size());
    for (auto p : label) out.push_back(pauli_char(p));
    return out;
}

PauliLabel parse_label(std::string_view text) {
    PauliLabel out;
    out.reserve(text.size());
    for (char c : text) out.push_back(pauli_from_char(c));
    return out;
}

PauliString::PauliString(PauliLabel sites, Complex coeff) : sites_(std::move(sites)), coeff_(coeff) {
    if (!std::isfinite(coeff_.real()) || !std::isfinite(coeff_.imag())) {
        throw ContractViolation("PauliString coefficient must be finite");
    }
}

PauliString PauliString::parse(std::string_view label, Complex coeff) { return {parse_label(label), coeff}; }

PauliString PauliString::identity(std::size_t num_qubits) { return {PauliLabel(num_qubits, Pauli::I), 1.0}; }

PauliString PauliString::single(std::size_t num_qubits, std::size_t site, Pauli p) {
    if (site >= num_qubits) throw StructuralError("site index out of range");
    PauliLabel sites(num_qubits, Pauli::I);
    sites[site] = p;
    return {std::move(sites), 1.0};
}

PauliString pauli_mul(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw StructuralError("pauli_mul: site counts differ (" + std::to_string(a.num_qubits()) + " vs " +
                              std::to_string(b.num_qubits()) + ")");
    }
    PauliLabel out(a.num_qubits());
    int phase = 0;
    for (std::size_t k = 0; k < out.size(); ++k) {
        auto sp = site_mul(a.sites()[k], b.sites()[k]);
        out[k] = sp.result;
        phase += sp.phase;
    }
    return {std::move(out), a.coeff() * b.coeff() * i_power(phase)};
}

OperatorExpr::OperatorExpr(std::size_t num_qubits) : num_qubits_(num_qubits) {}

OperatorExpr::OperatorExpr(const PauliString &p) : num_qubits_(p.num_qubits()) {
    if (std::abs(p.coeff()) >= kDropTolerance) terms_.emplace(p.sites(), p.coeff());
}

OperatorExpr OperatorExpr::identity(std::size_t num_qubits) { return {PauliString::identity(num_qubits)}; }

OperatorExpr OperatorExpr::from_label(std::string_view label, Complex coeff) {
    return {PauliString::parse(label, coeff)};
}

OperatorExpr OperatorExpr::from_terms(const std::vector<std::pair<std::string, Complex>> &terms) {
    if (terms.empty()) throw StructuralError("from_terms: no terms");
    OperatorExpr out(terms.front().first.size());
    for (const auto &[label, c] : terms) out += from_label(label, c);
    return out;
}

void OperatorExpr::check_sites(const OperatorExpr &o) const {
    if (o.num_qubits_ != num_qubits_) {
        throw StructuralError("operator site counts differ (" + std::to_string(num_qubits_) + " vs " +
                              std::to_string(o.num_qubits_) + ")");
    }
}

void OperatorExpr::add_term(const PauliLabel &label, Complex c) { terms_[label] += c; }

Complex OperatorExpr::coeff(const PauliLabel &label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? Complex(0.0) : it->second;
}

bool OperatorExpr::is_hermitian(double tol) const {
    for (const auto &[label, c] : terms_) {
        if (std::abs(c.imag()) > tol) return false;
    }
    return true;
}

double OperatorExpr::max_abs_coeff() const {
    double m = 0.0;
    for (const auto &[label, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

OperatorExpr OperatorExpr::adjoint() const {
    OperatorExpr out(num_qubits_);
    for (const auto &[label, c] : terms_) out.terms_.emplace(label, std::conj(c));
    return out;
}

std::optional<std::string> OperatorExpr::signed_label(double tol) const {
    const PauliLabel *found = nullptr;
    double sign = 0.0;
    for (const auto &[label, c] : terms_) {
        if (std::abs(c) < tol) continue;
        if (found != nullptr) return std::nullopt;
        if (std::abs(c.imag()) >= tol) return std::nullopt;
        if (std::abs(c.real() - 1.0) < tol) {
            sign = 1.0;
        } else if (std::abs(c.real() + 1.0) < tol) {
            sign = -1.0;
        } else {
            return std::nullopt;
        }
        found = &label;
    }
    if (found == nullptr) return std::nullopt;
    return (sign > 0 ? "+" : "-") + label_string(*found);
}

std::string OperatorExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[label, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        char buf[96];
        if (std::abs(c.imag()) < kDropTolerance) {
            std::snprintf(buf, sizeof buf, "%.12g", c.real());
        } else if (std::abs(c.real()) < kDropTolerance) {
            std::snprintf(buf, sizeof buf, "%.12gi", c.imag());
        } else {
            std::snprintf(buf, sizeof buf, "(%.12g%+.12gi)", c.real(), c.imag());
        }
        os << buf << "*" << label_string(label);
    }
    return os.str();
}

OperatorExpr &OperatorExpr::operator+=(const OperatorExpr &o) {
    check_sites(o);
    for (const auto &[label, c] : o.terms_) add_term(label, c);
    std::erase_if(terms_, [](const auto &kv) { return std::abs(kv.second) < kDropTolerance; });
    return *this;
}

OperatorExpr &OperatorExpr::operator-=(const OperatorExpr &o) {
    check_sites(o);
    for (const auto &[label, c] : o.terms_) add_term(label, -c);
    std::erase_if(terms_, [](const auto &kv) { return std::abs(kv.second) < kDropTolerance; });
    return *this;
}

OperatorExpr &OperatorExpr::operator*=(Complex s) {
    for (auto &[label, c] : terms_) c *= s;
    std::erase_if(terms_, [](const auto &kv) { return std::abs(kv.second) < kDropTolerance; });
    return *this;
}

OperatorExpr operator*(const OperatorExpr &a, const OperatorExpr &b) {
    a.check_sites(b);
    OperatorExpr out(a.num_qubits_);
    for (const auto &[la, ca] : a.terms_) {
        for (const auto &[lb, cb] : b.terms_) {
            auto p = pauli_mul(PauliString(la, ca), PauliString(lb, cb));
            out.add_term(p.sites(), p.coeff());
        }
    }
    std::erase_if(out.terms_, [](const auto &kv) { return std::abs(kv.second) < kDropTolerance; });
    return out;
}

OperatorExpr commutator(const OperatorExpr &a, const OperatorExpr &b) { return a * b - b * a; }

std::vector<OperatorExpr> all_pauli_strings(std::size_t num_qubits) {
    std::size_t count = std::size_t{1} << (2 * num_qubits);
    std::vector<OperatorExpr> out;
    out.reserve(count);
    for (std::size_t code = 0; code < count; ++code) {
        PauliLabel label(num_qubits);
        for (std::size_t site = 0; site < num_qubits; ++site) {
            std::size_t shift = 2 * (num_qubits - 1 - site);
            label[site] = static_cast<Pauli>((code >> shift) & 3);
        }
        out.emplace_back(PauliString(std::move(label)));
    }
    return out;
}

}  // namespace qw
