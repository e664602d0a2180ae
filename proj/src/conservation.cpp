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

#include "qwitness/conservation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "qwitness/errors.hpp"

namespace qw {

namespace {

// Stacks real and imaginary parts of the Pauli coefficients of each
// operator into the columns of a real matrix.
Eigen::MatrixXd coefficient_matrix(const std::vector<OperatorExpr> &ops) {
    std::set<PauliLabel> labels;
    for (const auto &op : ops) {
        for (const auto &[label, c] : op.terms()) labels.insert(label);
    }
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(2 * labels.size()),
                                              static_cast<Eigen::Index>(ops.size()));
    Eigen::Index row = 0;
    for (const auto &label : labels) {
        for (std::size_t k = 0; k < ops.size(); ++k) {
            Complex c = ops[k].coeff(label);
            m(row, static_cast<Eigen::Index>(k)) = c.real();
            m(row + 1, static_cast<Eigen::Index>(k)) = c.imag();
        }
        row += 2;
    }
    return m;
}

std::vector<Eigen::Index> pivot_columns(const Eigen::MatrixXd &r, double tol = 1e-10) {
    std::vector<Eigen::Index> pivots;
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
        for (Eigen::Index j = 0; j < r.cols(); ++j) {
            if (std::abs(r(i, j)) > tol) {
                pivots.push_back(j);
                break;
            }
        }
    }
    return pivots;
}

Eigen::MatrixXd null_space_of_rref(const Eigen::MatrixXd &r, Eigen::Index cols) {
    auto pivots = pivot_columns(r);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Eigen::Index> free;
    for (Eigen::Index j = 0; j < cols; ++j) {
        if (!is_pivot[static_cast<std::size_t>(j)]) free.push_back(j);
    }
    Eigen::MatrixXd n = Eigen::MatrixXd::Zero(cols, static_cast<Eigen::Index>(free.size()));
    for (std::size_t f = 0; f < free.size(); ++f) {
        auto col = static_cast<Eigen::Index>(f);
        n(free[f], col) = 1.0;
        for (std::size_t row = 0; row < pivots.size(); ++row) {
            n(pivots[row], col) = -r(static_cast<Eigen::Index>(row), free[f]);
        }
    }
    return n;
}

OperatorExpr combine(const std::vector<OperatorExpr> &basis, std::size_t num_qubits, const Eigen::VectorXd &v) {
    OperatorExpr out(num_qubits);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        double w = v(static_cast<Eigen::Index>(k));
        if (w != 0.0) out += basis[k] * Complex(w);
    }
    return out;
}

Eigen::MatrixXd stack(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    Eigen::MatrixXd out(a.rows() + b.rows(), a.cols());
    out << a, b;
    return out;
}

std::string format_term(double w, const std::string &name, bool leading) {
    char buf[64];
    double mag = std::abs(w);
    const char *sign = w < 0 ? "-" : (leading ? "" : "+");
    if (std::abs(mag - 1.0) < 1e-12) {
        std::snprintf(buf, sizeof buf, "%s%s%s", leading ? "" : " ", sign, name.c_str());
    } else {
        std::snprintf(buf, sizeof buf, "%s%s%.6g*%s", leading ? "" : " ", sign, mag, name.c_str());
    }
    return buf;
}

}  // namespace

ConservedQuantity ConservedQuantity::additive() {
    return {ConservationKind::kAdditive, OperatorExpr::from_terms({{"ZI", 1}, {"IZ", 1}}), "Z_Q+Z_M"};
}

ConservedQuantity ConservedQuantity::nonadditive() {
    return {ConservationKind::kNonAdditive, OperatorExpr::from_terms({{"ZI", 1}, {"IZ", 1}, {"ZZ", 1}}),
            "Z_Q+Z_M+Z_QZ_M"};
}

ConservedQuantity ConservedQuantity::channel3() {
    return {ConservationKind::kChannel3,
            OperatorExpr::from_terms({{"ZII", 1}, {"IZI", 1}, {"IIZ", 1}, {"ZIZ", 1}, {"IZZ", 1}}),
            "Z_Q+Z_M+Z_M'+Z_QZ_M'+Z_MZ_M'"};
}

ConservedQuantity ConservedQuantity::custom(OperatorExpr expr, std::string name) {
    return {ConservationKind::kCustom, std::move(expr), std::move(name)};
}

Eigen::MatrixXd rref(const Eigen::MatrixXd &m, double tol) {
    Eigen::MatrixXd r = m;
    Eigen::Index lead_row = 0;
    for (Eigen::Index col = 0; col < r.cols() && lead_row < r.rows(); ++col) {
        Eigen::Index best = lead_row;
        for (Eigen::Index i = lead_row + 1; i < r.rows(); ++i) {
            if (std::abs(r(i, col)) > std::abs(r(best, col))) best = i;
        }
        if (std::abs(r(best, col)) <= tol) {
            r.col(col).tail(r.rows() - lead_row).setZero();
            continue;
        }
        r.row(lead_row).swap(r.row(best));
        r.row(lead_row) /= r(lead_row, col);
        for (Eigen::Index i = 0; i < r.rows(); ++i) {
            if (i != lead_row && r(i, col) != 0.0) r.row(i) -= r(i, col) * r.row(lead_row);
        }
        ++lead_row;
    }
    // Snap round-off so that printed constraints read cleanly.
    r = r.unaryExpr([tol](double v) { return std::abs(v) <= tol ? 0.0 : v; });
    return r.topRows(lead_row);
}

Eigen::MatrixXd HamiltonianFamily::null_space() const {
    return null_space_of_rref(constraints, static_cast<Eigen::Index>(num_params()));
}

std::vector<std::size_t> HamiltonianFamily::free_params() const {
    auto pivots = pivot_columns(constraints);
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < num_params(); ++j) {
        if (std::find(pivots.begin(), pivots.end(), static_cast<Eigen::Index>(j)) == pivots.end()) out.push_back(j);
    }
    return out;
}

bool HamiltonianFamily::admits(std::span<const double> p, double tol) const {
    if (p.size() != num_params()) throw StructuralError("parameter vector has wrong length");
    Eigen::Map<const Eigen::VectorXd> v(p.data(), static_cast<Eigen::Index>(p.size()));
    return constraints.rows() == 0 || (constraints * v).cwiseAbs().maxCoeff() <= tol;
}

std::vector<double> HamiltonianFamily::complete(std::span<const double> free_values) const {
    Eigen::MatrixXd n = null_space();
    if (static_cast<Eigen::Index>(free_values.size()) != n.cols()) {
        throw StructuralError("expected " + std::to_string(n.cols()) + " free parameter values");
    }
    Eigen::Map<const Eigen::VectorXd> f(free_values.data(), n.cols());
    Eigen::VectorXd p = n * f;
    return {p.data(), p.data() + p.size()};
}

OperatorExpr HamiltonianFamily::member(std::span<const double> p) const {
    if (p.size() != num_params()) throw StructuralError("parameter vector has wrong length");
    Eigen::Map<const Eigen::VectorXd> v(p.data(), static_cast<Eigen::Index>(p.size()));
    return combine(basis, num_qubits(), v);
}

std::vector<double> HamiltonianFamily::sample(std::mt19937_64 &rng, double lo, double hi) const {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> f(free_dimension());
    for (auto &x : f) x = dist(rng);
    return complete(f);
}

std::vector<std::string> HamiltonianFamily::describe_constraints() const {
    std::vector<std::string> out;
    auto pivots = pivot_columns(constraints);
    for (std::size_t row = 0; row < pivots.size(); ++row) {
        std::string rhs;
        for (Eigen::Index j = 0; j < constraints.cols(); ++j) {
            if (j == pivots[row]) continue;
            double w = -constraints(static_cast<Eigen::Index>(row), j);
            if (w == 0.0) continue;
            rhs += format_term(w, params[static_cast<std::size_t>(j)], rhs.empty());
        }
        out.push_back(params[static_cast<std::size_t>(pivots[row])] + " = " + (rhs.empty() ? "0" : rhs));
    }
    return out;
}

CommutantResult commutant_basis(const ConservedQuantity &c, std::span<const OperatorExpr> ambient) {
    if (ambient.empty()) throw StructuralError("commutant_basis: empty ambient set");
    std::vector<OperatorExpr> amb(ambient.begin(), ambient.end());
    for (const auto &op : amb) {
        if (op.num_qubits() != c.expr.num_qubits()) throw StructuralError("commutant_basis: site count mismatch");
        if (!op.is_hermitian(1e-12)) throw ContractViolation("commutant_basis: ambient operator is not Hermitian");
    }
    auto amb_rank = rref(coefficient_matrix(amb)).rows();
    if (static_cast<std::size_t>(amb_rank) != amb.size()) {
        throw ContractViolation("commutant_basis: ambient operators are linearly dependent");
    }

    CommutantResult out;
    out.ambient_dimension = amb.size();
    bool proportional_to_identity = std::all_of(c.expr.terms().begin(), c.expr.terms().end(), [](const auto &kv) {
        return std::all_of(kv.first.begin(), kv.first.end(), [](Pauli p) { return p == Pauli::I; });
    });
    if (proportional_to_identity) {
        out.degenerate = true;
        out.basis = amb;
        out.dimension = amb.size();
        return out;
    }

    std::vector<OperatorExpr> images;
    images.reserve(amb.size());
    for (const auto &op : amb) images.push_back(commutator(op, c.expr));
    Eigen::MatrixXd r = rref(coefficient_matrix(images));
    out.constraint_rank = static_cast<std::size_t>(r.rows());
    Eigen::MatrixXd n = null_space_of_rref(r, static_cast<Eigen::Index>(amb.size()));
    for (Eigen::Index k = 0; k < n.cols(); ++k) out.basis.push_back(combine(amb, c.expr.num_qubits(), n.col(k)));
    out.dimension = out.basis.size();
    return out;
}

HamiltonianFamily constrain_family(const HamiltonianFamily &family, const ConservedQuantity &c) {
    if (c.expr.num_qubits() != family.num_qubits()) throw StructuralError("constrain_family: site count mismatch");
    std::vector<OperatorExpr> images;
    images.reserve(family.basis.size());
    for (const auto &op : family.basis) images.push_back(commutator(op, c.expr));
    HamiltonianFamily out = family;
    out.constraints = rref(stack(family.constraints, coefficient_matrix(images)));
    out.conserved = c;
    return out;
}

HamiltonianFamily classicality_filter(const HamiltonianFamily &family) {
    const std::size_t n = family.num_qubits();
    std::set<PauliLabel> quantum_labels;
    for (const auto &op : family.basis) {
        for (const auto &[label, c] : op.terms()) {
            for (std::size_t s = 0; s < n; ++s) {
                if (family.roles[s] != SiteRole::kProbe && (label[s] == Pauli::X || label[s] == Pauli::Y)) {
                    quantum_labels.insert(label);
                }
            }
        }
    }
    // Coefficients of labels with X/Y on a classical site must vanish.
    Eigen::MatrixXd extra = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(2 * quantum_labels.size()),
                                                  static_cast<Eigen::Index>(family.num_params()));
    Eigen::Index row = 0;
    for (const auto &label : quantum_labels) {
        for (std::size_t k = 0; k < family.num_params(); ++k) {
            Complex c = family.basis[k].coeff(label);
            extra(row, static_cast<Eigen::Index>(k)) = c.real();
            extra(row + 1, static_cast<Eigen::Index>(k)) = c.imag();
        }
        row += 2;
    }
    Eigen::MatrixXd combined = rref(stack(family.constraints, extra));
    Eigen::MatrixXd ns = null_space_of_rref(combined, static_cast<Eigen::Index>(family.num_params()));

    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < family.num_params(); ++k) {
        if (ns.cols() > 0 && ns.row(static_cast<Eigen::Index>(k)).cwiseAbs().maxCoeff() > 1e-12) keep.push_back(k);
    }

    HamiltonianFamily out;
    out.roles = family.roles;
    out.conserved = family.conserved;
    out.notes = family.notes;
    Eigen::MatrixXd reduced(combined.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j) {
        out.basis.push_back(family.basis[keep[j]]);
        out.params.push_back(family.params[keep[j]]);
        reduced.col(static_cast<Eigen::Index>(j)) = combined.col(static_cast<Eigen::Index>(keep[j]));
    }
    out.constraints = rref(reduced);
    return out;
}

double check_conservation(const DenseOperator &target, const ConservedQuantity &c, ConservationMode) {
    if (!target.all_qubits() || target.dims().size() != c.expr.num_qubits()) {
        throw StructuralError("check_conservation: target dims do not match a " +
                              std::to_string(c.expr.num_qubits()) + "-qubit conserved quantity");
    }
    return commutator_norm(target.matrix(), to_dense(c.expr).matrix());
}

HamiltonianFamily family_from_labels(const std::vector<std::string> &labels, std::vector<SiteRole> roles) {
    HamiltonianFamily f;
    f.roles = std::move(roles);
    for (const auto &l : labels) {
        if (l.size() != f.roles.size()) throw StructuralError("label " + l + " does not match site roles");
        f.basis.push_back(OperatorExpr::from_label(l));
        f.params.push_back(l);
    }
    f.constraints = Eigen::MatrixXd::Zero(0, static_cast<Eigen::Index>(f.basis.size()));
    return f;
}

HamiltonianFamily classical_bit_family(GammaReading reading) {
    HamiltonianFamily f;
    f.roles = {SiteRole::kProbe, SiteRole::kMediator};
    const char *gamma_label = reading == GammaReading::kOnZ ? "ZI" : "YI";
    f.basis = {OperatorExpr::from_label("XI"), OperatorExpr::from_label("YI"), OperatorExpr::from_label(gamma_label),
               OperatorExpr::from_label("XZ"), OperatorExpr::from_label("YZ"), OperatorExpr::from_label("ZZ")};
    f.params = {"alpha", "beta", "gamma", "a", "b", "c"};
    f.constraints = Eigen::MatrixXd::Zero(0, 6);
    if (reading == GammaReading::kOnY) {
        f.notes.emplace_back("gamma multiplies Y_Q; duplicates the beta direction");
    } else {
        f.notes.emplace_back("gamma multiplies Z_Q");
    }
    return f;
}

HamiltonianFamily channel_family() {
    HamiltonianFamily f;
    f.roles = {SiteRole::kProbe, SiteRole::kMediator, SiteRole::kEnvironment};
    f.basis = {OperatorExpr::from_label("XII"), OperatorExpr::from_label("YII"), OperatorExpr::from_label("ZII"),
               OperatorExpr::from_label("XIZ"), OperatorExpr::from_label("YIZ"), OperatorExpr::from_label("ZIZ"),
               OperatorExpr::from_label("IZZ")};
    f.params = {"alpha", "beta", "gamma", "a", "b", "c", "a_prime"};
    f.constraints = Eigen::MatrixXd::Zero(0, 7);
    return f;
}

nlohmann::json to_json(const HamiltonianFamily &family) {
    nlohmann::json j;
    j["params"] = family.params;
    nlohmann::json basis = nlohmann::json::array();
    for (std::size_t k = 0; k < family.basis.size(); ++k) {
        nlohmann::json terms = nlohmann::json::object();
        for (const auto &[label, c] : family.basis[k].terms()) terms[label_string(label)] = {c.real(), c.imag()};
        basis.push_back({{"param", family.params[k]}, {"terms", terms}});
    }
    j["basis"] = basis;
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < family.constraints.rows(); ++r) {
        std::vector<double> row;
        for (Eigen::Index c = 0; c < family.constraints.cols(); ++c) row.push_back(family.constraints(r, c));
        rows.push_back(row);
    }
    j["constraint_rows"] = rows;
    j["constraints"] = family.describe_constraints();
    j["free_dimension"] = family.free_dimension();
    j["conserved"] = family.conserved ? family.conserved->name : std::string();
    j["notes"] = family.notes;
    return j;
}

}  // namespace qw
