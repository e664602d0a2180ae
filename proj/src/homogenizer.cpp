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

#include "qwitness/homogenizer.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>

#include "qwitness/errors.hpp"
#include "qwitness/parallel.hpp"

namespace qw {

namespace {

const std::size_t kKeepFirst[] = {0};
const std::size_t kKeepSecond[] = {1};

Matrix swap_matrix() {
    Matrix s = Matrix::Zero(4, 4);
    s(0, 0) = s(3, 3) = 1.0;
    s(1, 2) = s(2, 1) = 1.0;
    return s;
}

double max_entry_diff(const Matrix &a, const Matrix &b) { return (a - b).cwiseAbs().maxCoeff(); }

// Tr_M[U(ρ⊗ξ)U†] for a two-qubit unitary.
Matrix collide(const Matrix &u, const Matrix &rho, const Matrix &xi) {
    DenseOperator joint({2, 2}, u * kron(rho, xi) * u.adjoint());
    return partial_trace(joint, kKeepFirst).matrix();
}

}  // namespace

DenseOperator partial_swap(double eta) {
    Matrix p = std::cos(eta) * Matrix::Identity(4, 4) + Complex(0.0, std::sin(eta)) * swap_matrix();
    return DenseOperator::qubits(2, p);
}

std::pair<Matrix, Matrix> homogenize_step(const Matrix &rho, const Matrix &xi, double eta) {
    require_density_matrix(rho);
    require_density_matrix(xi);
    const DenseOperator p = partial_swap(eta);
    const DenseOperator joint = p * DenseOperator({2, 2}, kron(rho, xi)) * p.adjoint();
    return {partial_trace(joint, kKeepFirst).matrix(), partial_trace(joint, kKeepSecond).matrix()};
}

std::pair<Matrix, Matrix> homogenize_step_recursion(const Matrix &rho, const Matrix &xi, double eta) {
    require_density_matrix(rho);
    require_density_matrix(xi);
    const double c = std::cos(eta);
    const double s = std::sin(eta);
    const Matrix comm = xi * rho - rho * xi;
    const Complex ics(0.0, c * s);
    Matrix rho_next = c * c * rho + s * s * xi + ics * comm;
    Matrix xi_next = c * c * xi + s * s * rho - ics * comm;
    return {rho_next, xi_next};
}

double xi_coefficient(const Matrix &rho, const Matrix &xi) {
    const Bloch r = bloch_vector(rho);
    const Bloch v = bloch_vector(xi);
    const double vv = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    if (vv < 1e-24) throw ContractViolation("xi_coefficient: reservoir state has no traceless part");
    return (r[0] * v[0] + r[1] * v[1] + r[2] * v[2]) / vv;
}

void HomogenizerConfig::validate() const {
    if (n == 0) throw ContractViolation("homogenizer: N must be at least 1");
    if (!std::isfinite(eta)) throw ContractViolation("homogenizer: eta must be finite");
    if (rho0.rows() != 2 || xi.rows() != 2) throw ContractViolation("homogenizer: states must be single-qubit");
    require_density_matrix(rho0);
    require_density_matrix(xi);
}

HomogenizerTrajectory run(const HomogenizerConfig &config) {
    config.validate();
    HomogenizerTrajectory traj;
    const double kappa0 = xi_coefficient(config.rho0, config.xi);
    const double c2 = std::pow(std::cos(config.eta), 2);
    double min_eig = qw::min_eigenvalue(config.rho0);

    auto record = [&](const Matrix &rho, std::size_t step) {
        const double kappa = xi_coefficient(rho, config.xi);
        traj.rho.push_back(rho);
        traj.trace_distance.push_back(trace_distance(rho, config.xi));
        traj.kappa.push_back(kappa);
        traj.kappa_predicted.push_back(1.0 - std::pow(c2, static_cast<double>(step)) * (1.0 - kappa0));
        traj.rest_norm.push_back((rho - kappa * config.xi).norm());
    };
    record(config.rho0, 0);
    Matrix rho = config.rho0;
    for (std::size_t step = 1; step <= config.n; ++step) {
        auto [rho_next, xi_next] = homogenize_step(rho, config.xi, config.eta);
        auto [rho_rec, xi_rec] = homogenize_step_recursion(rho, config.xi, config.eta);
        traj.recursion_residual.push_back(
            std::max(max_entry_diff(rho_next, rho_rec), max_entry_diff(xi_next, xi_rec)));
        min_eig = std::min({min_eig, qw::min_eigenvalue(rho_next), qw::min_eigenvalue(xi_next)});
        traj.xi_used.push_back(xi_next);
        rho = rho_next;
        record(rho, step);
    }
    traj.min_eigenvalue = min_eig;
    return traj;
}

std::vector<Matrix> run_joint(const HomogenizerConfig &config) {
    config.validate();
    if (config.n > 10) throw ContractViolation("run_joint: N too large for the joint simulation");
    const std::size_t qubits = config.n + 1;
    const std::size_t dim = std::size_t{1} << qubits;
    Matrix state = config.rho0;
    for (std::size_t k = 0; k < config.n; ++k) state = kron(state, config.xi);

    std::vector<std::size_t> dims(qubits, 2);
    std::vector<Matrix> out;
    const double c = std::cos(config.eta);
    const double s = std::sin(config.eta);
    for (std::size_t k = 1; k <= config.n; ++k) {
        // P on (0, k): swap the most significant bit with bit k.
        const std::size_t b0 = qubits - 1;
        const std::size_t bk = qubits - 1 - k;
        Matrix p = c * Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
        for (std::size_t i = 0; i < dim; ++i) {
            std::size_t x0 = (i >> b0) & 1U;
            std::size_t xk = (i >> bk) & 1U;
            std::size_t j = i;
            if (x0 != xk) j = i ^ ((std::size_t{1} << b0) | (std::size_t{1} << bk));
            p(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) += Complex(0.0, s);
        }
        state = p * state * p.adjoint();
        out.push_back(partial_trace(DenseOperator(dims, state), kKeepFirst).matrix());
    }
    return out;
}

std::vector<double> ReservoirConfig::etas() const {
    if (!eta_grid.empty()) return eta_grid;
    std::vector<double> out;
    for (int k = 1; k <= 16; ++k) out.push_back(k * std::numbers::pi / 32);
    return out;
}

HamiltonianFamily reservoir_family() {
    return classicality_filter(constrain_family(classical_bit_family(), ConservedQuantity::nonadditive()));
}

namespace {

struct ReservoirAccumulator {
    ArgBest min_distance;
    ArgBest min_image;
    std::size_t admissible = 0;
    std::size_t skipped = 0;
    std::size_t rejected_draws = 0;
};

// Least-squares parameters of `target` in the family span, or nothing when
// the target lies outside it.
std::optional<std::vector<double>> fit_to_family(const HamiltonianFamily &family, const Matrix &target) {
    const auto n_params = static_cast<Eigen::Index>(family.num_params());
    Eigen::MatrixXcd cols(target.size(), n_params);
    for (Eigen::Index k = 0; k < n_params; ++k) {
        Matrix b = to_dense(family.basis[static_cast<std::size_t>(k)]).matrix();
        cols.col(k) = Eigen::Map<const Eigen::VectorXcd>(b.data(), b.size());
    }
    Eigen::VectorXcd rhs = Eigen::Map<const Eigen::VectorXcd>(target.data(), target.size());
    Eigen::VectorXcd sol = cols.colPivHouseholderQr().solve(rhs);
    std::vector<double> p(static_cast<std::size_t>(n_params));
    for (Eigen::Index k = 0; k < n_params; ++k) p[static_cast<std::size_t>(k)] = sol(k).real();
    if (!family.admits(p, 1e-10)) return std::nullopt;
    if ((to_dense(family.member(p)).matrix() - target).norm() > 1e-10) return std::nullopt;
    return p;
}

}  // namespace

WitnessReport classical_reservoir_check(const ReservoirConfig &config, const HamiltonianFamily &family) {
    if (family.num_qubits() != 2) throw StructuralError("classical_reservoir_check: needs a two-qubit family");
    WitnessReport rep;
    rep.task = "classical-bit reservoir: reach |0><0| from |+><+| by collisions";
    rep.seed = config.seed;
    rep.flags.push_back("UNPROVEN");

    const auto free = family.free_params();
    const Eigen::MatrixXd ns = family.null_space();
    const std::size_t f = free.size();
    const auto etas = config.etas();

    std::size_t grid_total = (config.grid_points == 0 || f == 0) ? 0 : 1;
    for (std::size_t k = 0; k < f && grid_total; ++k) grid_total *= config.grid_points;
    std::size_t total = grid_total + config.random_draws;
    if (config.max_points) total = std::min(total, *config.max_points);

    rep.parameters["n"] = static_cast<double>(config.n);
    rep.parameters["eta_count"] = static_cast<double>(etas.size());
    rep.parameters["grid_points_total"] = static_cast<double>(std::min(total, grid_total));
    rep.parameters["evaluated_points"] = static_cast<double>(total);
    if (total == 0 || etas.empty()) {
        rep.flags.push_back("EMPTY");
        rep.verdict = "UNPROVEN: no samples evaluated";
        return rep;
    }

    auto grid_value = [&](std::size_t idx) {
        if (config.grid_points == 1) return 0.5 * (config.lo + config.hi);
        return config.lo + (config.hi - config.lo) * static_cast<double>(idx) / static_cast<double>(config.grid_points - 1);
    };

    // Random draws are fixed before the parallel section.
    std::vector<std::vector<double>> draws;
    {
        std::mt19937_64 rng(config.seed);
        for (std::size_t r = grid_total; r < total; ++r) draws.push_back(family.sample(rng, config.lo, config.hi));
    }

    auto point_params = [&](std::size_t idx) -> std::vector<double> {
        if (idx < grid_total) {
            std::vector<double> fv(f);
            std::size_t rem = idx;
            for (std::size_t k = f; k-- > 0;) {
                fv[k] = grid_value(rem % config.grid_points);
                rem /= config.grid_points;
            }
            return family.complete(fv);
        }
        return draws[idx - grid_total];
    };

    Matrix ket0 = Matrix::Zero(2, 2);
    ket0(0, 0) = 1.0;
    const Matrix xi = ket0;
    const Matrix plus = density_from_bloch({1.0, 0.0, 0.0});
    const Matrix x_q = to_dense(OperatorExpr::from_label("XI")).matrix();
    const Matrix z_q = to_dense(OperatorExpr::from_label("ZI")).matrix();
    const Matrix id4 = Matrix::Identity(4, 4);

    std::vector<ReservoirAccumulator> partial(std::max(1U, config.workers));
    std::vector<std::vector<double>> used(total);  // parameters actually evaluated
    parallel_chunks(total, config.workers, [&](std::size_t begin, std::size_t end, unsigned w) {
        ReservoirAccumulator &acc = partial[w];
        Eigen::SelfAdjointEigenSolver<Matrix> eig;
        for (std::size_t idx = begin; idx < end; ++idx) {
            std::vector<double> p = point_params(idx);
            Matrix h = to_dense(family.member(p)).matrix();
            if (idx >= grid_total) {
                // Map the draw onto H² = I with the matrix sign function.
                eig.compute(h);
                if (eig.eigenvalues().cwiseAbs().minCoeff() < 1e-9) {
                    ++acc.rejected_draws;
                    continue;
                }
                Eigen::VectorXd sg = eig.eigenvalues().unaryExpr([](double v) { return v > 0 ? 1.0 : -1.0; });
                Matrix hs = eig.eigenvectors() * sg.cast<Complex>().asDiagonal() * eig.eigenvectors().adjoint();
                auto fitted = fit_to_family(family, hs);
                if (!fitted) {
                    ++acc.rejected_draws;
                    continue;
                }
                p = *fitted;
                h = to_dense(family.member(p)).matrix();
            }
            if ((h * h - id4).norm() > config.admissibility_tol) {
                ++acc.skipped;
                continue;
            }
            ++acc.admissible;
            used[idx] = p;
            acc.min_image.offer_min((h * x_q * h - z_q).norm(), idx * etas.size());
            for (std::size_t e = 0; e < etas.size(); ++e) {
                const Matrix u = std::cos(etas[e]) * id4 + Complex(0.0, std::sin(etas[e])) * h;
                Matrix rho = plus;
                for (std::size_t step = 0; step < config.n; ++step) rho = collide(u, rho, xi);
                acc.min_distance.offer_min(trace_distance(rho, xi), idx * etas.size() + e);
            }
        }
    });

    ReservoirAccumulator acc;
    for (const auto &pa : partial) {
        if (pa.min_distance.valid()) acc.min_distance.offer_min(pa.min_distance.value, pa.min_distance.index);
        if (pa.min_image.valid()) acc.min_image.offer_min(pa.min_image.value, pa.min_image.index);
        acc.admissible += pa.admissible;
        acc.skipped += pa.skipped;
        acc.rejected_draws += pa.rejected_draws;
    }
    rep.parameters["admissible_points"] = static_cast<double>(acc.admissible);
    rep.parameters["skipped_points"] = static_cast<double>(acc.skipped);
    rep.parameters["rejected_draws"] = static_cast<double>(acc.rejected_draws);
    if (acc.admissible == 0) {
        rep.flags.push_back("NO_ADMISSIBLE_POINTS");
        rep.verdict = "UNPROVEN: no admissible samples";
        return rep;
    }

    const std::size_t best_point = acc.min_distance.index / etas.size();
    const auto &best = used[best_point];
    for (std::size_t k = 0; k < best.size(); ++k) rep.parameters["argmin." + family.params[k]] = best[k];
    rep.parameters["argmin.eta"] = etas[acc.min_distance.index % etas.size()];

    rep.residuals.push_back(
        {"min_final_trace_distance", acc.min_distance.value, config.distance_threshold, Relation::kAbove});
    rep.residuals.push_back({"min_image_distance", acc.min_image.value, config.image_threshold, Relation::kAbove});
    rep.verdict = rep.all_passed() ? "POSITIVE-GAP" : "NO_GAP";
    return rep;
}

}  // namespace qw
