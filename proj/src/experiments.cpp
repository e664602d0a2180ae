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

#include "qwitness/experiments.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "qwitness/conservation.hpp"
#include "qwitness/errors.hpp"
#include "qwitness/heisenberg.hpp"
#include "qwitness/homogenizer.hpp"
#include "qwitness/oscillator.hpp"
#include "qwitness/report.hpp"
#include "qwitness/witness.hpp"

namespace qw {

using nlohmann::json;

// --- config ---------------------------------------------------------------

namespace {

double get_double(const json &j, const std::string &path) {
    if (!j.is_number()) throw ConfigError(path, "expected a number");
    double v = j.get<double>();
    if (!std::isfinite(v)) throw ConfigError(path, "expected a finite number");
    return v;
}

std::uint64_t get_u64(const json &j, const std::string &path) {
    if (!j.is_number_unsigned()) throw ConfigError(path, "expected a non-negative integer");
    return j.get<std::uint64_t>();
}

std::size_t get_size(const json &j, const std::string &path) { return static_cast<std::size_t>(get_u64(j, path)); }

using FieldSetter = std::function<void(const json &, const std::string &)>;

void parse_object(const json &j, const std::string &path, const std::map<std::string, FieldSetter> &fields) {
    if (!j.is_object()) throw ConfigError(path, "expected an object");
    for (const auto &[key, value] : j.items()) {
        auto it = fields.find(key);
        if (it == fields.end()) throw ConfigError(path + "." + key, "unknown key");
        it->second(value, path + "." + key);
    }
}

}  // namespace

const std::vector<std::string> &experiment_names() {
    static const std::vector<std::string> names{"table1", "conservation", "witness", "homogenize", "oscillator", "all"};
    return names;
}

RunConfig parse_config(const json &j, RunConfig base) {
    RunConfig c = std::move(base);
    if (!j.is_object()) throw ConfigError("$", "expected an object");
    if (!j.contains("schema_version")) throw ConfigError("$.schema_version", "missing");
    auto &w = c.witness;
    auto &h = c.homogenize;
    auto &r = c.reservoir;
    auto &o = c.oscillator;
    auto &t = c.tol;
    parse_object(
        j, "$",
        {{"schema_version",
          [](const json &v, const std::string &p) {
              if (get_u64(v, p) != kSchemaVersion) {
                  throw ConfigError(p, "unsupported version (expected " + std::to_string(kSchemaVersion) + ")");
              }
          }},
         {"experiment",
          [&](const json &v, const std::string &p) {
              if (!v.is_string()) throw ConfigError(p, "expected a string");
              auto name = v.get<std::string>();
              const auto &names = experiment_names();
              if (std::find(names.begin(), names.end(), name) == names.end()) throw ConfigError(p, "unknown experiment '" + name + "'");
              c.experiment = name;
          }},
         {"seed", [&](const json &v, const std::string &p) { c.seed = get_u64(v, p); }},
         {"out_dir",
          [&](const json &v, const std::string &p) {
              if (!v.is_string()) throw ConfigError(p, "expected a string");
              c.out_dir = v.get<std::string>();
          }},
         {"workers",
          [&](const json &v, const std::string &p) {
              auto n = get_u64(v, p);
              if (n == 0 || n > 256) throw ConfigError(p, "must be in [1, 256]");
              c.workers = static_cast<unsigned>(n);
          }},
         {"tolerances",
          [&](const json &v, const std::string &p) {
              parse_object(v, p,
                           {{"pauli", [&](const json &x, const std::string &q) { t.pauli = get_double(x, q); }},
                            {"symbolic", [&](const json &x, const std::string &q) { t.symbolic = get_double(x, q); }},
                            {"state", [&](const json &x, const std::string &q) { t.state = get_double(x, q); }},
                            {"unitary", [&](const json &x, const std::string &q) { t.unitary = get_double(x, q); }}});
          }},
         {"witness",
          [&](const json &v, const std::string &p) {
              parse_object(
                  v, p,
                  {{"theta", [&](const json &x, const std::string &q) { w.theta = get_double(x, q); }},
                   {"grid_points", [&](const json &x, const std::string &q) { w.grid_points = get_size(x, q); }},
                   {"time_points", [&](const json &x, const std::string &q) { w.time_points = get_size(x, q); }},
                   {"random_draws", [&](const json &x, const std::string &q) { w.random_draws = get_size(x, q); }},
                   {"budget", [&](const json &x, const std::string &q) { w.budget = get_size(x, q); }},
                   {"mediator_draws", [&](const json &x, const std::string &q) { w.mediator_draws = get_size(x, q); }},
                   {"state_draws", [&](const json &x, const std::string &q) { w.state_draws = get_size(x, q); }},
                   {"gap_threshold", [&](const json &x, const std::string &q) { w.gap_threshold = get_double(x, q); }}});
          }},
         {"homogenize",
          [&](const json &v, const std::string &p) {
              parse_object(v, p,
                           {{"eta", [&](const json &x, const std::string &q) { h.eta = get_double(x, q); }},
                            {"n", [&](const json &x, const std::string &q) {
                                 h.n = get_size(x, q);
                                 if (h.n == 0) throw ConfigError(q, "must be at least 1");
                             }}});
          }},
         {"reservoir",
          [&](const json &v, const std::string &p) {
              parse_object(
                  v, p,
                  {{"n", [&](const json &x, const std::string &q) { r.n = get_size(x, q); }},
                   {"grid_points", [&](const json &x, const std::string &q) { r.grid_points = get_size(x, q); }},
                   {"random_draws", [&](const json &x, const std::string &q) { r.random_draws = get_size(x, q); }},
                   {"budget", [&](const json &x, const std::string &q) { r.budget = get_size(x, q); }},
                   {"distance_threshold",
                    [&](const json &x, const std::string &q) { r.distance_threshold = get_double(x, q); }}});
          }},
         {"oscillator", [&](const json &v, const std::string &p) {
              parse_object(v, p,
                           {{"truncations",
                             [&](const json &x, const std::string &q) {
                                 if (!x.is_array() || x.empty()) throw ConfigError(q, "expected a non-empty array");
                                 o.truncations.clear();
                                 for (std::size_t k = 0; k < x.size(); ++k) {
                                     auto d = get_size(x[k], q + "[" + std::to_string(k) + "]");
                                     if (d < 2 || d > 64) throw ConfigError(q + "[" + std::to_string(k) + "]", "must be in [2, 64]");
                                     o.truncations.push_back(d);
                                 }
                             }},
                            {"t_max", [&](const json &x, const std::string &q) { o.t_max = get_double(x, q); }},
                            {"t_points", [&](const json &x, const std::string &q) {
                                 o.t_points = get_size(x, q);
                                 if (o.t_points < 2) throw ConfigError(q, "must be at least 2");
                             }}});
          }}});
    return c;
}

RunConfig load_config(const std::filesystem::path &path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path.string(), "cannot open config file");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ConfigError(path.string(), e.what());
    }
    return parse_config(j, std::move(base));
}

// --- results --------------------------------------------------------------

bool ExperimentResult::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

namespace {

json number(double v) {
    if (std::isfinite(v)) return v;
    return format_double(v);
}

json config_json(const RunConfig &c) {
    auto opt = [](const std::optional<std::size_t> &v) { return v ? json(*v) : json(nullptr); };
    return {{"seed", c.seed},
            {"tolerances",
             {{"pauli", c.tol.pauli}, {"symbolic", c.tol.symbolic}, {"state", c.tol.state}, {"unitary", c.tol.unitary}}},
            {"witness",
             {{"theta", c.witness.theta},
              {"grid_points", c.witness.grid_points},
              {"time_points", c.witness.time_points},
              {"random_draws", c.witness.random_draws},
              {"budget", opt(c.witness.budget)},
              {"mediator_draws", c.witness.mediator_draws},
              {"state_draws", c.witness.state_draws},
              {"gap_threshold", c.witness.gap_threshold}}},
            {"homogenize", {{"eta", c.homogenize.eta}, {"n", c.homogenize.n}}},
            {"reservoir",
             {{"n", c.reservoir.n},
              {"grid_points", c.reservoir.grid_points},
              {"random_draws", c.reservoir.random_draws},
              {"budget", opt(c.reservoir.budget)},
              {"distance_threshold", c.reservoir.distance_threshold}}},
            {"oscillator",
             {{"truncations", c.oscillator.truncations},
              {"t_max", c.oscillator.t_max},
              {"t_points", c.oscillator.t_points}}}};
}

}  // namespace

json ExperimentResult::summary(const RunConfig &config) const {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["experiment"] = experiment;
    j["config"] = config_json(config);
    j["checks"] = json::array();
    for (const auto &c : checks) {
        j["checks"].push_back({{"name", c.name},
                               {"value", number(c.value)},
                               {"threshold", number(c.threshold)},
                               {"relation", c.relation},
                               {"pass", c.pass},
                               {"anchor", c.anchor}});
    }
    j["artifacts"] = artifacts;
    j["all_passed"] = all_passed();
    return j;
}

// --- experiments ----------------------------------------------------------

namespace {

class Runner {
   public:
    explicit Runner(const RunConfig &config) : cfg_(config) { result_.experiment = config.experiment; }

    ExperimentResult finish() { return std::move(result_); }

    void below(const std::string &name, double value, double threshold, const std::string &anchor) {
        result_.checks.push_back({name, value, threshold, "<", value < threshold, anchor});
    }
    void above(const std::string &name, double value, double threshold, const std::string &anchor) {
        result_.checks.push_back({name, value, threshold, ">", value > threshold, anchor});
    }
    void equal(const std::string &name, double value, double expected, const std::string &anchor) {
        result_.checks.push_back({name, value, expected, "==", value == expected, anchor});
    }
    void report(const std::string &name, double value, const std::string &anchor) {
        result_.checks.push_back({name, value, 0.0, "report", true, anchor});
    }
    void from_report(const std::string &prefix, const WitnessReport &rep, const std::string &anchor) {
        for (const auto *list : {&rep.residuals, &rep.coherence}) {
            for (const auto &m : *list) {
                std::string rel = m.relation == Relation::kBelow ? "<" : m.relation == Relation::kAbove ? ">" : "report";
                result_.checks.push_back({prefix + m.name, m.value, m.tolerance, rel, m.passed(), anchor});
            }
        }
    }

    std::ofstream open(const std::string &name) {
        std::ofstream out(cfg_.out_dir / name, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + (cfg_.out_dir / name).string());
        result_.artifacts.push_back(name);
        return out;
    }
    void write_json(const std::string &name, const json &j) { open(name) << j.dump(2) << '\n'; }

    void table1();
    void conservation();
    void witness();
    void homogenize();
    void oscillator();

   private:
    const RunConfig &cfg_;
    ExperimentResult result_;
};

const char *component_name(Component c) { return c == Component::kX ? "x" : c == Component::kY ? "y" : "z"; }

void Runner::table1() {
    const Circuit circuit = witness_circuit();
    const auto frames = evolve_descriptors(circuit, canonical_frame());
    const auto composite = evolve_descriptors_composite(circuit, canonical_frame());
    const auto cells = compare_with_descriptor_table(frames, cfg_.tol.pauli);

    auto csv_file = open("table1.csv");
    CsvWriter csv(csv_file);
    csv.header({"time", "subsystem", "component", "expected", "computed", "match"});
    json diff = json::array();
    std::size_t compared = 0, mismatches = 0;
    for (const auto &c : cells) {
        if (c.time == 0) continue;  // the canonical frame is not a table row
        ++compared;
        if (!c.match) {
            ++mismatches;
            diff.push_back({{"time", c.time}, {"subsystem", c.subsystem == 0 ? "Q" : "M"},
                            {"component", component_name(c.component)}, {"expected", c.expected}, {"computed", c.computed}});
        }
        csv.row({std::to_string(c.time), c.subsystem == 0 ? "Q" : "M", component_name(c.component), c.expected,
                 c.computed, c.match ? "1" : "0"});
    }

    double route_gap = 0.0, algebra = 0.0;
    for (std::size_t t = 0; t < frames.size(); ++t) {
        algebra = std::max(algebra, frame_algebra_residual(frames[t]));
        for (std::size_t s = 0; s < 2; ++s) {
            for (std::size_t k = 0; k < 3; ++k) {
                route_gap = std::max(route_gap, (frames[t].q[s][k] - composite[t].q[s][k]).max_abs_coeff());
            }
        }
    }
    write_json("table1.json", {{"cells", compared}, {"mismatches", diff}, {"symbolic_vs_composite", route_gap}});

    const std::string anchor = "descriptor table of the six-gate witness circuit";
    equal("table1_cells", static_cast<double>(compared), 36, anchor);
    equal("table1_mismatches", static_cast<double>(mismatches), 0, anchor);
    below("table1_symbolic_vs_composite", route_gap, cfg_.tol.pauli, "gate-at-a-time vs composite conjugation");
    below("table1_frame_algebra", algebra, cfg_.tol.pauli, "descriptors keep the Pauli algebra");
}

// Largest distance of a basis vector from the span of `reference`, both in
// Pauli-coefficient space.
double span_residual(const std::vector<OperatorExpr> &basis, const std::vector<OperatorExpr> &reference) {
    const auto strings = all_pauli_strings(basis.empty() ? 2 : basis.front().num_qubits());
    auto coeffs = [&](const OperatorExpr &e) {
        Eigen::VectorXcd v(static_cast<Eigen::Index>(strings.size()));
        for (std::size_t k = 0; k < strings.size(); ++k) {
            v(static_cast<Eigen::Index>(k)) = e.coeff(strings[k].terms().begin()->first);
        }
        return v;
    };
    Eigen::MatrixXcd ref(static_cast<Eigen::Index>(strings.size()), static_cast<Eigen::Index>(reference.size()));
    for (std::size_t k = 0; k < reference.size(); ++k) ref.col(static_cast<Eigen::Index>(k)) = coeffs(reference[k]);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ref);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(ref.rows(), ref.cols());
    double worst = 0.0;
    for (const auto &b : basis) {
        Eigen::VectorXcd v = coeffs(b);
        Eigen::VectorXcd rest = v - q * (q.adjoint() * v);
        worst = std::max(worst, rest.norm() / std::max(v.norm(), 1e-300));
    }
    return worst;
}

std::vector<std::string> labels_of(const std::vector<OperatorExpr> &ops) {
    std::vector<std::string> out;
    for (const auto &op : ops) out.push_back(op.to_string());
    return out;
}

void Runner::conservation() {
    const auto add = ConservedQuantity::additive();
    const auto nonadd = ConservedQuantity::nonadditive();
    const auto ambient = all_pauli_strings(2);

    const auto comm_add = commutant_basis(add, ambient);
    const auto comm_nonadd = commutant_basis(nonadd, ambient);
    const std::vector<OperatorExpr> expected_span{
        OperatorExpr::identity(2), OperatorExpr::from_label("ZI"), OperatorExpr::from_label("IZ"),
        OperatorExpr::from_label("ZZ"), OperatorExpr::from_terms({{"XX", 1}, {"YY", 1}}),
        OperatorExpr::from_terms({{"XY", 1}, {"YX", -1}})};
    const double proj = std::max(span_residual(comm_add.basis, expected_span), span_residual(expected_span, comm_add.basis));

    const auto classical = constrain_family(classical_bit_family(), nonadd);
    const auto channel = constrain_family(channel_family(), ConservedQuantity::channel3());
    const std::vector<std::string> want{"alpha = -a", "beta = -b"};
    const auto got = classical.describe_constraints();
    double constraint_mismatch = got == want ? 0.0 : 1.0;

    const OperatorExpr hnet = hnet_build();
    const double hnet_symbolic = commutator(hnet, nonadd.expr).max_abs_coeff();
    const DenseOperator c_dense = to_dense(nonadd.expr);
    const double composite = commutator_norm(circuit_unitary(witness_circuit()).matrix(), c_dense.matrix());

    double pswap = 0.0;
    for (int k = 0; k < 16; ++k) {
        pswap = std::max(pswap, check_conservation(partial_swap(k * std::numbers::pi / 15), nonadd, ConservationMode::kUnitary));
    }

    json gates = json::object();
    for (const auto &g : witness_circuit()) {
        gates[g.name()] = check_conservation(gate_unitary(g), nonadd, ConservationMode::kUnitary);
    }
    write_json("conservation.json",
               {{"commutant_additive", {{"dimension", comm_add.dimension}, {"basis", labels_of(comm_add.basis)}}},
                {"commutant_nonadditive", {{"dimension", comm_nonadd.dimension}, {"basis", labels_of(comm_nonadd.basis)}}},
                {"classical_bit_family", to_json(classical)},
                {"channel_family", to_json(channel)},
                {"hnet", hnet.to_string()},
                {"hnet_commutator_max_coeff", hnet_symbolic},
                {"circuit_unitary_commutator", composite},
                {"gate_commutators", gates}});

    equal("commutant_additive_dimension", static_cast<double>(comm_add.dimension), 6, "exchange-type commutant of Z_Q + Z_M");
    below("commutant_additive_span", proj, cfg_.tol.pauli, "span{I, Z_Q, Z_M, Z_QZ_M, XX+YY, XY-YX}");
    report("commutant_nonadditive_dimension", static_cast<double>(comm_nonadd.dimension), "commutant of Z_Q + Z_M + Z_QZ_M");
    equal("classical_constraint_rank", static_cast<double>(classical.constraint_rank()), 2, "classical-bit family constraints");
    equal("classical_constraint_mismatch", constraint_mismatch, 0, "alpha = -a, beta = -b");
    report("channel_constraint_rank", static_cast<double>(channel.constraint_rank()), "three-site channel family");
    below("hnet_nonadditive_max_coeff", hnet_symbolic, cfg_.tol.symbolic, "H_net commutes with the non-additive law");
    report("hnet_xx_coefficient", hnet.coeff("XX").real(), "H_net exchange weight");
    report("circuit_unitary_nonadditive_commutator", composite, "composite circuit, reported only");
    below("partial_swap_nonadditive", pswap, cfg_.tol.pauli, "partial SWAP conserves the non-additive law");
}

Matrix haar_state(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Vector v(2);
    for (Eigen::Index k = 0; k < 2; ++k) v(k) = Complex(g(rng), g(rng));
    v.normalize();
    return projector(v);
}

bool same_roots(const std::vector<Vec3> &got, const std::vector<Vec3> &want) {
    if (got.size() != want.size()) return false;
    for (const auto &w : want) {
        bool found = std::any_of(got.begin(), got.end(), [&](const Vec3 &g) {
            return std::abs(g[0] - w[0]) < 1e-10 && std::abs(g[1] - w[1]) < 1e-10 && std::abs(g[2] - w[2]) < 1e-10;
        });
        if (!found) return false;
    }
    return true;
}

void Runner::witness() {
    const auto target = TargetMap::witness_target();
    const auto axes = solve_axis_system(target, cfg_.witness.theta);
    const auto axes_report = axes.to_report();
    write_json("axis_systems.json", axes_report.to_json());
    const std::string axis_anchor = "no single probe rotation realises the target map";
    from_report("axis_", axes_report, axis_anchor);
    if (std::abs(cfg_.witness.theta - std::numbers::pi / 2) < 1e-15) {
        equal("axis_z_roots_mismatch", same_roots(axes.find("z")->acceptable_roots(), {{0.0, -1.0, 0.0}}) ? 0 : 1, 0,
              axis_anchor);
        equal("axis_x_roots_mismatch", same_roots(axes.find("x")->acceptable_roots(), {{0.0, 1.0, 0.0}}) ? 0 : 1, 0,
              axis_anchor);
    }
    equal("axis_intersection_size", static_cast<double>(axes.common_roots.size()), 0, axis_anchor);
    if (axes.has_flipped_variant) {
        equal("axis_intersection_flipped_size", static_cast<double>(axes.common_roots_flipped.size()), 0, axis_anchor);
    }

    const double invariance = mediator_invariance_residual(reservoir_family(), cfg_.witness.mediator_draws, cfg_.seed);
    below("classical_mediator_invariance", invariance, cfg_.tol.state, "Z_M is frozen under classical-bit couplings");

    std::mt19937_64 rng(cfg_.seed ^ 0x9e3779b97f4a7c15ULL);
    double bloch_err = 0.0;
    auto csv_file = open("witness_state.csv");
    CsvWriter csv(csv_file);
    csv.header({"draw", "bloch_x", "bloch_y", "bloch_z"});
    for (std::size_t d = 0; d < cfg_.witness.state_draws; ++d) {
        Bloch b = witness_state_check(haar_state(rng));
        bloch_err = std::max(bloch_err, std::sqrt(std::pow(b[0] - 1, 2) + b[1] * b[1] + b[2] * b[2]));
        csv.row({std::to_string(d), format_double(b[0]), format_double(b[1]), format_double(b[2])});
    }
    below("witness_state_bloch_error", bloch_err, cfg_.tol.state, "probe ends in +X for any mediator state");

    const auto swap = quantum_demo(Interaction::kSwap);
    const auto exchange = quantum_demo(Interaction::kExchange);
    write_json("quantum_demo.json", {{"swap", swap.to_json()}, {"exchange", exchange.to_json()}});
    from_report("demo_swap_", swap, "qubit mediator prepares an X_Q eigenstate");
    from_report("demo_exchange_", exchange, "exchange coupling conserves Z_Q + Z_M");

    SearchBudget budget;
    budget.grid_points = cfg_.witness.grid_points;
    budget.time_points = cfg_.witness.time_points;
    budget.random_draws = cfg_.witness.random_draws;
    budget.max_evaluations = cfg_.witness.budget;
    budget.seed = cfg_.seed;
    budget.workers = cfg_.workers;
    budget.gap_threshold = cfg_.witness.gap_threshold;
    const auto search = classical_impossibility_search(ConservedQuantity::nonadditive(), target, budget);
    write_json("classical_search.json", search.to_json());
    from_report("search_", search, "classical-bit mediator search (evidence only)");
}

void Runner::homogenize() {
    HomogenizerConfig hc;
    hc.eta = cfg_.homogenize.eta;
    hc.n = cfg_.homogenize.n;
    const auto traj = run(hc);

    auto csv_file = open("homogenizer_trajectory.csv");
    CsvWriter csv(csv_file);
    csv.header({"step", "trace_distance", "xi_coefficient", "predicted_coefficient", "rest_norm"});
    double law = 0.0, rise = 0.0;
    for (std::size_t k = 0; k < traj.rho.size(); ++k) {
        csv.row({std::to_string(k), format_double(traj.trace_distance[k]), format_double(traj.kappa[k]),
                 format_double(traj.kappa_predicted[k]), format_double(traj.rest_norm[k])});
        law = std::max(law, std::abs(traj.kappa[k] - traj.kappa_predicted[k]));
        if (k) rise = std::max(rise, traj.trace_distance[k] - traj.trace_distance[k - 1]);
    }
    const double recursion = *std::max_element(traj.recursion_residual.begin(), traj.recursion_residual.end());

    double sweep = 0.0;
    for (double eta : {0.2, 0.5, 1.0}) {
        HomogenizerConfig sc;
        sc.eta = eta;
        sc.n = 30;
        const auto st = run(sc);
        for (std::size_t k = 0; k < st.kappa.size(); ++k) sweep = std::max(sweep, std::abs(st.kappa[k] - st.kappa_predicted[k]));
    }

    HomogenizerConfig jc = hc;
    jc.n = 2;
    const auto joint = run_joint(jc);
    const auto short_traj = run(jc);
    double joint_gap = 0.0;
    for (std::size_t k = 0; k < joint.size(); ++k) {
        joint_gap = std::max(joint_gap, (joint[k] - short_traj.rho[k + 1]).cwiseAbs().maxCoeff());
    }

    const std::string anchor = "partial-SWAP homogenizer";
    below("homogenizer_coefficient_law", law, cfg_.tol.state, "xi weight 1 - cos^{2n}(eta)");
    below("homogenizer_coefficient_sweep", sweep, cfg_.tol.state, "xi weight for eta in {0.2, 0.5, 1.0}, n <= 30");
    below("homogenizer_distance_rise", rise, 1e-12, "trace distance to xi never grows");
    below("homogenizer_recursion_vs_exact", recursion, cfg_.tol.pauli, "closed-form recursion vs partial trace");
    above("homogenizer_min_eigenvalue", traj.min_eigenvalue, -1e-12, anchor);
    below("homogenizer_joint_vs_fresh", joint_gap, cfg_.tol.pauli, "fresh-ancilla shortcut vs joint state");
    report("homogenizer_final_trace_distance", traj.trace_distance.back(), anchor);

    ReservoirConfig rc;
    rc.n = cfg_.reservoir.n;
    rc.grid_points = cfg_.reservoir.grid_points;
    rc.random_draws = cfg_.reservoir.random_draws;
    rc.max_points = cfg_.reservoir.budget;
    rc.distance_threshold = cfg_.reservoir.distance_threshold;
    rc.seed = cfg_.seed;
    rc.workers = cfg_.workers;
    const auto res = classical_reservoir_check(rc, reservoir_family());
    write_json("reservoir.json", res.to_json());
    from_report("reservoir_", res, "classical-bit reservoir cannot homogenize toward |0>");
    for (const char *key : {"admissible_points", "skipped_points"}) {
        auto it = res.parameters.find(key);
        if (it != res.parameters.end()) report(std::string("reservoir_") + key, it->second, "H^2 = I admissibility");
    }
}

void Runner::oscillator() {
    const auto &o = cfg_.oscillator;
    std::vector<double> ts;
    for (std::size_t k = 0; k < o.t_points; ++k) ts.push_back(o.t_max * static_cast<double>(k) / static_cast<double>(o.t_points - 1));

    auto csv_file = open("oscillator_trajectories.csv");
    CsvWriter csv(csv_file);
    csv.header({"d_b", "t", "mediator_state", "coherence"});
    json summary = json::object();
    const std::string anchor = "Holstein-Primakoff mediator";
    for (std::size_t d : o.truncations) {
        const std::string tag = "_d" + std::to_string(d);
        const DenseOperator h = hp_hamiltonian(d);
        const auto r = oscillator_witness_run(d, ts, cfg_.workers);
        for (std::size_t m = 0; m < r.coherence.size(); ++m) {
            for (std::size_t k = 0; k < ts.size(); ++k) {
                csv.row({std::to_string(d), format_double(ts[k]), std::to_string(m), format_double(r.coherence[m][k])});
            }
        }
        const auto cmp = compare_with_hnet(d);
        summary[std::to_string(d)] = {{"hermiticity", h.hermiticity_residual()},
                                      {"unitarity", r.max_unitarity_residual},
                                      {"hnet_residual_mod_identity", cmp.residual},
                                      {"number_commutator", number_commutator(d)},
                                      {"conservation_audit", conservation_audit(d)},
                                      {"su2_residual", su2_residual(hp_qubit(0.5, d))},
                                      {"max_coherence", r.max_coherence}};
        below("oscillator_hermiticity" + tag, h.hermiticity_residual(), cfg_.tol.pauli, anchor);
        below("oscillator_unitarity" + tag, r.max_unitarity_residual, cfg_.tol.unitary, anchor);
        below("oscillator_trace_error" + tag, r.max_trace_error, cfg_.tol.unitary, anchor);
        above("oscillator_min_eigenvalue" + tag, r.min_eigenvalue, -cfg_.tol.unitary, anchor);
        report("oscillator_hnet_residual" + tag, cmp.residual, "HP Hamiltonian vs mapped H_net, modulo identity");
        report("oscillator_number_commutator" + tag, number_commutator(d), "[H, b^dag b]");
        report("oscillator_conservation_audit" + tag, conservation_audit(d), "[H, image of the non-additive law]");
        if (d == 2) {
            below("oscillator_su2" + tag, su2_residual(hp_qubit(0.5, 2)), cfg_.tol.pauli, "spin-1/2 algebra at d = 2");
            above("oscillator_max_coherence_m1" + tag, r.max_coherence[1], 1e-6, "oscillator induces probe coherence");
        } else {
            report("oscillator_su2" + tag, su2_residual(hp_qubit(0.5, d)), "truncation artifact");
        }
    }
    write_json("oscillator.json", summary);
}

}  // namespace

ExperimentResult run_experiment(const RunConfig &config) {
    const auto &names = experiment_names();
    if (std::find(names.begin(), names.end(), config.experiment) == names.end()) {
        throw ConfigError("$.experiment", "unknown experiment '" + config.experiment + "'");
    }
    std::filesystem::create_directories(config.out_dir);
    Runner runner(config);
    const bool all = config.experiment == "all";
    if (all || config.experiment == "table1") runner.table1();
    if (all || config.experiment == "conservation") runner.conservation();
    if (all || config.experiment == "witness") runner.witness();
    if (all || config.experiment == "homogenize") runner.homogenize();
    if (all || config.experiment == "oscillator") runner.oscillator();
    ExperimentResult result = runner.finish();
    result.artifacts.push_back("summary.json");
    std::ofstream out(config.out_dir / "summary.json", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (config.out_dir / "summary.json").string());
    out << result.summary(config).dump(2) << '\n';
    return result;
}

}  // namespace qw
