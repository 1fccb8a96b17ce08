#include "signbal/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "signbal/error.hpp"
#include "signbal/matrices.hpp"
#include "signbal/spectral.hpp"

namespace signbal {

namespace {

void check_dimension(const SignedGraph& g, const Vector& x, std::string_view what) {
    if (static_cast<std::size_t>(x.size()) != g.node_count()) {
        throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has length " + std::to_string(x.size()) +
                                                      ", graph has " + std::to_string(g.node_count()) + " nodes");
    }
}

Trajectory iterate(Model model, const DenseMatrix& m, const Vector& x0, std::size_t horizon) {
    Trajectory traj;
    traj.model = model;
    traj.states.reserve(horizon + 1);
    traj.states.push_back(x0);
    const DenseMatrix mt = m.transpose();
    for (std::size_t t = 0; t < horizon; ++t) traj.states.push_back(mt * traj.states.back());
    traj.config["horizon"] = horizon;
    return traj;
}

int sign_of(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

std::string_view to_string(Model m) noexcept {
    switch (m) {
        case Model::LinearAdjacency: return "linear";
        case Model::RandomWalk: return "rw";
        case Model::Threshold: return "elt";
        case Model::DoubledWalk: return "doubled";
    }
    return "unknown";
}

Trajectory linear_adjacency_simulate(const SignedGraph& g, const Vector& x0, std::size_t horizon) {
    check_dimension(g, x0, "initial state");
    return iterate(Model::LinearAdjacency, g.weights(), x0, horizon);
}

DenseMatrix rank1_approximation(const SignedGraph& g, std::size_t t) {
    const auto c = classify(g);
    if (!c.balanced() && !c.antibalanced()) throw Error(ErrorCode::WrongVerdict, "graph is strictly unbalanced");
    if (two_coloring(g)) throw Error(ErrorCode::Bipartite, "|W| is bipartite; -rho is as large as rho");
    const Spectrum bar = eigendecompose_symmetric(g.weights().cwiseAbs());
    const Vector s = c.balanced() ? c.balanced_partition->indicator() : c.antibalanced_partition->indicator();
    const double lambda = c.balanced() ? bar.eigenvalues(0) : -bar.eigenvalues(0);
    const Vector u = s.cwiseProduct(bar.eigenvectors.col(0));
    return std::pow(lambda, static_cast<double>(t)) * (u * u.transpose());
}

Trajectory random_walk_simulate(const SignedGraph& g, const Vector& x0, std::size_t horizon) {
    check_dimension(g, x0, "initial state");
    Trajectory traj = iterate(Model::RandomWalk, transition_matrix(g), x0, horizon);
    traj.config["initial_abs_mass"] = x0.cwiseAbs().sum();
    return traj;
}

Trajectory random_walk_until_converged(const SignedGraph& g, const Vector& x0, std::size_t max_steps, double tol) {
    check_dimension(g, x0, "initial state");
    const DenseMatrix pt = transition_matrix(g).transpose();
    Trajectory traj;
    traj.model = Model::RandomWalk;
    traj.states.push_back(x0);
    bool converged = false;
    for (std::size_t t = 1; t <= max_steps; ++t) {
        traj.states.push_back(pt * traj.states.back());
        if (t >= 2 && (traj.states[t] - traj.states[t - 2]).cwiseAbs().maxCoeff() < tol) {
            converged = true;
            break;
        }
    }
    traj.config["horizon"] = traj.horizon();
    traj.config["max_steps"] = max_steps;
    traj.config["tolerance"] = tol;
    traj.config["converged"] = converged;
    traj.config["initial_abs_mass"] = x0.cwiseAbs().sum();
    return traj;
}

const Vector& StationaryPrediction::at(std::size_t t) const {
    if (kind == Kind::AlternatingPair) return vectors.at(t % 2 == 1 ? 0 : 1);
    return vectors.at(0);
}

std::string_view to_string(StationaryPrediction::Kind k) noexcept {
    switch (k) {
        case StationaryPrediction::Kind::Fixed: return "Fixed";
        case StationaryPrediction::Kind::AlternatingPair: return "AlternatingPair";
        case StationaryPrediction::Kind::Zero: return "Zero";
    }
    return "Unknown";
}

StationaryPrediction predict_stationary(const SignedGraph& g, const Vector& x0) {
    check_dimension(g, x0, "initial state");
    const auto c = classify(g);
    StationaryPrediction out;
    if (!c.balanced() && !c.antibalanced()) {
        out.kind = StationaryPrediction::Kind::Zero;
        out.vectors.push_back(Vector::Zero(x0.size()));
        return out;
    }
    if (two_coloring(g)) {
        throw Error(ErrorCode::BipartiteUnsupported, "no closed-form limit for a bipartite balanced graph");
    }
    const auto deg = degree_vector(g);
    if (c.balanced()) {
        const Vector s = c.balanced_partition->indicator();
        out.kind = StationaryPrediction::Kind::Fixed;
        out.vectors.push_back(s.dot(x0) / deg.total * s.cwiseProduct(deg.d));
    } else {
        const Vector s = c.antibalanced_partition->indicator();
        const Vector even = s.dot(x0) / deg.total * s.cwiseProduct(deg.d);
        out.kind = StationaryPrediction::Kind::AlternatingPair;
        out.vectors.push_back(-even);
        out.vectors.push_back(even);
    }
    return out;
}

SignPatternReport transition_power_sign_pattern(const SignedGraph& g, std::size_t t) {
    const auto c = classify(g);
    if (!c.balanced() && !c.antibalanced()) throw Error(ErrorCode::WrongVerdict, "graph is strictly unbalanced");
    const bool balanced = c.balanced();
    const Bipartition& b = balanced ? *c.balanced_partition : *c.antibalanced_partition;
    const int parity = (!balanced && t % 2 == 1) ? -1 : 1;

    const auto n = static_cast<Eigen::Index>(g.node_count());
    const DenseMatrix p = transition_matrix(g);
    const DenseMatrix pbar = p.cwiseAbs();
    SignPatternReport out;
    out.power = DenseMatrix::Identity(n, n);
    DenseMatrix bar_power = DenseMatrix::Identity(n, n);
    for (std::size_t k = 0; k < t; ++k) {
        out.power = out.power * p;
        bar_power = bar_power * pbar;
    }
    out.predicted = Eigen::MatrixXi::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const int predicted = parity * b[static_cast<NodeId>(i)] * b[static_cast<NodeId>(j)];
            out.predicted(i, j) = predicted;
            if (bar_power(i, j) > 1e-12) {
                ++out.checked;
                if (sign_of(out.power(i, j)) != predicted) ++out.mismatches;
            }
        }
        out.max_row_abs_sum_error = std::max(out.max_row_abs_sum_error, std::abs(out.power.row(i).cwiseAbs().sum() - 1.0));
    }
    return out;
}

double ELTConfig::threshold(NodeId j, std::size_t t) const {
    if (general_thresholds) return (*general_thresholds)(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(t));
    return std::pow(theta_l * alpha, static_cast<double>(t)) * l0;
}

std::vector<NodeId> ActivationSets::active(std::size_t t) const {
    std::vector<NodeId> out(positive.at(t));
    out.insert(out.end(), negative.at(t).begin(), negative.at(t).end());
    std::sort(out.begin(), out.end());
    return out;
}

ActivationSets activation_sets(const Trajectory& traj) {
    ActivationSets out;
    for (const auto& x : traj.states) {
        auto& pos = out.positive.emplace_back();
        auto& neg = out.negative.emplace_back();
        for (Eigen::Index j = 0; j < x.size(); ++j) {
            if (x(j) > 0) pos.push_back(static_cast<NodeId>(j));
            if (x(j) < 0) neg.push_back(static_cast<NodeId>(j));
        }
    }
    return out;
}

namespace {

void validate_elt(const ELTConfig& cfg, std::size_t n) {
    auto positive = [](double v) { return std::isfinite(v) && v > 0; };
    if (!positive(cfg.theta_l)) throw Error(ErrorCode::NonpositiveThreshold, "theta_l must be positive");
    if (!positive(cfg.alpha)) throw Error(ErrorCode::NonpositiveThreshold, "alpha must be positive");
    if (!positive(cfg.l0)) throw Error(ErrorCode::NonpositiveThreshold, "l0 must be positive");
    if (!cfg.general_thresholds) return;
    const auto& table = *cfg.general_thresholds;
    if (static_cast<std::size_t>(table.rows()) != n || static_cast<std::size_t>(table.cols()) < cfg.horizon + 1) {
        throw Error(ErrorCode::DimensionMismatch, "threshold table must be n x (horizon + 1)");
    }
    for (Eigen::Index j = 0; j < table.rows(); ++j) {
        for (Eigen::Index t = 1; t <= static_cast<Eigen::Index>(cfg.horizon); ++t) {
            if (!positive(table(j, t))) {
                throw Error(ErrorCode::NonpositiveThreshold,
                            "theta(" + std::to_string(j) + ", " + std::to_string(t) + ") = " + std::to_string(table(j, t)));
            }
        }
    }
}

nlohmann::json elt_snapshot(const ELTConfig& cfg) {
    return {{"theta_l", cfg.theta_l}, {"alpha", cfg.alpha}, {"l0", cfg.l0}, {"horizon", cfg.horizon},
            {"general_thresholds", cfg.general_thresholds.has_value()}};
}

}  // namespace

ThresholdRun elt_simulate(const SignedGraph& g, const Vector& x0, const ELTConfig& cfg) {
    check_dimension(g, x0, "initial state");
    validate_elt(cfg, g.node_count());
    const auto n = static_cast<Eigen::Index>(g.node_count());
    ThresholdRun run;
    run.trajectory.model = Model::Threshold;
    run.trajectory.config = elt_snapshot(cfg);
    run.trajectory.states.push_back(x0);
    for (std::size_t t = 1; t <= cfg.horizon; ++t) {
        const Vector input = g.weights().transpose() * run.trajectory.states.back();
        Vector next = Vector::Zero(n);
        for (Eigen::Index j = 0; j < n; ++j) {
            const double theta = cfg.threshold(static_cast<NodeId>(j), t);
            if (input(j) >= theta) {
                next(j) = theta;
            } else if (input(j) <= -theta) {
                next(j) = -theta;
            }
        }
        run.trajectory.states.push_back(std::move(next));
    }
    run.activation = activation_sets(run.trajectory);
    return run;
}

std::optional<RingLattice> detect_ring_lattice(const SignedGraph& g) {
    const std::size_t n = g.node_count();
    const auto degree = g.neighbors(0).size();
    if (degree == 0 || degree % 2 != 0 || degree >= n) return std::nullopt;
    const std::size_t half = degree / 2;
    const double alpha = std::abs(g.edges().front().w);
    for (const auto& e : g.edges()) {
        if (std::abs(std::abs(e.w) - alpha) > 1e-12 * alpha) return std::nullopt;
    }
    if (g.edge_count() != n * half) return std::nullopt;
    for (NodeId i = 0; i < n; ++i) {
        for (std::size_t r = 1; r <= half; ++r) {
            if (!g.find_edge(i, (i + r) % n)) return std::nullopt;
        }
    }
    return RingLattice{degree, alpha};
}

Vector neighbourhood_seed(const SignedGraph& g, NodeId center, double l0, BalanceTarget mode) {
    if (center >= g.node_count()) {
        throw Error(ErrorCode::IdOutOfRange, "seed node " + std::to_string(center) + " is not in the graph");
    }
    const int want = mode == BalanceTarget::Balanced ? 1 : -1;
    Vector x = Vector::Zero(static_cast<Eigen::Index>(g.node_count()));
    x(static_cast<Eigen::Index>(center)) = l0;
    for (const auto& nb : g.neighbors(center)) {
        x(static_cast<Eigen::Index>(nb.node)) = sign_of(nb.w) == want ? l0 : -l0;
    }
    return x;
}

namespace {

RingLattice require_lattice(const SignedGraph& g) {
    const auto lattice = detect_ring_lattice(g);
    if (!lattice) throw Error(ErrorCode::NotLattice, "graph is not a ring lattice with uniform weight magnitude");
    return *lattice;
}

}  // namespace

ThresholdRun elt_lattice_simulate(const SignedGraph& g, NodeId center, const ELTConfig& cfg, BalanceTarget mode) {
    const RingLattice lattice = require_lattice(g);
    validate_elt(cfg, g.node_count());
    if (cfg.general_thresholds) throw Error(ErrorCode::InvalidConfig, "lattice dynamics use the geometric schedule only");
    if (std::abs(cfg.alpha - lattice.alpha) > 1e-12 * lattice.alpha) {
        throw Error(ErrorCode::InvalidConfig, "alpha = " + std::to_string(cfg.alpha) + " but the lattice has |w| = " +
                                                  std::to_string(lattice.alpha));
    }
    const auto c = classify(g);
    if (mode == BalanceTarget::Balanced && !c.balanced() && c.antibalanced()) {
        throw Error(ErrorCode::InconsistentMode, "balanced mode on an antibalanced lattice");
    }
    if (mode == BalanceTarget::Antibalanced && !c.antibalanced() && c.balanced()) {
        throw Error(ErrorCode::InconsistentMode, "antibalanced mode on a balanced lattice");
    }

    const std::size_t n = g.node_count();
    ThresholdRun run;
    run.trajectory.model = Model::Threshold;
    run.trajectory.config = elt_snapshot(cfg);
    run.trajectory.config["lattice"] = {{"dbar", lattice.dbar}, {"mode", to_string(mode)}, {"center", center}};
    run.trajectory.states.push_back(neighbourhood_seed(g, center, cfg.l0, mode));

    std::vector<long> count(n);
    for (std::size_t t = 1; t <= cfg.horizon; ++t) {
        const Vector& prev = run.trajectory.states.back();
        std::fill(count.begin(), count.end(), 0);
        for (const auto& e : g.edges()) {
            const int s = sign_of(e.w);
            count[e.j] += s * sign_of(prev(static_cast<Eigen::Index>(e.i)));
            count[e.i] += s * sign_of(prev(static_cast<Eigen::Index>(e.j)));
        }
        const double magnitude = cfg.threshold(0, t);
        Vector next = Vector::Zero(static_cast<Eigen::Index>(n));
        for (std::size_t j = 0; j < n; ++j) {
            const auto k = static_cast<double>(count[j]);
            if (k >= cfg.theta_l) {
                next(static_cast<Eigen::Index>(j)) = magnitude;
            } else if (k <= -cfg.theta_l) {
                next(static_cast<Eigen::Index>(j)) = -magnitude;
            }
        }
        run.trajectory.states.push_back(std::move(next));
    }
    run.activation = activation_sets(run.trajectory);
    return run;
}

bool certain_propagation_check(const SignedGraph& g, double theta_l) {
    const RingLattice lattice = require_lattice(g);
    return theta_l <= static_cast<double>(lattice.dbar) / 2.0;
}

Trajectory DoubledRun::sum() const {
    Trajectory out = positive;
    for (std::size_t t = 0; t < out.states.size(); ++t) out.states[t] += negative.states[t];
    return out;
}

Trajectory DoubledRun::difference() const {
    Trajectory out = positive;
    for (std::size_t t = 0; t < out.states.size(); ++t) out.states[t] -= negative.states[t];
    return out;
}

DoubledRun doubled_walk_simulate(const SignedGraph& g, const Vector& xplus0, const Vector& xminus0,
                                 std::size_t horizon) {
    check_dimension(g, xplus0, "positive density");
    check_dimension(g, xminus0, "negative density");
    for (Eigen::Index i = 0; i < xplus0.size(); ++i) {
        if (xplus0(i) < 0 || xminus0(i) < 0) {
            throw Error(ErrorCode::NegativeDensity, "initial density at node " + std::to_string(i) + " is negative");
        }
    }
    const auto n = xplus0.size();
    Vector joint(2 * n);
    joint << xplus0, xminus0;
    const Trajectory both = iterate(Model::DoubledWalk, doubled_transition(g), joint, horizon);

    DoubledRun run;
    run.positive.model = run.negative.model = Model::DoubledWalk;
    run.positive.config = run.negative.config = both.config;
    for (const auto& x : both.states) {
        run.positive.states.push_back(x.head(n));
        run.negative.states.push_back(x.tail(n));
    }
    return run;
}

}  // namespace signbal
