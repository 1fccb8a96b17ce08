#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "signbal/balance.hpp"
#include "signbal/graph.hpp"

namespace signbal {

// All simulators use row-vector left multiplication: x(t+1)^T = x(t)^T M,
// i.e. x_j(t+1) = sum_i x_i(t) M_ij.

enum class Model { LinearAdjacency, RandomWalk, Threshold, DoubledWalk };

[[nodiscard]] std::string_view to_string(Model m) noexcept;

struct Trajectory {
    Model model = Model::LinearAdjacency;
    std::vector<Vector> states;  // states[t] = x(t), t = 0..horizon
    nlohmann::json config = nlohmann::json::object();

    [[nodiscard]] std::size_t horizon() const noexcept { return states.empty() ? 0 : states.size() - 1; }
    [[nodiscard]] const Vector& final_state() const { return states.back(); }
};

/// x(t)^T = x(0)^T W^t, no renormalization. Throws DimensionMismatch.
[[nodiscard]] Trajectory linear_adjacency_simulate(const SignedGraph& g, const Vector& x0, std::size_t horizon);

/// lambda_bar_1^t I1 u_bar_1 u_bar_1^T I1 for a balanced graph, with
/// (-lambda_bar_1)^t and the antibalance certificate for an antibalanced one.
/// Throws WrongVerdict for strictly unbalanced graphs and Bipartite when |W|
/// is bipartite (the rank-1 term is then not dominant).
[[nodiscard]] DenseMatrix rank1_approximation(const SignedGraph& g, std::size_t t);

/// x(t)^T = x(0)^T P^t. The absolute mass sum|x0| is recorded in the config.
[[nodiscard]] Trajectory random_walk_simulate(const SignedGraph& g, const Vector& x0, std::size_t horizon);

inline constexpr double kConvergenceTolerance = 1e-10;

/// Runs the signed walk until ||x(t) - x(t-2)||_inf < tol or max_steps.
[[nodiscard]] Trajectory random_walk_until_converged(const SignedGraph& g, const Vector& x0, std::size_t max_steps,
                                                     double tol = kConvergenceTolerance);

struct StationaryPrediction {
    enum class Kind { Fixed, AlternatingPair, Zero };
    Kind kind = Kind::Zero;
    /// Fixed: {x*}. AlternatingPair: {x*_odd, x*_even}. Zero: {0}.
    std::vector<Vector> vectors;

    /// The predicted state at step t (large t).
    [[nodiscard]] const Vector& at(std::size_t t) const;
};

[[nodiscard]] std::string_view to_string(StationaryPrediction::Kind k) noexcept;

/// Closed-form limit of the signed walk. Throws BipartiteUnsupported when the
/// graph is balanced or antibalanced and |W| is bipartite.
[[nodiscard]] StationaryPrediction predict_stationary(const SignedGraph& g, const Vector& x0);

struct SignPatternReport {
    Eigen::MatrixXi predicted;  // predicted sign of (P^t)_ij
    DenseMatrix power;          // P^t
    std::size_t checked = 0;    // entries with |(P_bar^t)_ij| > 1e-12
    std::size_t mismatches = 0;
    double max_row_abs_sum_error = 0.0;  // max_i |sum_j |(P^t)_ij| - 1|
};

/// Predicted sign of (P^t)_ij: s_i s_j when balanced, (-1)^t s_i s_j when
/// antibalanced, checked against the computed power. Throws WrongVerdict.
[[nodiscard]] SignPatternReport transition_power_sign_pattern(const SignedGraph& g, std::size_t t);

struct ELTConfig {
    double theta_l = 2.0;
    double alpha = 0.1;
    double l0 = 1.0;
    std::size_t horizon = 10;
    /// Optional table theta(j, t) for t = 1..horizon (column 0 unused). When
    /// absent the schedule is (theta_l * alpha)^t * l0 for every node.
    std::optional<DenseMatrix> general_thresholds;

    [[nodiscard]] double threshold(NodeId j, std::size_t t) const;
};

struct ActivationSets {
    std::vector<std::vector<NodeId>> positive;  // A_t^+
    std::vector<std::vector<NodeId>> negative;  // A_t^-

    [[nodiscard]] std::vector<NodeId> active(std::size_t t) const;
    [[nodiscard]] std::size_t active_count(std::size_t t) const { return positive.at(t).size() + negative.at(t).size(); }
};

[[nodiscard]] ActivationSets activation_sets(const Trajectory& traj);

struct ThresholdRun {
    Trajectory trajectory;
    ActivationSets activation;
};

/// Synchronous threshold dynamics: x_j(t) = theta if sum_i W_ij x_i(t-1) >= theta,
/// -theta if <= -theta, else 0, with theta = theta_{j,t}. Comparisons are
/// literal. Throws DimensionMismatch and NonpositiveThreshold.
[[nodiscard]] ThresholdRun elt_simulate(const SignedGraph& g, const Vector& x0, const ELTConfig& cfg);

struct RingLattice {
    std::size_t dbar = 0;
    double alpha = 0.0;
};

/// Circulant ring: node i adjacent to i +- 1..dbar/2 (mod n), uniform |w|.
[[nodiscard]] std::optional<RingLattice> detect_ring_lattice(const SignedGraph& g);

/// Seeds `center` at +l0 and each neighbour j at +l0 when the edge sign
/// agrees with the target (positive for Balanced, negative for Antibalanced),
/// -l0 otherwise. Every other node is 0.
[[nodiscard]] Vector neighbourhood_seed(const SignedGraph& g, NodeId center, double l0, BalanceTarget mode);

/// Threshold dynamics on a signed ring lattice using integer neighbour
/// counts: node j counts sum over active i of sign(W_ij) * sign(x_i(t-1)) and
/// compares it with theta_l. Magnitudes follow (theta_l * alpha)^t * l0.
/// Throws NotLattice, InconsistentMode (mode contradicts a balanced or
/// antibalanced lattice; strictly unbalanced lattices accept either mode),
/// NonpositiveThreshold, InvalidConfig (alpha disagrees with the lattice or a
/// threshold table is given).
[[nodiscard]] ThresholdRun elt_lattice_simulate(const SignedGraph& g, NodeId center, const ELTConfig& cfg,
                                                BalanceTarget mode);

/// theta_l <= dbar / 2. Throws NotLattice.
[[nodiscard]] bool certain_propagation_check(const SignedGraph& g, double theta_l);

struct DoubledRun {
    Trajectory positive;  // x+(t)
    Trajectory negative;  // x-(t)

    /// x+ + x-, which follows the unsigned walk.
    [[nodiscard]] Trajectory sum() const;
    /// x+ - x-, which follows the signed walk.
    [[nodiscard]] Trajectory difference() const;
};

/// [x+(t+1), x-(t+1)] = [x+(t), x-(t)] P(2). Throws NegativeDensity and
/// DimensionMismatch.
[[nodiscard]] DoubledRun doubled_walk_simulate(const SignedGraph& g, const Vector& xplus0, const Vector& xminus0,
                                               std::size_t horizon);

}  // namespace signbal
