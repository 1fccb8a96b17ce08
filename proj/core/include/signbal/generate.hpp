#pragma once

#include <cstdint>
#include <random>
#include <variant>

#include "signbal/balance.hpp"
#include "signbal/graph.hpp"

namespace signbal {

/// Seeded 64-bit Mersenne Twister with a fixed double conversion, so a seed
/// produces the same graph on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

struct SSBMParams {
    std::size_t n1 = 6;
    std::size_t n2 = 10;
    double p_in = 0.8;
    double p_out = 0.1;
    double eta = 0.0;
    double alpha = 0.1;
    std::uint64_t seed = 1;

    friend bool operator==(const SSBMParams&, const SSBMParams&) = default;
};

/// Maximum number of draws ssbm() makes while looking for a connected instance.
inline constexpr int kMaxConnectivityAttempts = 100;

/// Two-block signed SBM. Nodes 0..n1-1 form block 1. Pairs (i < j, in
/// lexicographic order) get an edge with probability p_in inside a block
/// (+alpha) and p_out across (-alpha); each realized edge then flips sign with
/// probability eta. Disconnected draws are redrawn from the same stream.
/// Throws ParamOutOfRange and GaveUpConnectivity.
[[nodiscard]] SignedGraph ssbm(const SSBMParams& params);

/// +1 on block 1, -1 on block 2.
[[nodiscard]] Bipartition planted_partition(const SSBMParams& params);

/// How a lattice's nodes are split into two sides.
struct BipartitionRule {
    enum class Kind { Uniform, Arc, Blocks };
    Kind kind = Kind::Uniform;
    /// Arc: length of the +1 arc starting at node 0 (0 means n/2).
    /// Blocks: length of each alternating block (0 means 1).
    std::size_t size = 0;

    friend bool operator==(const BipartitionRule&, const BipartitionRule&) = default;
};

[[nodiscard]] Bipartition rule_partition(const BipartitionRule& rule, std::size_t n);

struct BalancedPlan {
    BipartitionRule rule;
    friend bool operator==(const BalancedPlan&, const BalancedPlan&) = default;
};
struct AntibalancedPlan {
    BipartitionRule rule;
    friend bool operator==(const AntibalancedPlan&, const AntibalancedPlan&) = default;
};
/// A balanced plan with k distinct edges chosen uniformly and flipped.
struct FlipKPlan {
    BipartitionRule rule;
    std::size_t k = 1;
    std::uint64_t seed = 1;
    friend bool operator==(const FlipKPlan&, const FlipKPlan&) = default;
};

using SignPlan = std::variant<BalancedPlan, AntibalancedPlan, FlipKPlan>;

struct LatticeParams {
    std::size_t n = 40;
    std::size_t dbar = 4;
    double alpha = 0.1;
    SignPlan plan = BalancedPlan{};

    friend bool operator==(const LatticeParams&, const LatticeParams&) = default;
};

/// Ring lattice, node i adjacent to i +- 1..dbar/2 (mod n), |w| = alpha.
/// Balanced: w_ij = alpha s_i s_j. Antibalanced: w_ij = -alpha s_i s_j.
/// Throws ParamOutOfRange unless dbar is even, 2 <= dbar < n and alpha > 0.
[[nodiscard]] SignedGraph ring_lattice(const LatticeParams& params);

/// Uniform random recursive tree: node k attaches to a uniform node in [0, k).
/// Each edge weighs -alpha with probability sign_prob and +alpha otherwise.
[[nodiscard]] SignedGraph random_signed_tree(std::size_t n, double sign_prob, std::uint64_t seed, double alpha = 1.0);

}  // namespace signbal
