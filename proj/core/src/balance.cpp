#include "signbal/balance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "signbal/error.hpp"
#include "signbal/matrices.hpp"
#include "signbal/spectral.hpp"

namespace signbal {

namespace {

int sign_of(double w) { return w > 0 ? 1 : -1; }

// Propagates s_j = relation(W_ij) * s_i over a spanning traversal from node 0
// and then checks every edge. relation = +1 for balance, -1 for antibalance.
std::optional<Bipartition> propagate(const SignedGraph& g, int relation) {
    const std::size_t n = g.node_count();
    std::vector<int> s(n, 0);
    std::vector<NodeId> queue;
    queue.reserve(n);
    s[0] = 1;
    queue.push_back(0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId u = queue[head];
        for (const auto& nb : g.neighbors(u)) {
            const int want = relation * sign_of(nb.w) * s[u];
            if (s[nb.node] == 0) {
                s[nb.node] = want;
                queue.push_back(nb.node);
            } else if (s[nb.node] != want) {
                return std::nullopt;
            }
        }
    }
    return Bipartition(std::move(s));
}

bool violates(const Edge& e, const Bipartition& b, BalanceTarget target) {
    const int relation = target == BalanceTarget::Balanced ? 1 : -1;
    return relation * sign_of(e.w) * b[e.i] * b[e.j] < 0;
}

}  // namespace

Bipartition::Bipartition(std::vector<int> signs) : signs_(std::move(signs)) {
    if (signs_.empty()) throw Error(ErrorCode::ParamOutOfRange, "bipartition over an empty node set");
    for (std::size_t i = 0; i < signs_.size(); ++i) {
        if (signs_[i] != 1 && signs_[i] != -1) {
            throw Error(ErrorCode::ParamOutOfRange, "bipartition entry " + std::to_string(i) + " is " +
                                                        std::to_string(signs_[i]) + ", expected +1 or -1");
        }
    }
}

Vector Bipartition::indicator() const {
    Vector v(static_cast<Eigen::Index>(signs_.size()));
    for (std::size_t i = 0; i < signs_.size(); ++i) v(static_cast<Eigen::Index>(i)) = signs_[i];
    return v;
}

Bipartition Bipartition::product(const Bipartition& other) const {
    if (other.size() != size()) throw Error(ErrorCode::DimensionMismatch, "bipartitions of different sizes");
    std::vector<int> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = signs_[i] * other.signs_[i];
    return Bipartition(std::move(out));
}

Bipartition Bipartition::normalized() const {
    if (signs_.front() == 1) return *this;
    std::vector<int> out(signs_);
    for (auto& v : out) v = -v;
    return Bipartition(std::move(out));
}

bool Bipartition::equivalent(const Bipartition& other) const {
    return normalized() == other.normalized();
}

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Balanced: return "Balanced";
        case Verdict::Antibalanced: return "Antibalanced";
        case Verdict::Both: return "Both";
        case Verdict::StrictlyUnbalanced: return "StrictlyUnbalanced";
    }
    return "Unknown";
}

std::string_view to_string(BalanceTarget t) noexcept {
    return t == BalanceTarget::Balanced ? "Balanced" : "Antibalanced";
}

std::optional<Bipartition> balance_certificate(const SignedGraph& g) { return propagate(g, 1); }

BalanceClassification classify(const SignedGraph& g) {
    BalanceClassification out;
    out.balanced_partition = propagate(g, 1);
    out.antibalanced_partition = propagate(g, -1);
    if (out.balanced() && out.antibalanced()) {
        out.verdict = Verdict::Both;
    } else if (out.balanced()) {
        out.verdict = Verdict::Balanced;
    } else if (out.antibalanced()) {
        out.verdict = Verdict::Antibalanced;
    } else {
        out.verdict = Verdict::StrictlyUnbalanced;
    }
    return out;
}

std::optional<Bipartition> two_coloring(const SignedGraph& g) {
    // Bipartite topology <=> the all-negative graph on it is balanced.
    return propagate(map_weights(g, [](const Edge&) { return -1.0; }), 1);
}

bool satisfies_balance(const SignedGraph& g, const Bipartition& b) {
    if (b.size() != g.node_count()) return false;
    return std::none_of(g.edges().begin(), g.edges().end(),
                        [&](const Edge& e) { return violates(e, b, BalanceTarget::Balanced); });
}

bool satisfies_antibalance(const SignedGraph& g, const Bipartition& b) {
    if (b.size() != g.node_count()) return false;
    return std::none_of(g.edges().begin(), g.edges().end(),
                        [&](const Edge& e) { return violates(e, b, BalanceTarget::Antibalanced); });
}

std::vector<Edge> violating_edges(const SignedGraph& g, const Bipartition& b, BalanceTarget target) {
    if (b.size() != g.node_count()) throw Error(ErrorCode::DimensionMismatch, "bipartition size does not match graph");
    std::vector<Edge> out;
    for (const auto& e : g.edges()) {
        if (violates(e, b, target)) out.push_back(e);
    }
    return out;
}

SignedGraph negate(const SignedGraph& g) {
    return map_weights(g, [](const Edge& e) { return -e.w; });
}

SignedGraph switch_signs(const SignedGraph& g, const Bipartition& b) {
    if (b.size() != g.node_count()) throw Error(ErrorCode::DimensionMismatch, "bipartition size does not match graph");
    return map_weights(g, [&](const Edge& e) { return b[e.i] * b[e.j] * e.w; });
}

SignedGraph flip_edges(const SignedGraph& g, std::span<const Edge> flips) {
    std::vector<char> flip(g.edge_count(), 0);
    for (const auto& f : flips) {
        const auto k = g.find_edge(f.i, f.j);
        if (!k) {
            throw Error(ErrorCode::EdgeNotPresent,
                        "pair {" + std::to_string(f.i) + ", " + std::to_string(f.j) + "} is not an edge");
        }
        flip[*k] = 1;
    }
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (flip[k]) edges[k].w = -edges[k].w;
    }
    return detail::assemble_graph(g.node_count(), std::move(edges));
}

Bipartition antibalanced_partition_from_bipartite(const SignedGraph& g, const Bipartition& bipartite,
                                                  const Bipartition& balanced) {
    if (bipartite.size() != g.node_count() || balanced.size() != g.node_count()) {
        throw Error(ErrorCode::DimensionMismatch, "bipartition size does not match graph");
    }
    for (const auto& e : g.edges()) {
        if (bipartite[e.i] == bipartite[e.j]) {
            throw Error(ErrorCode::NotBipartite, "edge {" + std::to_string(e.i) + ", " + std::to_string(e.j) +
                                                     "} lies inside one side of the given colouring");
        }
    }
    if (!satisfies_balance(g, balanced)) {
        throw Error(ErrorCode::NotBalanced, "the given partition does not certify balance");
    }
    return bipartite.product(balanced);
}

std::optional<SignConflict> sign_conflicting_walk(const SignedGraph& g, std::size_t l_max) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    const DenseMatrix a = sign_adjacency(g);
    const DenseMatrix pos1 = (a.array() > 0.5).cast<double>().matrix();
    const DenseMatrix neg1 = (a.array() < -0.5).cast<double>().matrix();
    DenseMatrix pos = pos1;
    DenseMatrix neg = neg1;
    for (std::size_t l = 1; l <= l_max; ++l) {
        if (l > 1) {
            const DenseMatrix next_pos = pos * pos1 + neg * neg1;
            const DenseMatrix next_neg = pos * neg1 + neg * pos1;
            pos = (next_pos.array() > 0.5).cast<double>().matrix();
            neg = (next_neg.array() > 0.5).cast<double>().matrix();
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = i; j < n; ++j) {
                if (pos(i, j) > 0.5 && neg(i, j) > 0.5) {
                    return SignConflict{static_cast<NodeId>(i), static_cast<NodeId>(j), l};
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

FrustrationReport report_for(const SignedGraph& g, const Bipartition& b, BalanceTarget target, bool exact) {
    FrustrationReport out;
    out.target = target;
    out.flip_set = violating_edges(g, b, target);
    out.flip_count = out.flip_set.size();
    for (const auto& e : out.flip_set) out.flipped_weight += std::abs(e.w);
    out.exact = exact;
    out.partition = b.normalized();
    return out;
}

FrustrationReport exact_frustration(const SignedGraph& g, BalanceTarget target) {
    const std::size_t n = g.node_count();
    if (n > kExactFrustrationMaxNodes) {
        throw Error(ErrorCode::TooLarge, "exact frustration is limited to " + std::to_string(kExactFrustrationMaxNodes) +
                                             " nodes, graph has " + std::to_string(n));
    }
    if (n == 1) return report_for(g, Bipartition::uniform(1), target, true);

    const int relation = target == BalanceTarget::Balanced ? 1 : -1;
    // Node k (k >= 1) is bit k-1 of the mask; a set bit means s_k = -1.
    std::vector<int> s(n, 1);
    std::vector<int> edge_sign(g.edge_count());
    for (std::size_t k = 0; k < g.edge_count(); ++k) edge_sign[k] = relation * sign_of(g.edges()[k].w);

    long violations = 0;
    for (std::size_t k = 0; k < g.edge_count(); ++k) violations += edge_sign[k] < 0 ? 1 : 0;

    std::uint64_t mask = 0;
    std::uint64_t best_mask = 0;
    long best = violations;
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    for (std::uint64_t step = 1; step < total; ++step) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(step));
        const NodeId u = bit + 1;
        for (const auto& nb : g.neighbors(u)) {
            const bool was_violating = edge_sign[nb.edge] * s[u] * s[nb.node] < 0;
            violations += was_violating ? -1 : 1;
        }
        s[u] = -s[u];
        mask ^= std::uint64_t{1} << bit;
        if (violations < best) {
            best = violations;
            best_mask = mask;
        } else if (violations == best) {
            // Lexicographic order on (s_1, s_2, ...) with +1 first: the
            // smaller vector has a clear bit at the lowest differing index.
            const std::uint64_t diff = mask ^ best_mask;
            const std::uint64_t low = diff & (~diff + 1);
            if ((mask & low) == 0) best_mask = mask;
        }
    }
    std::vector<int> signs(n, 1);
    for (std::size_t k = 1; k < n; ++k) {
        if (best_mask & (std::uint64_t{1} << (k - 1))) signs[k] = -1;
    }
    return report_for(g, Bipartition(std::move(signs)), target, true);
}

FrustrationReport heuristic_frustration(const SignedGraph& g, BalanceTarget target) {
    const Spectrum eig = eigendecompose_symmetric(g.weights());
    const Eigen::Index col = target == BalanceTarget::Balanced ? 0 : eig.eigenvectors.cols() - 1;
    const Vector v = eig.eigenvectors.col(col);
    std::vector<int> signs(g.node_count());
    for (std::size_t i = 0; i < signs.size(); ++i) {
        const double x = v(static_cast<Eigen::Index>(i));
        signs[i] = (std::abs(x) < kEigenvectorSignTolerance || x > 0) ? 1 : -1;
    }
    return report_for(g, Bipartition(std::move(signs)), target, false);
}

}  // namespace

FrustrationReport frustration(const SignedGraph& g, BalanceTarget target, FrustrationMode mode) {
    return mode == FrustrationMode::Exact ? exact_frustration(g, target) : heuristic_frustration(g, target);
}

FrustrationReport frustration(const SignedGraph& g, BalanceTarget target) {
    return frustration(g, target, g.node_count() <= kExactFrustrationMaxNodes ? FrustrationMode::Exact : FrustrationMode::Heuristic);
}

}  // namespace signbal
