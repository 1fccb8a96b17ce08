#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "signbal/graph.hpp"

namespace signbal {

/// Two-way split of the node set as a sign vector: s_i = +1 for V1, -1 for V2.
class Bipartition {
public:
    /// Throws ParamOutOfRange unless every entry is +1 or -1 and the vector is nonempty.
    explicit Bipartition(std::vector<int> signs);

    [[nodiscard]] static Bipartition uniform(std::size_t n) { return Bipartition(std::vector<int>(n, 1)); }

    [[nodiscard]] std::size_t size() const noexcept { return signs_.size(); }
    [[nodiscard]] int operator[](NodeId i) const { return signs_.at(i); }
    [[nodiscard]] std::span<const int> signs() const noexcept { return signs_; }

    /// The indicator vector 1_1 (also the diagonal of the switching matrix I_1).
    [[nodiscard]] Vector indicator() const;

    /// Entrywise product s ⊙ t.
    [[nodiscard]] Bipartition product(const Bipartition& other) const;

    /// Global negation representative with s_0 = +1.
    [[nodiscard]] Bipartition normalized() const;

    /// Equal up to global negation.
    [[nodiscard]] bool equivalent(const Bipartition& other) const;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;

private:
    std::vector<int> signs_;
};

enum class Verdict { Balanced, Antibalanced, Both, StrictlyUnbalanced };
enum class BalanceTarget { Balanced, Antibalanced };
enum class FrustrationMode { Exact, Heuristic };

[[nodiscard]] std::string_view to_string(Verdict v) noexcept;
[[nodiscard]] std::string_view to_string(BalanceTarget t) noexcept;

struct BalanceClassification {
    Verdict verdict = Verdict::StrictlyUnbalanced;
    std::optional<Bipartition> balanced_partition;
    std::optional<Bipartition> antibalanced_partition;

    [[nodiscard]] bool balanced() const noexcept { return balanced_partition.has_value(); }
    [[nodiscard]] bool antibalanced() const noexcept { return antibalanced_partition.has_value(); }
};

/// Edges whose sign must flip to reach the target structure.
struct FrustrationReport {
    BalanceTarget target = BalanceTarget::Balanced;
    std::vector<Edge> flip_set;
    std::size_t flip_count = 0;
    double flipped_weight = 0.0;  // sum of |W_ij| over flip_set
    bool exact = false;
    Bipartition partition = Bipartition::uniform(1);  // the bipartition the count refers to
};

struct SignConflict {
    NodeId i;
    NodeId j;
    std::size_t length;
};

/// Largest node count accepted by exact frustration search (2^(n-1) assignments).
inline constexpr std::size_t kExactFrustrationMaxNodes = 25;

/// Entries of an eigenvector below this magnitude are assigned to V1 by the
/// heuristic frustration search.
inline constexpr double kEigenvectorSignTolerance = 1e-9;

/// Balance and antibalance via sign-propagating traversal from node 0.
/// Certificates are normalized to s_0 = +1.
[[nodiscard]] BalanceClassification classify(const SignedGraph& g);

/// Balance certificate for g, if one exists.
[[nodiscard]] std::optional<Bipartition> balance_certificate(const SignedGraph& g);

/// Two-colouring of the topology, if bipartite. Normalized to s_0 = +1.
[[nodiscard]] std::optional<Bipartition> two_coloring(const SignedGraph& g);

/// Positive edges inside the parts, negative edges across.
[[nodiscard]] bool satisfies_balance(const SignedGraph& g, const Bipartition& b);
/// Negative edges inside the parts, positive edges across.
[[nodiscard]] bool satisfies_antibalance(const SignedGraph& g, const Bipartition& b);

/// Edges violating the target structure with respect to b.
[[nodiscard]] std::vector<Edge> violating_edges(const SignedGraph& g, const Bipartition& b, BalanceTarget target);

/// w -> -w on every edge.
[[nodiscard]] SignedGraph negate(const SignedGraph& g);

/// W'_ij = s_i s_j W_ij. Involution; preserves |W|.
[[nodiscard]] SignedGraph switch_signs(const SignedGraph& g, const Bipartition& b);

/// Flips the sign of each listed edge (matched by endpoints).
/// Throws EdgeNotPresent for a pair that is not an edge of g.
[[nodiscard]] SignedGraph flip_edges(const SignedGraph& g, std::span<const Edge> flips);

/// For a bipartite graph that is balanced, the antibalance certificate is the
/// entrywise product of the bipartite colouring and the balance certificate.
/// Throws NotBipartite / NotBalanced when the inputs do not certify g.
[[nodiscard]] Bipartition antibalanced_partition_from_bipartite(const SignedGraph& g, const Bipartition& bipartite,
                                                                const Bipartition& balanced);

/// First (length, i, j) with i <= j such that walks of that length between i
/// and j exist with both signs; none if no such pair up to l_max.
[[nodiscard]] std::optional<SignConflict> sign_conflicting_walk(const SignedGraph& g, std::size_t l_max);

/// Minimum number of edges to flip towards the target structure.
///
/// Exact mode enumerates all 2^(n-1) bipartitions in Gray-code order and keeps
/// the one with the fewest violating edges (ties: lexicographically smallest
/// sign vector, +1 before -1); it throws TooLarge above kExactFrustrationMaxNodes.
/// Heuristic mode splits by the sign pattern of the leading (balance) or
/// trailing (antibalance) eigenvector of W and reports an upper bound.
[[nodiscard]] FrustrationReport frustration(const SignedGraph& g, BalanceTarget target, FrustrationMode mode);

/// Exact when the graph is small enough, heuristic otherwise.
[[nodiscard]] FrustrationReport frustration(const SignedGraph& g, BalanceTarget target);

}  // namespace signbal
