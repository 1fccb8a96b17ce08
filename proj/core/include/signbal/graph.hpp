#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace signbal {

using NodeId = std::size_t;
using Vector = Eigen::VectorXd;
using DenseMatrix = Eigen::MatrixXd;

/// Weights with magnitude below this are rejected as zero.
inline constexpr double kZeroWeightTolerance = 1e-15;

/// Undirected signed edge. Stored with i < j.
struct Edge {
    NodeId i = 0;
    NodeId j = 0;
    double w = 0.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
    NodeId node;
    double w;
    std::size_t edge;  // index into SignedGraph::edges()
};

class SignedGraph;

namespace detail {
struct GraphKey {
    explicit GraphKey() = default;
};
SignedGraph assemble_graph(std::size_t n, std::vector<Edge> edges);
}  // namespace detail

/// Connected, undirected, weighted signed graph on nodes 0..n-1.
///
/// Instances are immutable once built and only come out of build_graph() or
/// one of the sign transforms, so every SignedGraph satisfies: no self-loops,
/// no duplicate pairs, no zero weights, connected.
class SignedGraph {
public:
    SignedGraph(detail::GraphKey, std::size_t n, std::vector<Edge> edges);

    [[nodiscard]] std::size_t node_count() const noexcept { return n_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
    [[nodiscard]] std::span<const Neighbor> neighbors(NodeId v) const { return adjacency_.at(v); }

    /// Signed weighted adjacency matrix W.
    [[nodiscard]] const DenseMatrix& weights() const noexcept { return w_; }
    [[nodiscard]] double weight(NodeId i, NodeId j) const { return w_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)); }

    [[nodiscard]] std::optional<std::size_t> find_edge(NodeId i, NodeId j) const;

    [[nodiscard]] std::size_t positive_edge_count() const noexcept;
    [[nodiscard]] std::size_t negative_edge_count() const noexcept;

    friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
    DenseMatrix w_;
};

struct DegreeVector {
    Vector d;            // d_i = sum_j |W_ij|
    double total = 0.0;  // 2m
};

/// Validates and builds a connected signed graph. Edges may be given in
/// either orientation; they are stored with i < j in input order.
/// Throws Error{IdOutOfRange, SelfLoop, ZeroWeight, DuplicateEdge, Disconnected}.
[[nodiscard]] SignedGraph build_graph(std::size_t n, std::vector<Edge> edges);

struct Component {
    SignedGraph graph;
    std::vector<NodeId> nodes;  // local id -> original id
};

/// Same validation as build_graph() except connectivity; returns one graph per
/// connected component with node ids relabelled in increasing original order.
[[nodiscard]] std::vector<Component> split_components(std::size_t n, std::vector<Edge> edges);

[[nodiscard]] DegreeVector degree_vector(const SignedGraph& g);

/// Same topology with weights replaced by their absolute values.
[[nodiscard]] SignedGraph unsigned_counterpart(const SignedGraph& g);

/// Same topology with each weight replaced by f(edge).
template <class F>
[[nodiscard]] SignedGraph map_weights(const SignedGraph& g, F&& f) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (auto& e : edges) e.w = f(e);
    return detail::assemble_graph(g.node_count(), std::move(edges));
}

[[nodiscard]] bool is_connected(std::size_t n, std::span<const Edge> edges);

}  // namespace signbal
