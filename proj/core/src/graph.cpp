#include "signbal/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>

#include "signbal/error.hpp"

namespace signbal {

namespace {

std::string describe(const Edge& e) {
    return "(" + std::to_string(e.i) + ", " + std::to_string(e.j) + ", " + std::to_string(e.w) + ")";
}

std::uint64_t pair_key(NodeId i, NodeId j) {
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
}

// Checks everything except connectivity and orients each edge as i < j.
void validate_edges(std::size_t n, std::vector<Edge>& edges) {
    if (n == 0) throw Error(ErrorCode::ParamOutOfRange, "graph must have at least one node");
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (auto& e : edges) {
        if (e.i >= n || e.j >= n) {
            const NodeId bad = e.i >= n ? e.i : e.j;
            throw Error(ErrorCode::IdOutOfRange,
                        "node " + std::to_string(bad) + " in edge " + describe(e) + " is outside [0, " +
                            std::to_string(n) + ")");
        }
        if (e.i == e.j) throw Error(ErrorCode::SelfLoop, "edge " + describe(e) + " joins node " + std::to_string(e.i) + " to itself");
        if (!std::isfinite(e.w) || std::abs(e.w) < kZeroWeightTolerance) {
            throw Error(ErrorCode::ZeroWeight, "edge " + describe(e) + " has zero or non-finite weight");
        }
        if (e.i > e.j) std::swap(e.i, e.j);
        if (!seen.insert(pair_key(e.i, e.j)).second) {
            throw Error(ErrorCode::DuplicateEdge, "pair {" + std::to_string(e.i) + ", " + std::to_string(e.j) + "} appears more than once");
        }
    }
}

std::vector<std::size_t> component_labels(std::size_t n, std::span<const Edge> edges) {
    std::vector<std::vector<NodeId>> adj(n);
    for (const auto& e : edges) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(n, unset);
    std::size_t next = 0;
    std::vector<NodeId> stack;
    for (NodeId root = 0; root < n; ++root) {
        if (label[root] != unset) continue;
        label[root] = next;
        stack.push_back(root);
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            for (NodeId v : adj[u]) {
                if (label[v] == unset) {
                    label[v] = next;
                    stack.push_back(v);
                }
            }
        }
        ++next;
    }
    return label;
}

}  // namespace

namespace detail {

SignedGraph assemble_graph(std::size_t n, std::vector<Edge> edges) {
    for (const auto& e : edges) {
        if (!std::isfinite(e.w) || std::abs(e.w) < kZeroWeightTolerance) {
            throw Error(ErrorCode::ZeroWeight, "edge " + describe(e) + " has zero or non-finite weight");
        }
    }
    return SignedGraph(GraphKey{}, n, std::move(edges));
}

}  // namespace detail

SignedGraph::SignedGraph(detail::GraphKey, std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adjacency_(n), w_(DenseMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n))) {
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        const auto& e = edges_[k];
        adjacency_[e.i].push_back({e.j, e.w, k});
        adjacency_[e.j].push_back({e.i, e.w, k});
        const auto i = static_cast<Eigen::Index>(e.i);
        const auto j = static_cast<Eigen::Index>(e.j);
        w_(i, j) = e.w;
        w_(j, i) = e.w;
    }
    for (auto& row : adjacency_) {
        std::sort(row.begin(), row.end(), [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    }
}

std::optional<std::size_t> SignedGraph::find_edge(NodeId i, NodeId j) const {
    if (i >= n_ || j >= n_) return std::nullopt;
    const auto& row = adjacency_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j, [](const Neighbor& nb, NodeId v) { return nb.node < v; });
    if (it != row.end() && it->node == j) return it->edge;
    return std::nullopt;
}

std::size_t SignedGraph::positive_edge_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w > 0; }));
}

std::size_t SignedGraph::negative_edge_count() const noexcept {
    return edges_.size() - positive_edge_count();
}

bool is_connected(std::size_t n, std::span<const Edge> edges) {
    if (n == 0) return false;
    const auto labels = component_labels(n, edges);
    return std::all_of(labels.begin(), labels.end(), [](std::size_t l) { return l == 0; });
}

SignedGraph build_graph(std::size_t n, std::vector<Edge> edges) {
    validate_edges(n, edges);
    const auto labels = component_labels(n, edges);
    for (NodeId v = 0; v < n; ++v) {
        if (labels[v] != 0) {
            throw Error(ErrorCode::Disconnected,
                        "node " + std::to_string(v) + " is not reachable from node 0");
        }
    }
    return detail::assemble_graph(n, std::move(edges));
}

std::vector<Component> split_components(std::size_t n, std::vector<Edge> edges) {
    validate_edges(n, edges);
    const auto labels = component_labels(n, edges);
    const std::size_t count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;

    std::vector<std::vector<NodeId>> members(count);
    std::vector<NodeId> local(n);
    for (NodeId v = 0; v < n; ++v) {
        local[v] = members[labels[v]].size();
        members[labels[v]].push_back(v);
    }
    std::vector<std::vector<Edge>> parts(count);
    for (const auto& e : edges) parts[labels[e.i]].push_back({local[e.i], local[e.j], e.w});

    std::vector<Component> out;
    out.reserve(count);
    for (std::size_t c = 0; c < count; ++c) {
        out.push_back({detail::assemble_graph(members[c].size(), std::move(parts[c])), std::move(members[c])});
    }
    return out;
}

DegreeVector degree_vector(const SignedGraph& g) {
    DegreeVector out;
    out.d = g.weights().cwiseAbs().rowwise().sum();
    out.total = out.d.sum();
    return out;
}

SignedGraph unsigned_counterpart(const SignedGraph& g) {
    return map_weights(g, [](const Edge& e) { return std::abs(e.w); });
}

}  // namespace signbal
