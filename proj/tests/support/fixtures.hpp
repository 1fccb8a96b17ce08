#pragma once

#include <vector>

#include "signbal/graph.hpp"

namespace fixtures {

using signbal::build_graph;
using signbal::Edge;
using signbal::SignedGraph;

inline SignedGraph triangle(double a, double b, double c) {
    return build_graph(3, {{0, 1, a}, {1, 2, b}, {0, 2, c}});
}

inline SignedGraph positive_triangle() { return triangle(1, 1, 1); }
inline SignedGraph negative_triangle() { return triangle(-1, -1, -1); }

// Edges 01, 02, 12 positive; 13 positive, 23 negative. Cycle {0,1,2} has three
// positive edges and cycle {1,2,3} one negative edge.
inline SignedGraph four_node_unbalanced() {
    return build_graph(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, -1}});
}

inline SignedGraph cycle(std::vector<double> weights) {
    const std::size_t n = weights.size();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.push_back(Edge{i, (i + 1) % n, weights[i]});
    return build_graph(n, edges);
}

}  // namespace fixtures
