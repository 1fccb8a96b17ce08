#include "oracles.hpp"

#include <functional>

namespace signbal::verify {

CycleParity enumerate_cycles(const SignedGraph& g) {
    CycleParity out;
    const std::size_t n = g.node_count();
    std::vector<char> on_path(n, 0);
    for (NodeId start = 0; start < n; ++start) {
        std::function<void(NodeId, std::size_t, int, int)> dfs = [&](NodeId u, std::size_t len, int neg, int pos) {
            for (const auto& nb : g.neighbors(u)) {
                const int neg2 = neg + (nb.w < 0 ? 1 : 0);
                const int pos2 = pos + (nb.w > 0 ? 1 : 0);
                if (nb.node == start && len >= 3) {
                    ++out.cycles;
                    if (neg2 % 2 != 0) out.balanced = false;
                    if (pos2 % 2 != 0) out.antibalanced = false;
                } else if (nb.node > start && !on_path[nb.node]) {
                    on_path[nb.node] = 1;
                    dfs(nb.node, len + 1, neg2, pos2);
                    on_path[nb.node] = 0;
                }
            }
        };
        on_path[start] = 1;
        dfs(start, 1, 0, 0);
        on_path[start] = 0;
    }
    return out;
}

SignedGraph random_small_graph(Rng& rng, std::size_t n_max) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.below(n_max - 1));
    const double p = 0.25 + 0.75 * rng.uniform();
    for (;;) {
        std::vector<Edge> edges;
        for (NodeId i = 0; i < n; ++i) {
            for (NodeId j = i + 1; j < n; ++j) {
                if (!rng.bernoulli(p)) continue;
                const double mag = 0.5 + rng.uniform();
                edges.push_back(Edge{i, j, rng.bernoulli(0.5) ? -mag : mag});
            }
        }
        if (is_connected(n, edges)) return build_graph(n, std::move(edges));
    }
}

std::vector<SignedGraph> small_graph_corpus(std::uint64_t seed, std::size_t count) {
    Rng rng(seed);
    std::vector<SignedGraph> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) out.push_back(random_small_graph(rng, 6));
    return out;
}

}  // namespace signbal::verify
