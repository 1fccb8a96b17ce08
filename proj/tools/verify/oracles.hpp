#pragma once

#include <cstdint>

#include "signbal/generate.hpp"
#include "signbal/graph.hpp"

namespace signbal::verify {

struct CycleParity {
    bool balanced = true;      // every cycle has an even number of negative edges
    bool antibalanced = true;  // every cycle has an even number of positive edges
    std::size_t cycles = 0;
};

/// Enumerates every simple cycle (each one once per direction) by depth-first
/// search from its smallest node. Exponential; meant for n <= 8.
[[nodiscard]] CycleParity enumerate_cycles(const SignedGraph& g);

/// Connected graph on 2..n_max nodes with random density, random signs and
/// weight magnitudes in [0.5, 1.5).
[[nodiscard]] SignedGraph random_small_graph(Rng& rng, std::size_t n_max);

/// The 500-graph corpus (n <= 6) shared by the classification checks.
[[nodiscard]] std::vector<SignedGraph> small_graph_corpus(std::uint64_t seed = 20240501, std::size_t count = 500);

}  // namespace signbal::verify
