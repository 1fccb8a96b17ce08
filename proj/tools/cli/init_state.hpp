#pragma once

#include <optional>
#include <string_view>

#include "signbal/balance.hpp"
#include "signbal/graph.hpp"

namespace signbal::cli {

/// Initial-state specs:
///
///     uniform                  every node at l0 / n
///     node:<id>=<v>,<id>=<v>   explicit values, all other nodes 0
///     bipartition              +l0 / -l0 by the certificate of the nearer structure
///     neighbourhood:<id>       <id> and its neighbours seeded for threshold dynamics
///
/// `mode` picks the structure for `bipartition` and `neighbourhood`; when
/// absent the graph's own verdict decides, falling back to whichever of
/// d_b / d_a is smaller.
[[nodiscard]] Vector parse_initial_state(std::string_view spec, const SignedGraph& g, double l0,
                                         std::optional<BalanceTarget> mode);

/// The structure used when no mode is given.
[[nodiscard]] BalanceTarget nearest_structure(const SignedGraph& g);

/// Bipartition for `mode`: the certificate if one exists, else the partition of
/// the minimum-frustration report.
[[nodiscard]] Bipartition structure_partition(const SignedGraph& g, BalanceTarget mode);

}  // namespace signbal::cli
