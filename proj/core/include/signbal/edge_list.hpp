#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "signbal/graph.hpp"

namespace signbal {

/// Text edge list:
///
///     # comment (also '%')
///     n 16            <- optional, must precede the first edge
///     0 1 0.1
///     0 2 -0.1
///
/// Node tokens that are all non-negative integers are used as ids directly and
/// n defaults to max id + 1. If any token is not an integer, every token is
/// treated as a label and ids are assigned in order of first appearance.
struct LoadedGraph {
    SignedGraph graph;
    std::vector<std::string> labels;  // labels[id]
};

[[nodiscard]] LoadedGraph read_edge_list(std::istream& in, std::string_view source = "<input>");
[[nodiscard]] LoadedGraph load_edge_list(const std::filesystem::path& path);

/// Writes `n <N>` followed by one `i j w` line per edge in stored order. The
/// weight uses the shortest representation that round-trips exactly.
void write_edge_list(std::ostream& out, const SignedGraph& g, std::span<const std::string> comments = {});
void save_edge_list(const std::filesystem::path& path, const SignedGraph& g, std::span<const std::string> comments = {});

[[nodiscard]] std::string format_double(double value);

}  // namespace signbal
