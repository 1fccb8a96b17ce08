#include "init_state.hpp"

#include <charconv>
#include <string>

#include "signbal/dynamics.hpp"
#include "signbal/error.hpp"
#include "signbal/spectral.hpp"

namespace signbal::cli {

namespace {

template <class T>
T parse_number(std::string_view text, std::string_view spec) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw Error(ErrorCode::InvalidConfig, "bad number '" + std::string(text) + "' in initial state '" +
                                                  std::string(spec) + "'");
    }
    return value;
}

NodeId parse_node(std::string_view text, std::string_view spec, const SignedGraph& g) {
    const auto id = parse_number<NodeId>(text, spec);
    if (id >= g.node_count()) {
        throw Error(ErrorCode::IdOutOfRange, "node " + std::to_string(id) + " in initial state is not in the graph");
    }
    return id;
}

}  // namespace

BalanceTarget nearest_structure(const SignedGraph& g) {
    const auto c = classify(g);
    if (c.balanced()) return BalanceTarget::Balanced;
    if (c.antibalanced()) return BalanceTarget::Antibalanced;
    const auto m = strict_unbalance_contraction(g);
    return m.d_b <= m.d_a ? BalanceTarget::Balanced : BalanceTarget::Antibalanced;
}

Bipartition structure_partition(const SignedGraph& g, BalanceTarget mode) {
    const auto c = classify(g);
    if (mode == BalanceTarget::Balanced && c.balanced()) return *c.balanced_partition;
    if (mode == BalanceTarget::Antibalanced && c.antibalanced()) return *c.antibalanced_partition;
    return frustration(g, mode).partition;
}

Vector parse_initial_state(std::string_view spec, const SignedGraph& g, double l0, std::optional<BalanceTarget> mode) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    if (spec == "uniform") return Vector::Constant(n, l0 / static_cast<double>(n));
    if (spec == "bipartition") {
        return l0 * structure_partition(g, mode.value_or(nearest_structure(g))).indicator();
    }
    if (spec.starts_with("neighbourhood:")) {
        const NodeId center = parse_node(spec.substr(14), spec, g);
        return neighbourhood_seed(g, center, l0, mode.value_or(nearest_structure(g)));
    }
    if (spec.starts_with("node:")) {
        Vector x = Vector::Zero(n);
        std::string_view rest = spec.substr(5);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::string_view item = rest.substr(0, comma);
            const auto eq = item.find('=');
            if (eq == std::string_view::npos) {
                throw Error(ErrorCode::InvalidConfig, "expected <id>=<value> in initial state '" + std::string(spec) + "'");
            }
            x(static_cast<Eigen::Index>(parse_node(item.substr(0, eq), spec, g))) = parse_number<double>(item.substr(eq + 1), spec);
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
        return x;
    }
    throw Error(ErrorCode::InvalidConfig, "unknown initial state '" + std::string(spec) +
                                              "' (expected uniform, node:<id>=<v>,..., bipartition or neighbourhood:<id>)");
}

}  // namespace signbal::cli
