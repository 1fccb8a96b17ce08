#include "signbal/generate.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "signbal/error.hpp"

namespace signbal {

std::uint64_t Rng::below(std::uint64_t bound) {
    // Rejection keeps the result exactly uniform.
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
}

namespace {

void require_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::ParamOutOfRange, std::string(name) + " = " + std::to_string(p) + " is outside [0, 1]");
    }
}

void require_weight(double alpha) {
    if (!(std::isfinite(alpha) && alpha > 0.0)) {
        throw Error(ErrorCode::ParamOutOfRange, "alpha = " + std::to_string(alpha) + " must be positive");
    }
}

}  // namespace

SignedGraph ssbm(const SSBMParams& p) {
    require_probability(p.p_in, "p_in");
    require_probability(p.p_out, "p_out");
    require_probability(p.eta, "eta");
    require_weight(p.alpha);
    const std::size_t n = p.n1 + p.n2;
    if (n < 2) throw Error(ErrorCode::ParamOutOfRange, "n1 + n2 must be at least 2");

    Rng rng(p.seed);
    std::vector<Edge> edges;
    for (int attempt = 0; attempt < kMaxConnectivityAttempts; ++attempt) {
        edges.clear();
        for (NodeId i = 0; i < n; ++i) {
            for (NodeId j = i + 1; j < n; ++j) {
                const bool same = (i < p.n1) == (j < p.n1);
                if (!rng.bernoulli(same ? p.p_in : p.p_out)) continue;
                double w = same ? p.alpha : -p.alpha;
                if (rng.bernoulli(p.eta)) w = -w;
                edges.push_back(Edge{i, j, w});
            }
        }
        if (is_connected(n, edges)) return build_graph(n, std::move(edges));
    }
    throw Error(ErrorCode::GaveUpConnectivity,
                "no connected draw in " + std::to_string(kMaxConnectivityAttempts) + " attempts");
}

Bipartition planted_partition(const SSBMParams& p) {
    std::vector<int> s(p.n1 + p.n2, -1);
    std::fill_n(s.begin(), p.n1, 1);
    return Bipartition(std::move(s));
}

Bipartition rule_partition(const BipartitionRule& rule, std::size_t n) {
    std::vector<int> s(n, 1);
    switch (rule.kind) {
        case BipartitionRule::Kind::Uniform:
            break;
        case BipartitionRule::Kind::Arc: {
            const std::size_t len = rule.size == 0 ? n / 2 : rule.size;
            if (len > n) throw Error(ErrorCode::ParamOutOfRange, "arc length exceeds n");
            for (std::size_t i = len; i < n; ++i) s[i] = -1;
            break;
        }
        case BipartitionRule::Kind::Blocks: {
            const std::size_t len = rule.size == 0 ? 1 : rule.size;
            for (std::size_t i = 0; i < n; ++i) s[i] = (i / len) % 2 == 0 ? 1 : -1;
            break;
        }
    }
    return Bipartition(std::move(s));
}

SignedGraph ring_lattice(const LatticeParams& p) {
    if (p.dbar < 2 || p.dbar % 2 != 0 || p.dbar >= p.n) {
        throw Error(ErrorCode::ParamOutOfRange,
                    "dbar = " + std::to_string(p.dbar) + " must be even with 2 <= dbar < n = " + std::to_string(p.n));
    }
    require_weight(p.alpha);

    const BipartitionRule& rule = std::visit([](const auto& plan) -> const BipartitionRule& { return plan.rule; }, p.plan);
    const Bipartition s = rule_partition(rule, p.n);
    const double orientation = std::holds_alternative<AntibalancedPlan>(p.plan) ? -1.0 : 1.0;

    std::vector<Edge> edges;
    edges.reserve(p.n * p.dbar / 2);
    for (NodeId i = 0; i < p.n; ++i) {
        for (std::size_t r = 1; r <= p.dbar / 2; ++r) {
            const NodeId j = (i + r) % p.n;
            edges.push_back(Edge{std::min(i, j), std::max(i, j), orientation * p.alpha * s[i] * s[j]});
        }
    }
    if (const auto* flip = std::get_if<FlipKPlan>(&p.plan)) {
        if (flip->k > edges.size()) {
            throw Error(ErrorCode::ParamOutOfRange,
                        "k = " + std::to_string(flip->k) + " exceeds the " + std::to_string(edges.size()) + " edges");
        }
        // Partial Fisher-Yates over edge indices.
        std::vector<std::size_t> idx(edges.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        Rng rng(flip->seed);
        for (std::size_t a = 0; a < flip->k; ++a) {
            const auto b = a + static_cast<std::size_t>(rng.below(idx.size() - a));
            std::swap(idx[a], idx[b]);
            edges[idx[a]].w = -edges[idx[a]].w;
        }
    }
    return build_graph(p.n, std::move(edges));
}

SignedGraph random_signed_tree(std::size_t n, double sign_prob, std::uint64_t seed, double alpha) {
    if (n < 1) throw Error(ErrorCode::ParamOutOfRange, "a tree needs at least one node");
    require_probability(sign_prob, "sign_prob");
    require_weight(alpha);
    Rng rng(seed);
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (NodeId k = 1; k < n; ++k) {
        const auto parent = static_cast<NodeId>(rng.below(k));
        const double w = rng.bernoulli(sign_prob) ? -alpha : alpha;
        edges.push_back(Edge{parent, k, w});
    }
    return build_graph(n, std::move(edges));
}

}  // namespace signbal
