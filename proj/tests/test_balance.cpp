#include <doctest.h>

#include "fixtures.hpp"
#include "reference.hpp"
#include "signbal/balance.hpp"
#include "signbal/error.hpp"
#include "signbal/generate.hpp"
#include "signbal/spectral.hpp"

using namespace signbal;
using namespace fixtures;

namespace {

Bipartition bp(std::vector<int> s) { return Bipartition(std::move(s)); }

const std::vector<SignedGraph>& corpus() {
    static const auto c = verify::small_graph_corpus(4242, 500);
    return c;
}

// Cycle-space dimension m - n + 1 is zero exactly for trees.
bool is_tree(const SignedGraph& g) { return g.edge_count() + 1 == g.node_count(); }

}  // namespace

TEST_SUITE("balance") {

TEST_CASE("Bipartition basics") {
    CHECK_THROWS_AS(bp({1, 0}), Error);
    CHECK_THROWS_AS(bp({}), Error);
    const auto b = bp({-1, 1, -1});
    CHECK(b.normalized() == bp({1, -1, 1}));
    CHECK(b.equivalent(bp({1, -1, 1})));
    CHECK(b.product(bp({-1, -1, 1})) == bp({1, -1, -1}));
    CHECK(b.indicator() == Eigen::Vector3d(-1, 1, -1));
}

TEST_CASE("classify the worked examples") {
    const auto pos = classify(positive_triangle());
    CHECK(pos.verdict == Verdict::Balanced);
    CHECK(*pos.balanced_partition == bp({1, 1, 1}));

    const auto one_negative = classify(triangle(1, 1, -1));
    CHECK(one_negative.verdict == Verdict::Antibalanced);

    CHECK(classify(four_node_unbalanced()).verdict == Verdict::StrictlyUnbalanced);

    const auto two_negative = classify(triangle(-1, 1, -1));
    CHECK(two_negative.verdict == Verdict::Balanced);
    CHECK(*two_negative.balanced_partition == bp({1, -1, -1}));

    CHECK(classify(build_graph(1, {})).verdict == Verdict::Both);
    CHECK(classify(build_graph(2, {{0, 1, -1}})).verdict == Verdict::Both);
}

TEST_CASE("classify agrees with cycle enumeration") {
    for (const auto& g : corpus()) {
        const auto parity = verify::enumerate_cycles(g);
        const auto c = classify(g);
        CHECK(c.balanced() == parity.balanced);
        CHECK(c.antibalanced() == parity.antibalanced);
        if (c.balanced()) {
            CHECK(satisfies_balance(g, *c.balanced_partition));
            CHECK((*c.balanced_partition)[0] == 1);
        }
        if (c.antibalanced()) CHECK(satisfies_antibalance(g, *c.antibalanced_partition));
    }
}

TEST_CASE("trees are both balanced and antibalanced") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto t = random_signed_tree(1 + seed % 50, 0.5, seed);
        CHECK(classify(t).verdict == Verdict::Both);
    }
}

TEST_CASE("verdict Both only on trees and bipartite graphs") {
    for (const auto& g : corpus()) {
        if (classify(g).verdict != Verdict::Both) continue;
        CHECK((is_tree(g) || two_coloring(g).has_value()));
    }
}

TEST_CASE("negation swaps balance and antibalance") {
    for (const auto& g : corpus()) {
        const auto c = classify(g);
        const auto n = classify(negate(g));
        CHECK(n.balanced() == c.antibalanced());
        CHECK(n.antibalanced() == c.balanced());
        CHECK(negate(negate(g)) == g);
    }
    CHECK(negate(positive_triangle()) == negative_triangle());
    CHECK(classify(negative_triangle()).verdict == Verdict::Antibalanced);
}

TEST_CASE("switching") {
    Rng rng(5);
    for (const auto& g : corpus()) {
        std::vector<int> s(g.node_count());
        for (auto& v : s) v = rng.bernoulli(0.5) ? 1 : -1;
        const Bipartition b(s);
        const auto h = switch_signs(g, b);
        CHECK(classify(h).verdict == classify(g).verdict);
        CHECK(switch_signs(h, b) == g);
        CHECK(h.weights().cwiseAbs() == g.weights().cwiseAbs());
        const auto a = eigendecompose_symmetric(g.weights()).eigenvalues;
        const auto c = eigendecompose_symmetric(h.weights()).eigenvalues;
        CHECK((a - c).cwiseAbs().maxCoeff() < 1e-10);
    }
    const auto bal = triangle(-1, 1, -1);
    CHECK(switch_signs(bal, *classify(bal).balanced_partition) == positive_triangle());
    const auto anti = triangle(1, 1, -1);
    CHECK(switch_signs(anti, *classify(anti).antibalanced_partition) == negative_triangle());
}

TEST_CASE("antibalance certificate from a bipartite colouring") {
    const auto square = cycle({1, 1, 1, 1});
    const auto sa = antibalanced_partition_from_bipartite(square, bp({1, -1, 1, -1}), bp({1, 1, 1, 1}));
    CHECK(sa == bp({1, -1, 1, -1}));
    CHECK(satisfies_antibalance(square, sa));

    const auto dyad = build_graph(2, {{0, 1, -1}});
    const auto sd = antibalanced_partition_from_bipartite(dyad, bp({1, -1}), bp({1, -1}));
    CHECK(sd == bp({1, 1}));
    CHECK(satisfies_antibalance(dyad, sd));

    CHECK_THROWS_WITH_AS((void)antibalanced_partition_from_bipartite(positive_triangle(), bp({1, -1, 1}), bp({1, 1, 1})),
                         doctest::Contains("NotBipartite"), Error);
    CHECK_THROWS_WITH_AS((void)antibalanced_partition_from_bipartite(cycle({1, 1, 1, -1}), bp({1, -1, 1, -1}), bp({1, 1, 1, 1})),
                         doctest::Contains("NotBalanced"), Error);

    for (const auto& g : corpus()) {
        const auto c = classify(g);
        const auto col = two_coloring(g);
        if (!col || !c.balanced()) continue;
        CHECK(satisfies_antibalance(g, antibalanced_partition_from_bipartite(g, *col, *c.balanced_partition)));
    }
}

TEST_CASE("sign-conflicting walks exist exactly for strictly unbalanced graphs") {
    const auto w = sign_conflicting_walk(four_node_unbalanced(), 6);
    REQUIRE(w.has_value());
    CHECK(w->length <= 6);
    CHECK_FALSE(sign_conflicting_walk(triangle(-1, 1, -1), 50).has_value());
    CHECK_FALSE(sign_conflicting_walk(triangle(1, 1, -1), 50).has_value());
    for (const auto& g : corpus()) {
        const bool strict = classify(g).verdict == Verdict::StrictlyUnbalanced;
        CHECK(sign_conflicting_walk(g, 2 * g.node_count()).has_value() == strict);
    }
}

TEST_CASE("frustration examples") {
    const auto bal = frustration(triangle(-1, 1, -1), BalanceTarget::Balanced);
    CHECK(bal.flip_count == 0);
    CHECK(bal.flip_set.empty());
    CHECK(bal.exact);

    const auto g = four_node_unbalanced();
    const auto r = frustration(g, BalanceTarget::Balanced, FrustrationMode::Exact);
    CHECK(r.flip_count == 1);
    CHECK(r.flip_set == std::vector<Edge>{{2, 3, -1}});
    CHECK(r.flipped_weight == 1);
    CHECK(classify(flip_edges(g, r.flip_set)).balanced());

    const auto a = frustration(g, BalanceTarget::Antibalanced, FrustrationMode::Exact);
    CHECK(a.flip_count == oracle::min_flips(g, true));
    CHECK(classify(flip_edges(g, a.flip_set)).antibalanced());
}

TEST_CASE("exact frustration matches a search over edge subsets") {
    std::size_t checked = 0;
    for (const auto& g : corpus()) {
        if (g.edge_count() > 9) continue;
        ++checked;
        for (const auto target : {BalanceTarget::Balanced, BalanceTarget::Antibalanced}) {
            const bool anti = target == BalanceTarget::Antibalanced;
            const auto exact = frustration(g, target, FrustrationMode::Exact);
            CHECK(exact.flip_count == oracle::min_flips(g, anti));
            const auto flipped = classify(flip_edges(g, exact.flip_set));
            CHECK((anti ? flipped.antibalanced() : flipped.balanced()));
            const auto heuristic = frustration(g, target, FrustrationMode::Heuristic);
            CHECK_FALSE(heuristic.exact);
            CHECK(heuristic.flip_count >= exact.flip_count);
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("exact frustration ties go to the lexicographically smallest partition") {
    // Every bipartition of the all-negative triangle leaves at least one
    // violated edge; (+,+,-) is the first optimum in +/- order.
    const auto r = frustration(negative_triangle(), BalanceTarget::Balanced, FrustrationMode::Exact);
    CHECK(r.flip_count == 1);
    CHECK(r.partition == bp({1, 1, -1}));
}

TEST_CASE("exact frustration is capped") {
    const auto big = random_signed_tree(kExactFrustrationMaxNodes + 1, 0.5, 3);
    CHECK_THROWS_WITH_AS((void)frustration(big, BalanceTarget::Balanced, FrustrationMode::Exact),
                         doctest::Contains("TooLarge"), Error);
    CHECK_FALSE(frustration(big, BalanceTarget::Balanced).exact);
    CHECK(frustration(big, BalanceTarget::Balanced).flip_count == 0);
}

TEST_CASE("flip_edges rejects non-edges") {
    const std::vector<Edge> missing = {{0, 3, 1}};
    CHECK_THROWS_WITH_AS((void)flip_edges(four_node_unbalanced(), missing), doctest::Contains("EdgeNotPresent"), Error);
}

}  // TEST_SUITE
