#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fixtures.hpp"
#include "signbal/edge_list.hpp"
#include "signbal/error.hpp"
#include "signbal/generate.hpp"
#include "signbal/spectral.hpp"

using namespace signbal;

namespace {

std::string dump(const SignedGraph& g) {
    std::ostringstream out;
    write_edge_list(out, g, {});
    return out.str();
}

SSBMParams draw(double eta, std::uint64_t seed) {
    SSBMParams p;
    p.eta = eta;
    p.seed = seed;
    return p;
}

LatticeParams lattice(SignPlan plan, std::size_t n = 40, std::size_t dbar = 4) {
    LatticeParams p;
    p.n = n;
    p.dbar = dbar;
    p.plan = plan;
    return p;
}

}  // namespace

TEST_SUITE("generate") {

TEST_CASE("Rng is reproducible and in range") {
    Rng a(3);
    Rng b(3);
    for (int k = 0; k < 1000; ++k) {
        const double u = a.uniform();
        CHECK(u == b.uniform());
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const auto v = a.below(7);
        CHECK(v == b.below(7));
        CHECK(v < 7);
    }
}

TEST_CASE("ssbm with the experimental configuration") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const auto p = draw(0.0, seed);
        const auto g = ssbm(p);
        CHECK(g.node_count() == 16);
        for (const auto& e : g.edges()) CHECK(std::abs(e.w) == 0.1);
        const auto c = classify(g);
        CHECK(c.verdict == Verdict::Balanced);
        CHECK(c.balanced_partition->equivalent(planted_partition(p)));
        CHECK(classify(ssbm(draw(1.0, seed))).verdict == Verdict::Antibalanced);
    }
}

TEST_CASE("ssbm is deterministic under the seed") {
    for (const double eta : {0.0, 0.3, 1.0}) {
        CHECK(dump(ssbm(draw(eta, 12))) == dump(ssbm(draw(eta, 12))));
        CHECK(dump(ssbm(draw(eta, 12))) != dump(ssbm(draw(eta, 13))));
    }
}

TEST_CASE("eta and 1 - eta are dual under negation") {
    int anti = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        // The flip draw is taken for every realized edge, so the streams line up exactly.
        CHECK(dump(negate(ssbm(draw(0.0, seed)))) == dump(ssbm(draw(1.0, seed))));
        if (classify(negate(ssbm(draw(0.0, seed)))).verdict == Verdict::Antibalanced) ++anti;
    }
    CHECK(anti == 100);
}

TEST_CASE("ssbm edge densities") {
    SSBMParams p;
    p.n1 = 50;
    p.n2 = 50;
    p.p_in = 0.3;
    p.p_out = 0.05;
    double within = 0;
    double across = 0;
    const int draws = 200;
    for (int k = 0; k < draws; ++k) {
        p.seed = 1000 + static_cast<std::uint64_t>(k);
        const auto g = ssbm(p);
        for (const auto& e : g.edges()) ((e.i < 50) == (e.j < 50) ? within : across) += 1;
    }
    const double n_in = draws * 2.0 * (50 * 49 / 2);
    const double n_out = draws * 50.0 * 50.0;
    const double se_in = std::sqrt(p.p_in * (1 - p.p_in) / n_in);
    const double se_out = std::sqrt(p.p_out * (1 - p.p_out) / n_out);
    CHECK(std::abs(within / n_in - p.p_in) < 3 * se_in);
    CHECK(std::abs(across / n_out - p.p_out) < 3 * se_out);
}

TEST_CASE("ssbm parameter errors") {
    SSBMParams p;
    p.p_in = 1.5;
    CHECK_THROWS_WITH_AS((void)ssbm(p), doctest::Contains("ParamOutOfRange"), Error);
    p = SSBMParams{};
    p.eta = -0.1;
    CHECK_THROWS_WITH_AS((void)ssbm(p), doctest::Contains("ParamOutOfRange"), Error);
    p = SSBMParams{};
    p.alpha = 0;
    CHECK_THROWS_WITH_AS((void)ssbm(p), doctest::Contains("ParamOutOfRange"), Error);
    p = SSBMParams{};
    p.n1 = 1;
    p.n2 = 0;
    CHECK_THROWS_WITH_AS((void)ssbm(p), doctest::Contains("ParamOutOfRange"), Error);
    p = SSBMParams{};
    p.p_in = 0;
    p.p_out = 0;
    CHECK_THROWS_WITH_AS((void)ssbm(p), doctest::Contains("GaveUpConnectivity"), Error);
}

TEST_CASE("ring lattice topology and sign plans") {
    using Kind = BipartitionRule::Kind;
    for (const auto rule : {BipartitionRule{Kind::Uniform, 0}, BipartitionRule{Kind::Arc, 0}, BipartitionRule{Kind::Arc, 7},
                            BipartitionRule{Kind::Blocks, 0}, BipartitionRule{Kind::Blocks, 3}}) {
        const auto g = ring_lattice(lattice(BalancedPlan{rule}));
        CHECK(g.edge_count() == 80);
        for (NodeId v = 0; v < 40; ++v) CHECK(g.neighbors(v).size() == 4);
        CHECK(g.find_edge(0, 39).has_value());
        CHECK(g.find_edge(0, 38).has_value());
        CHECK_FALSE(g.find_edge(0, 3).has_value());
        const auto c = classify(g);
        CHECK(c.balanced());
        CHECK(c.balanced_partition->equivalent(rule_partition(rule, 40)));
        CHECK(classify(ring_lattice(lattice(AntibalancedPlan{rule}))).verdict == Verdict::Antibalanced);
    }
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto g = ring_lattice(lattice(FlipKPlan{{}, 1, seed}));
        CHECK(classify(g).verdict == Verdict::StrictlyUnbalanced);
        CHECK(g.negative_edge_count() == 1);
    }
    const auto five = ring_lattice(lattice(FlipKPlan{{}, 5, 4}));
    CHECK(five.negative_edge_count() == 5);
    CHECK(dump(five) == dump(ring_lattice(lattice(FlipKPlan{{}, 5, 4}))));

    CHECK_THROWS_WITH_AS((void)ring_lattice(lattice(BalancedPlan{}, 10, 3)), doctest::Contains("ParamOutOfRange"), Error);
    CHECK_THROWS_WITH_AS((void)ring_lattice(lattice(BalancedPlan{}, 4, 4)), doctest::Contains("ParamOutOfRange"), Error);
    CHECK_THROWS_WITH_AS((void)ring_lattice(lattice(FlipKPlan{{}, 81, 1})), doctest::Contains("ParamOutOfRange"), Error);
}

TEST_CASE("rule partitions") {
    using Kind = BipartitionRule::Kind;
    CHECK(rule_partition({Kind::Uniform, 0}, 4) == Bipartition({1, 1, 1, 1}));
    CHECK(rule_partition({Kind::Arc, 0}, 4) == Bipartition({1, 1, -1, -1}));
    CHECK(rule_partition({Kind::Arc, 1}, 4) == Bipartition({1, -1, -1, -1}));
    CHECK(rule_partition({Kind::Blocks, 0}, 4) == Bipartition({1, -1, 1, -1}));
    CHECK(rule_partition({Kind::Blocks, 2}, 6) == Bipartition({1, 1, -1, -1, 1, 1}));
}

TEST_CASE("signed trees are both balanced and antibalanced") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const auto t = random_signed_tree(1 + seed, 0.5, seed);
        CHECK(t.edge_count() == seed);
        CHECK(classify(t).verdict == Verdict::Both);
    }
    CHECK(random_signed_tree(1, 0.5, 1).edge_count() == 0);
    const auto positive = random_signed_tree(15, 0.0, 3);
    CHECK(positive.negative_edge_count() == 0);
    const auto m = strict_unbalance_contraction(positive);
    CHECK(std::abs(m.d_b) < 1e-12);
    CHECK(std::abs(m.d_a) < 1e-12);
    CHECK_THROWS_WITH_AS((void)random_signed_tree(0, 0.5, 1), doctest::Contains("ParamOutOfRange"), Error);
    CHECK_THROWS_WITH_AS((void)random_signed_tree(5, 2.0, 1), doctest::Contains("ParamOutOfRange"), Error);
}

}  // TEST_SUITE
