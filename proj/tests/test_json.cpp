#include <doctest.h>

#include "fixtures.hpp"
#include "signbal/error.hpp"
#include "signbal/json.hpp"

using namespace signbal;
using namespace fixtures;
using nlohmann::json;

TEST_SUITE("json") {

TEST_CASE("classification shape") {
    const json j = classify(negative_triangle());
    CHECK(j["verdict"] == "Antibalanced");
    CHECK(j["balanced"] == false);
    CHECK(j["antibalanced"] == true);
    CHECK(j["balanced_partition"].is_null());
    CHECK(j["antibalanced_partition"] == json::array({1, 1, 1}));
    CHECK(json(classify(random_signed_tree(4, 0.5, 2)))["verdict"] == "Both");
}

TEST_CASE("frustration and measures") {
    const json f = frustration(four_node_unbalanced(), BalanceTarget::Balanced);
    CHECK(f["target"] == "Balanced");
    CHECK(f["flip_count"] == 1);
    CHECK(f["exact"] == true);
    CHECK(f["flip_set"].size() == 1);
    CHECK(f["flip_set"][0].size() == 3);
    const json m = strict_unbalance_contraction(positive_triangle());
    for (const char* key : {"d_b", "d_a", "rho_signed", "rho_unsigned", "contraction"}) CHECK(m.contains(key));
}

TEST_CASE("stationary prediction and activation sets") {
    StationaryPrediction p;
    p.kind = StationaryPrediction::Kind::AlternatingPair;
    p.vectors = {Eigen::Vector2d(1, -1), Eigen::Vector2d(-1, 1)};
    const json j = p;
    CHECK(j["odd"] == json::array({1.0, -1.0}));
    CHECK(j["even"] == json::array({-1.0, 1.0}));

    ActivationSets a;
    a.positive = {{0}, {0, 1}};
    a.negative = {{}, {2}};
    const json aj = a;
    REQUIRE(aj.size() == 2);
    CHECK(aj[1]["t"] == 1);
    CHECK(aj[1]["positive"] == json::array({0, 1}));
    CHECK(aj[1]["negative"] == json::array({2}));
}

TEST_CASE("parameter records round-trip") {
    SSBMParams s;
    s.n1 = 3;
    s.eta = 0.25;
    s.seed = 99;
    CHECK(json(s).get<SSBMParams>() == s);

    for (const SignPlan plan : {SignPlan{BalancedPlan{{BipartitionRule::Kind::Arc, 5}}},
                                SignPlan{AntibalancedPlan{{BipartitionRule::Kind::Blocks, 2}}},
                                SignPlan{FlipKPlan{{BipartitionRule::Kind::Uniform, 0}, 3, 17}}}) {
        LatticeParams l;
        l.n = 24;
        l.plan = plan;
        CHECK(json(l).get<LatticeParams>() == l);
    }

    ELTConfig e;
    e.theta_l = 1.5;
    e.horizon = 2;
    e.general_thresholds = DenseMatrix::Constant(3, 3, 0.5);
    const auto back = json(e).get<ELTConfig>();
    CHECK(back.theta_l == 1.5);
    CHECK(back.horizon == 2);
    REQUIRE(back.general_thresholds.has_value());
    CHECK(*back.general_thresholds == *e.general_thresholds);
}

TEST_CASE("missing keys keep defaults") {
    const auto s = json{{"eta", 0.5}}.get<SSBMParams>();
    CHECK(s.eta == 0.5);
    CHECK(s.n1 == 6);
    CHECK(s.p_in == 0.8);
    const auto l = json::object().get<LatticeParams>();
    CHECK(l == LatticeParams{});
}

TEST_CASE("unknown keys and wrong types are rejected") {
    const json typo = {{"etaa", 0.5}};
    const json wrong_type = {{"n1", "six"}};
    const json bad_plan = {{"plan", {{"kind", "zigzag"}}}};
    const json ragged = {{"thresholds", {{1, 2}, {1}}}};
    const json mixed = {1, "x"};
    CHECK_THROWS_WITH_AS((void)typo.get<SSBMParams>(), doctest::Contains("InvalidConfig"), Error);
    CHECK_THROWS_WITH_AS((void)wrong_type.get<SSBMParams>(), doctest::Contains("InvalidConfig"), Error);
    CHECK_THROWS_WITH_AS((void)json::array().get<SSBMParams>(), doctest::Contains("InvalidConfig"), Error);
    CHECK_THROWS_WITH_AS((void)bad_plan.get<LatticeParams>(), doctest::Contains("InvalidConfig"), Error);
    CHECK_THROWS_WITH_AS((void)ragged.get<ELTConfig>(), doctest::Contains("InvalidConfig"), Error);
    CHECK_THROWS_WITH_AS((void)vector_from_json(mixed), doctest::Contains("InvalidConfig"), Error);
}

}  // TEST_SUITE
