#include <algorithm>
#include <random>

#include "doctest.h"

#include "cnaf/enumerate.hpp"
#include "cnaf/errors.hpp"
#include "cnaf/oracle.hpp"
#include "cnaf/reduction.hpp"
#include "cnaf/translate.hpp"

using namespace cnaf;

namespace {

JointAf random_joint(std::mt19937_64& rng, std::size_t max_args,
                     std::size_t max_group) {
    JointAf jaf;
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_args)(rng);
    for (std::size_t i = 0; i < n; ++i)
        jaf.arguments.push_back("a" + std::to_string(i));
    std::size_t attacks = std::uniform_int_distribution<std::size_t>(0, n + 1)(rng);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < attacks; ++k) {
        JointAttack a;
        std::size_t gs = std::uniform_int_distribution<std::size_t>(
            1, std::min(max_group, n))(rng);
        for (std::size_t j = 0; j < gs; ++j)
            a.group.push_back(jaf.arguments[pick(rng)]);
        std::sort(a.group.begin(), a.group.end());
        a.group.erase(std::unique(a.group.begin(), a.group.end()), a.group.end());
        a.target = jaf.arguments[pick(rng)];
        jaf.attacks.push_back(std::move(a));
    }
    return jaf;
}

std::vector<Labelling> sorted_unique(std::vector<Labelling> ls) {
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    return ls;
}

} // namespace

TEST_CASE("joint_to_single: pair group structure") {
    JointAf jaf{{"a", "b", "x"}, {{{"a", "b"}, "x"}}};
    ReductionResult r = joint_to_single(jaf);

    std::vector<std::string> expected_args = {
        "a", "b", "x", "x__G1", "e__x__G1__a", "e__x__G1__b"};
    CHECK(r.framework.arguments == expected_args);
    CHECK(r.embedded == jaf.arguments);

    std::vector<std::pair<std::string, std::string>> expected_attacks = {
        {"a", "e__x__G1__a"}, {"e__x__G1__a", "x__G1"},
        {"b", "e__x__G1__b"}, {"e__x__G1__b", "x__G1"},
        {"x__G1", "x"}};
    CHECK(r.framework.attacks == expected_attacks);

    CHECK(r.naming.at("x__G1").kind == "group");
    CHECK(r.naming.at("x__G1").group == std::vector<std::string>{"a", "b"});
    CHECK(r.naming.at("e__x__G1__a").kind == "edge");
    CHECK(r.naming.at("e__x__G1__a").member == "a");
    CHECK(validate(r.framework).empty());
}

TEST_CASE("joint_to_single: no attacks is the identity") {
    JointAf jaf{{"p", "q"}, {}};
    ReductionResult r = joint_to_single(jaf);
    CHECK(r.framework.arguments == jaf.arguments);
    CHECK(r.framework.attacks.empty());
    CHECK(r.naming.empty());
}

TEST_CASE("joint_to_single: deterministic and collision-free naming") {
    std::mt19937_64 rng(73);
    for (int i = 0; i < 30; ++i) {
        JointAf jaf = random_joint(rng, 4, 3);
        ReductionResult r1 = joint_to_single(jaf);
        ReductionResult r2 = joint_to_single(jaf);
        CHECK(r1.framework.arguments == r2.framework.arguments);
        CHECK(r1.framework.attacks == r2.framework.attacks);
        std::set<std::string> names(r1.framework.arguments.begin(),
                                    r1.framework.arguments.end());
        CHECK(names.size() == r1.framework.arguments.size());
    }
}

TEST_CASE("joint_to_single: restrictions are exactly the joint labellings") {
    std::mt19937_64 rng(79);
    OracleOptions big;
    big.max_args = 40;
    for (int i = 0; i < 40; ++i) {
        JointAf jaf = random_joint(rng, 4, 3);
        ReductionResult r = joint_to_single(jaf);
        auto reduced = complete_labellings(r.framework, big);
        std::vector<Labelling> restricted;
        for (const auto& l : reduced)
            restricted.push_back(restrict_labelling(l, jaf.arguments));
        // Each joint labelling extends uniquely: restriction is injective.
        CHECK(sorted_unique(restricted).size() == restricted.size());
        CHECK(sorted_unique(restricted) == sorted_unique(joint_labellings(jaf)));
    }
}

TEST_CASE("joint_to_single: reduced models satisfy the joint formulas") {
    std::mt19937_64 rng(83);
    for (int i = 0; i < 25; ++i) {
        JointAf jaf = random_joint(rng, 4, 3);
        ReductionResult r = joint_to_single(jaf);
        Theory reduced_theory = delta_af(r.framework);
        Theory joint_theory = delta_joint(jaf);

        OracleOptions big;
        big.max_args = 40;
        for (const auto& l : complete_labellings(r.framework, big)) {
            CnModel m = labelling_to_model(l);
            REQUIRE(is_model(reduced_theory, m));
            for (const auto& f : joint_theory.formulas)
                CHECK(evaluate_cn(f, m));
        }
    }
}

TEST_CASE("joint_to_single: model route and labelling route agree on small instances") {
    std::mt19937_64 rng(89);
    int done = 0;
    while (done < 10) {
        JointAf jaf = random_joint(rng, 3, 2);
        ReductionResult r = joint_to_single(jaf);
        if (r.framework.arguments.size() > 11) continue;
        ++done;
        Theory reduced_theory = delta_af(r.framework);
        std::vector<Labelling> via_models;
        for (const auto& m : enumerate_models(reduced_theory))
            via_models.push_back(model_to_labelling(m));
        OracleOptions big;
        big.max_args = 40;
        CHECK(sorted_unique(via_models) ==
              sorted_unique(complete_labellings(r.framework, big)));
    }
}

TEST_CASE("higher_to_joint: chain of arc attacks") {
    HigherAf haf{{"z", "x", "y", "u", "w"},
                 {{"alpha", "z", "x"},
                  {"beta", "y", "alpha"},
                  {"gamma", "u", "beta"},
                  {"delta", "w", "gamma"}}};
    JointAf jaf = higher_to_joint(haf);
    CHECK(jaf.arguments ==
          std::vector<std::string>{"z", "x", "y", "u", "w", "alpha", "beta",
                                   "gamma", "delta"});
    REQUIRE(jaf.attacks.size() == 4);
    CHECK(jaf.attacks[0].group == std::vector<std::string>{"z", "alpha"});
    CHECK(jaf.attacks[0].target == "x");
    CHECK(jaf.attacks[1].group == std::vector<std::string>{"y", "beta"});
    CHECK(jaf.attacks[1].target == "alpha");
    CHECK(jaf.attacks[3].group == std::vector<std::string>{"w", "delta"});
    CHECK(jaf.attacks[3].target == "gamma");
    CHECK(validate(jaf).empty());

    // Full pipeline: unattacked sources win, the arc chain alternates, and
    // x survives because alpha is defeated.
    auto ls = joint_labellings(jaf);
    REQUIRE(ls.size() == 1);
    Labelling restricted = restrict_labelling(ls[0], haf.arguments);
    for (const auto& [arg, l] : restricted.labels) CHECK(l == Label::In);
}

TEST_CASE("higher_to_joint: single plain arc still becomes a pair group") {
    HigherAf haf{{"z", "x"}, {{"id1", "z", "x"}}};
    JointAf jaf = higher_to_joint(haf);
    REQUIRE(jaf.attacks.size() == 1);
    CHECK(jaf.attacks[0].group == std::vector<std::string>{"z", "id1"});
    CHECK(jaf.attacks[0].target == "x");
}

TEST_CASE("higher pipeline matches the direct formulas on an attacked arc") {
    HigherAf haf{{"z", "x", "y"}, {{"al", "z", "x"}, {"be", "y", "al"}}};

    std::vector<Labelling> via_direct;
    for (const auto& m : enumerate_models(delta_higher_direct(haf)))
        via_direct.push_back(model_to_labelling(m));

    JointAf reduced = higher_to_joint(haf);
    std::vector<Labelling> via_reduction;
    for (const auto& l : joint_labellings(reduced))
        via_reduction.push_back(restrict_labelling(l, haf.arguments));

    CHECK(sorted_unique(via_direct) == sorted_unique(via_reduction));
}

TEST_CASE("restrict_labelling") {
    Labelling l;
    l.labels = {{"x", Label::In}, {"x__G1", Label::Out}};
    Labelling r = restrict_labelling(l, {"x"});
    CHECK(r.labels.size() == 1);
    CHECK(r.at("x") == Label::In);

    CHECK(restrict_labelling(l, {"x", "x__G1"}) == l);
    CHECK_THROWS_AS(restrict_labelling(l, {"ghost"}), DomainError);
}
