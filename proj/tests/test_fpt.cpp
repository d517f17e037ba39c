#include "doctest.h"

#include "egal/corpus.hpp"
#include "egal/fpt.hpp"
#include "egal/oracle.hpp"

#include "support.hpp"

#include <algorithm>
#include <set>

using namespace egal;
using namespace egal::testsupport;

namespace {

std::set<std::vector<Rational>> reference_pareto_profiles(const Instance& inst) {
    std::set<std::vector<Rational>> profiles;
    for (const auto& [matching, profile] : pareto_enumerate(inst)) profiles.insert(profile);
    return profiles;
}

}  // namespace

TEST_CASE("rank table") {
    Instance inst = counterexample_3x3(1);
    RankTable table = rank_table(inst);
    CHECK(table.r[0] == std::vector<int>{3, 2, 1});
    CHECK(table.r[1] == std::vector<int>{3, 3, 1});  // ties share a rank
    CHECK(table.r[2] == std::vector<int>{2, 3, 1});

    RankTable equalRow = rank_table(make_instance(1, {{4, 4, 4}}));
    CHECK(equalRow.r[0] == std::vector<int>{3, 3, 3});
}

TEST_CASE("pi-optimal matchings on the counterexample") {
    Instance inst = counterexample_3x3(1);
    CHECK(pi_optimal_matching(inst, Permutation({1, 2, 3})).assign == std::vector<int>{0, 1, 2});
    // agent 3 first: it takes its favorite good g2
    Matching prioritized = pi_optimal_matching(inst, Permutation({3, 2, 1}));
    CHECK(prioritized(2) == 1);
    CHECK(prioritized.assign == std::vector<int>{2, 0, 1});

    Instance solo = make_instance(1, {{2, 9, 4}});
    CHECK(pi_optimal_matching(solo, Permutation({1}))(0) == 1);
}

TEST_CASE("pi-optimal matchings are Pareto optimal") {
    DeterministicRng rng(131);
    for (int trial = 0; trial < 25; ++trial) {
        int n = static_cast<int>(rng.range(1, 3));
        int m = n + static_cast<int>(rng.range(0, 2));
        Instance inst = random_instance(rng, n, m, 1, 5);
        Instance padded = pad_goods(inst);
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i + 1;
        for (int shuffle = n - 1; shuffle > 0; --shuffle)
            std::swap(order[shuffle], order[static_cast<int>(rng.range(0, shuffle))]);
        Matching matching = pi_optimal_matching(inst, Permutation(order));
        for (const auto& other : all_matchings(padded.n, padded.m, 100000))
            CHECK(pareto_dominates(padded, other, matching) != Dominance::Strong);
    }
}

TEST_CASE("profile enumeration basics") {
    auto solo = pareto_optimal_profiles(make_instance(1, {{2, 9, 4}}));
    REQUIRE(solo.size() == 1);
    CHECK(solo[0] == std::vector<Rational>{9});

    auto unique = pareto_optimal_profiles(make_instance(1, {{2, 1}, {1, 2}}));
    REQUIRE(unique.size() == 1);
    CHECK(unique[0] == std::vector<Rational>{2, 2});
}

TEST_CASE("profile characterization matches brute force") {
    Instance inst = counterexample_3x3(1);
    auto viaPermutations = pareto_optimal_profiles(inst);
    std::set<std::vector<Rational>> lhs(viaPermutations.begin(), viaPermutations.end());
    CHECK(lhs == reference_pareto_profiles(inst));

    DeterministicRng rng(137);
    for (int trial = 0; trial < 40; ++trial) {
        Instance random = random_instance(rng, 3, 3, 1, 5);
        auto profiles = pareto_optimal_profiles(random);
        std::set<std::vector<Rational>> mine(profiles.begin(), profiles.end());
        CHECK(mine == reference_pareto_profiles(random));
    }
}

TEST_CASE("fpt limit is enforced") {
    DeterministicRng rng(139);
    Instance big = random_instance(rng, 4, 4, 1, 3);
    CHECK_THROWS_AS(pareto_optimal_profiles(big, 3), FptLimitExceeded);
    CHECK_THROWS_AS(fpt_optimal(big, 3), FptLimitExceeded);
}

TEST_CASE("fpt optimum on the counterexample") {
    FptResult result = fpt_optimal_result(counterexample_3x3(2));
    CHECK(result.bottleneck == 6);
    REQUIRE(result.sequence.length() == 2);
    CHECK(evaluate(pad_goods(counterexample_3x3(2)), result.sequence).final_bottleneck() == 6);

    FptResult single = fpt_optimal_result(counterexample_3x3(1));
    CHECK(single.bottleneck == 2);
}

TEST_CASE("fpt scales to long horizons") {
    Instance inst = counterexample_3x3(1);
    inst.rounds = 1000;
    FptResult result = fpt_optimal_result(inst);
    CHECK(result.bottleneck == 3000);  // T * b*, the fractional bound, is reachable here
    CHECK(result.sequence.length() == 1000);
}

TEST_CASE("fpt equals the oracle on random instances") {
    DeterministicRng rng(149);
    for (int trial = 0; trial < 25; ++trial) {
        int n = static_cast<int>(rng.range(1, 3));
        int m = n + static_cast<int>(rng.range(0, 1));
        int T = static_cast<int>(rng.range(1, 3));
        Instance inst = random_instance(rng, n, m, T, 9);
        FptResult result = fpt_optimal_result(inst);
        CHECK(result.bottleneck == brute_opt(inst, T));

        // program solution is a feasible schedule achieving its objective
        Int copies = 0;
        for (const Int& c : result.copies) {
            CHECK(c >= 0);
            copies += c;
        }
        CHECK(copies == T);
        REQUIRE(result.sequence.length() == T);
        CHECK(evaluate(pad_goods(inst), result.sequence).final_bottleneck() == result.bottleneck);
    }
}
