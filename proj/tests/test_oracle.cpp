#include "doctest.h"

#include "egal/core.hpp"
#include "egal/corpus.hpp"
#include "egal/oracle.hpp"

#include "support.hpp"

#include <algorithm>

using namespace egal;
using namespace egal::testsupport;

namespace {

// Plain recursive enumeration of every sequence, no merging or pruning.
// Slow but obviously correct; the reference the real oracle is held to.
Rational naive_opt(const Instance& raw, int t) {
    Instance inst = pad_goods(raw);
    auto matchings = all_matchings(inst.n, inst.m, 100000);
    std::vector<Rational> totals(inst.n, Rational(0));
    Rational best = -1;
    auto recurse = [&](auto&& self, int round) -> void {
        if (round == t) {
            Rational low = totals[0];
            for (const auto& v : totals) low = std::min(low, v);
            best = std::max(best, low);
            return;
        }
        for (const auto& matching : matchings) {
            for (int i = 0; i < inst.n; ++i) totals[i] += inst.value(i, matching(i));
            self(self, round + 1);
            for (int i = 0; i < inst.n; ++i) totals[i] -= inst.value(i, matching(i));
        }
    };
    recurse(recurse, 0);
    return best;
}

}  // namespace

TEST_CASE("oracle reproduces the counterexample optima") {
    Instance inst = counterexample_3x3(2);
    CHECK(brute_opt(inst, 1) == 2);
    CHECK(brute_opt(inst, 2) == 6);
}

TEST_CASE("oracle round one equals the best single matching") {
    DeterministicRng rng(83);
    for (int trial = 0; trial < 20; ++trial) {
        int n = static_cast<int>(rng.range(1, 3));
        int m = n + static_cast<int>(rng.range(0, 2));
        Instance inst = random_instance(rng, n, m, 1, 9);
        Rational best = -1;
        for (const auto& matching : all_matchings(n, std::max(n, m), 100000)) {
            Instance padded = pad_goods(inst);
            Rational low = padded.value(0, matching(0));
            for (int i = 1; i < n; ++i) low = std::min(low, padded.value(i, matching(i)));
            best = std::max(best, low);
        }
        CHECK(brute_opt(inst, 1) == best);
    }
}

TEST_CASE("oracle agrees with naive enumeration") {
    CHECK(brute_opt(make_instance(2, {{1, 0}, {1, 1}}), 2) == 2);
    DeterministicRng rng(89);
    for (int trial = 0; trial < 15; ++trial) {
        int n = static_cast<int>(rng.range(1, 3));
        int m = n + static_cast<int>(rng.range(0, 1));
        int t = static_cast<int>(rng.range(1, 3));
        Instance inst = random_instance(rng, n, m, t, 7);
        CHECK(brute_opt(inst, t) == naive_opt(inst, t));
    }
}

TEST_CASE("oracle optima never decrease with the horizon") {
    DeterministicRng rng(97);
    for (int trial = 0; trial < 10; ++trial) {
        Instance inst = random_instance(rng, 3, 3, 4, 9);
        auto profile = brute_opt_profile(inst, 4);
        for (int t = 1; t < 4; ++t) CHECK(profile[t] >= profile[t - 1]);
    }
}

TEST_CASE("optimal witness sequence reaches the optimum") {
    DeterministicRng rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        int t = static_cast<int>(rng.range(1, 3));
        Instance inst = random_instance(rng, 3, 3, t, 9);
        MatchingSequence seq = brute_optimal_sequence(inst, t);
        REQUIRE(seq.length() == t);
        CHECK(evaluate(pad_goods(inst), seq).final_bottleneck() == brute_opt(inst, t));
    }
}

TEST_CASE("anytime existence on the counterexample") {
    Instance inst = counterexample_3x3(2);
    CHECK(!anytime_exists(inst, 2).exists);
    CHECK(anytime_exists(inst, 1).exists);
}

TEST_CASE("anytime sequences always exist for two agents") {
    DeterministicRng rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        int m = static_cast<int>(rng.range(2, 3));
        int T = static_cast<int>(rng.range(1, 4));
        Instance inst = random_instance(rng, 2, m, T, 9);
        AnytimeWitness result = anytime_exists(inst, T);
        CHECK(result.exists);
        // the witness revalidates against per-round optima
        auto opts = brute_opt_profile(inst, T);
        ValueTrajectory traj = evaluate(pad_goods(inst), result.witness);
        for (int t = 0; t < T; ++t) CHECK(traj.bottleneckPerRound[t] == opts[t]);
    }
}

TEST_CASE("anytime existence is prefix-closed") {
    DeterministicRng rng(107);
    for (int trial = 0; trial < 15; ++trial) {
        Instance inst = random_instance(rng, 3, 3, 3, 5);
        bool previous = true;
        for (int t = 1; t <= 3; ++t) {
            bool now = anytime_exists(inst, t).exists;
            if (!previous) CHECK(!now);
            previous = now;
        }
    }
}

TEST_CASE("pareto enumeration basics") {
    auto unique = pareto_enumerate(make_instance(1, {{2, 1}, {1, 2}}));
    REQUIRE(unique.size() == 1);
    CHECK(unique[0].first.assign == std::vector<int>{0, 1});

    auto single = pareto_enumerate(make_instance(1, {{3, 1, 3}}));
    REQUIRE(single.size() == 2);
    CHECK(single[0].first.assign == std::vector<int>{0});
    CHECK(single[1].first.assign == std::vector<int>{2});
}

TEST_CASE("pareto enumeration has no dominated survivors") {
    DeterministicRng rng(109);
    for (int trial = 0; trial < 20; ++trial) {
        int n = static_cast<int>(rng.range(1, 3));
        int m = n + static_cast<int>(rng.range(0, 1));
        Instance inst = random_instance(rng, n, m, 1, 4);
        Instance padded = pad_goods(inst);
        auto optimal = pareto_enumerate(inst);
        for (const auto& [matching, profile] : optimal)
            for (const auto& other : all_matchings(padded.n, padded.m, 100000))
                CHECK(pareto_dominates(padded, other, matching) != Dominance::Strong);
    }
}

TEST_CASE("budgets cut off oversized searches") {
    OracleBudget tiny;
    tiny.maxMatchings = 3;
    Instance inst = counterexample_3x3(2);
    CHECK_THROWS_AS(brute_opt(inst, 2, tiny), BudgetExceeded);

    OracleBudget fewStates;
    fewStates.maxStates = 10;
    CHECK_THROWS_AS(brute_opt(inst, 2, fewStates), BudgetExceeded);
}
