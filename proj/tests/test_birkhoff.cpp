#include "doctest.h"

#include "egal/birkhoff.hpp"
#include "egal/core.hpp"
#include "egal/corpus.hpp"

#include "support.hpp"

#include <stdexcept>

using namespace egal;
using namespace egal::testsupport;

namespace {

Allocation alloc_from(std::vector<std::vector<int>> counts) {
    Allocation alloc(static_cast<int>(counts.size()), static_cast<int>(counts[0].size()));
    for (std::size_t i = 0; i < counts.size(); ++i)
        for (std::size_t j = 0; j < counts[i].size(); ++j) alloc.counts[i][j] = counts[i][j];
    return alloc;
}

void check_reconstruction(const std::vector<std::vector<Rational>>& matrix,
                          const BirkhoffDecomposition& decomposition) {
    const int size = static_cast<int>(matrix.size());
    std::vector<std::vector<Rational>> sum(size, std::vector<Rational>(size, Rational(0)));
    for (const auto& term : decomposition.terms)
        for (int i = 0; i < size; ++i) sum[i][term.matching(i)] += term.coefficient;
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) CHECK(sum[i][j] == matrix[i][j]);
}

// Random scaled integer bistochastic matrix as a sum of random permutations.
ScaledBistochastic random_scaled(DeterministicRng& rng, int size, int scaleTarget) {
    std::vector<std::vector<Int>> entries(size, std::vector<Int>(size, 0));
    std::vector<int> perm(size);
    for (int s = 0; s < scaleTarget; ++s) {
        for (int i = 0; i < size; ++i) perm[i] = i;
        for (int i = size - 1; i > 0; --i)
            std::swap(perm[i], perm[static_cast<int>(rng.range(0, i))]);
        for (int i = 0; i < size; ++i) ++entries[i][perm[i]];
    }
    return ScaledBistochastic::checked(std::move(entries), scaleTarget);
}

}  // namespace

TEST_CASE("completion fills deficits deterministically") {
    CHECK(complete_to_bistochastic(alloc_from({{2, 0}, {0, 2}}), 2).entries ==
          std::vector<std::vector<Int>>{{2, 0}, {0, 2}});

    ScaledBistochastic fromDiagonal = complete_to_bistochastic(alloc_from({{1, 0}, {0, 1}}), 2);
    CHECK(fromDiagonal.entries == std::vector<std::vector<Int>>{{2, 0}, {0, 2}});

    ScaledBistochastic padded = complete_to_bistochastic(alloc_from({{1, 0}}), 1);
    CHECK(padded.size == 2);
    CHECK(padded.entries == std::vector<std::vector<Int>>{{1, 0}, {0, 1}});
}

TEST_CASE("completion rejects oversized rows and columns") {
    CHECK_THROWS_WITH_AS(complete_to_bistochastic(alloc_from({{3, 0}, {0, 1}}), 2),
                         "allocation row 0 exceeds the scale", std::invalid_argument);
    CHECK_THROWS_WITH_AS(complete_to_bistochastic(alloc_from({{2, 0}, {1, 0}}), 2),
                         "allocation column 0 exceeds the scale", std::invalid_argument);
}

TEST_CASE("completion never decreases an entry") {
    DeterministicRng rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        int n = static_cast<int>(rng.range(1, 4));
        int m = n + static_cast<int>(rng.range(0, 2));
        int T = static_cast<int>(rng.range(1, 5));
        Allocation alloc = random_feasible_allocation(rng, n, m, T);
        ScaledBistochastic completed = complete_to_bistochastic(alloc, T);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) CHECK(completed.entries[i][j] >= alloc.counts[i][j]);
    }
}

TEST_CASE("decomposition of permutation and uniform matrices") {
    ScaledBistochastic identity =
        ScaledBistochastic::checked({{5, 0, 0}, {0, 5, 0}, {0, 0, 5}}, 5);
    BirkhoffDecomposition single = decompose(identity);
    REQUIRE(single.term_count() == 1);
    CHECK(single.terms[0].coefficient == 5);
    CHECK(single.terms[0].matching.assign == std::vector<int>{0, 1, 2});

    BirkhoffDecomposition pair = decompose(ScaledBistochastic::checked({{1, 1}, {1, 1}}, 2));
    REQUIRE(pair.term_count() == 2);
    CHECK(pair.terms[0].coefficient == 1);
    CHECK(pair.terms[1].coefficient == 1);
    CHECK(pair.terms[0].matching.assign == std::vector<int>{0, 1});
    CHECK(pair.terms[1].matching.assign == std::vector<int>{1, 0});

    std::vector<std::vector<Rational>> uniform(3, std::vector<Rational>(3, Rational(1, 3)));
    BirkhoffDecomposition thirds = decompose(FractionalBistochastic::checked(uniform));
    REQUIRE(thirds.term_count() == 3);
    for (const auto& term : thirds.terms) CHECK(term.coefficient == Rational(1, 3));
    check_reconstruction(uniform, thirds);
    CHECK(thirds.coefficient_sum() == 1);
}

TEST_CASE("invalid bistochastic inputs are rejected") {
    CHECK_THROWS_AS(ScaledBistochastic::checked({{1, 0}, {0, 2}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(ScaledBistochastic::checked({{2, 0}, {2, 0}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(FractionalBistochastic::checked({{Rational(1, 2), Rational(1, 4)},
                                                     {Rational(1, 2), Rational(3, 4)}}),
                    std::invalid_argument);
}

TEST_CASE("random scaled decompositions reconstruct with integer coefficients") {
    DeterministicRng rng(67);
    for (int trial = 0; trial < 60; ++trial) {
        int size = static_cast<int>(rng.range(1, 6));
        int scale = static_cast<int>(rng.range(1, 12));
        ScaledBistochastic matrix = random_scaled(rng, size, scale);
        BirkhoffDecomposition decomposition = decompose(matrix);
        CHECK(decomposition.term_count() <= size * size - size + 1);
        Rational total = 0;
        std::vector<std::vector<Rational>> asRational(size, std::vector<Rational>(size));
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) asRational[i][j] = Rational(matrix.entries[i][j]);
        for (const auto& term : decomposition.terms) {
            CHECK(is_integer(term.coefficient));
            CHECK(term.coefficient > 0);
            total += term.coefficient;
        }
        CHECK(total == matrix.scale);
        check_reconstruction(asRational, decomposition);
    }
}

TEST_CASE("allocation_to_sequence repeats a full allocation verbatim") {
    Allocation alloc = alloc_from({{3, 0}, {0, 3}});
    MatchingSequence seq = allocation_to_sequence(alloc, 3);
    REQUIRE(seq.length() == 3);
    for (const auto& round : seq.rounds) CHECK(round.assign == std::vector<int>{0, 1});
}

TEST_CASE("allocation_to_sequence reaches the binary optimum") {
    Instance inst = make_instance(2, {{1, 0}, {1, 1}});
    MatchingSequence seq = allocation_to_sequence(alloc_from({{2, 0}, {0, 2}}), 2);
    ValueTrajectory traj = evaluate(inst, seq);
    CHECK(traj.final_value(0) == 2);
    CHECK(traj.final_value(1) == 2);
}

TEST_CASE("allocation_to_sequence rebuilds the counterexample optimum") {
    Instance inst = counterexample_3x3(2);
    MatchingSequence optimal = sequence({{0, 1, 2}, {2, 0, 1}});
    Allocation alloc = allocation_of(inst, optimal);
    MatchingSequence rebuilt = allocation_to_sequence(alloc, 2);
    CHECK(evaluate(inst, rebuilt).final_bottleneck() == 6);
}

TEST_CASE("value preservation on random feasible allocations") {
    DeterministicRng rng(71);
    for (int trial = 0; trial < 60; ++trial) {
        int n = static_cast<int>(rng.range(1, 4));
        int m = n + static_cast<int>(rng.range(0, 2));
        int T = static_cast<int>(rng.range(1, 5));
        Instance inst = random_instance(rng, n, m, T, 9);
        Allocation alloc = random_feasible_allocation(rng, n, m, T);
        MatchingSequence seq = allocation_to_sequence(alloc, T);
        REQUIRE(seq.length() == T);
        ValueTrajectory traj = evaluate(inst, seq);
        for (int i = 0; i < n; ++i) CHECK(traj.final_value(i) >= allocation_value(inst, alloc, i));
    }
}
