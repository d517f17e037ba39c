#include "doctest.h"

#include "egal/corpus.hpp"
#include "egal/lp.hpp"
#include "egal/oracle.hpp"
#include "egal/simplex.hpp"

#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

using namespace egal;
using namespace egal::testsupport;

namespace {

// Solves a square rational system by Gaussian elimination; nullopt when
// singular. Deliberately shares nothing with the simplex implementation.
std::optional<std::vector<Rational>> gauss_solve(std::vector<std::vector<Rational>> a,
                                                 std::vector<Rational> rhs) {
    const int n = static_cast<int>(a.size());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n && pivot < 0; ++r)
            if (a[r][col] != 0) pivot = r;
        if (pivot < 0) return std::nullopt;
        std::swap(a[col], a[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational factor = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            rhs[r] -= factor * rhs[col];
        }
    }
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
    return x;
}

// Independent reference for the egalitarian LP: parameterize bistochastic
// matrices as mixtures over all m! permutation matrices (Birkhoff) and
// maximize min_i mixture value by enumerating the vertices of
//   { (lambda, z) : sum lambda = 1, lambda >= 0, z >= 0, P lambda >= z }.
Rational p1_reference_value(const Instance& inst) {
    auto matchings = all_matchings(inst.n, inst.m, 100000);
    const int K = static_cast<int>(matchings.size());
    std::vector<std::vector<Rational>> profileOf(K, std::vector<Rational>(inst.n));
    for (int k = 0; k < K; ++k)
        for (int i = 0; i < inst.n; ++i) profileOf[k][i] = inst.value(i, matchings[k](i));

    // inequality rows as (coeffs on lambda_1..lambda_K, z) >= 0 forms:
    //   agent i:    sum_k profile[k][i] lambda_k - z >= 0
    //   lambda_k >= 0,   z >= 0
    const int vars = K + 1;
    std::vector<std::vector<Rational>> inequalities;
    for (int i = 0; i < inst.n; ++i) {
        std::vector<Rational> row(vars, Rational(0));
        for (int k = 0; k < K; ++k) row[k] = profileOf[k][i];
        row[K] = -1;
        inequalities.push_back(std::move(row));
    }
    for (int v = 0; v < vars; ++v) {
        std::vector<Rational> row(vars, Rational(0));
        row[v] = 1;
        inequalities.push_back(std::move(row));
    }

    std::vector<Rational> equality(vars, Rational(1));
    equality[K] = 0;

    // choose vars-1 tight inequalities plus the equality, solve, keep the
    // best feasible point
    const int total = static_cast<int>(inequalities.size());
    std::vector<int> chosen(vars - 1);
    Rational best = -1;
    auto combo = [&](auto&& self, int depth, int start) -> void {
        if (depth == vars - 1) {
            std::vector<std::vector<Rational>> system;
            std::vector<Rational> rhs;
            system.push_back(equality);
            rhs.push_back(Rational(1));
            for (int pick : chosen) {
                system.push_back(inequalities[pick]);
                rhs.push_back(Rational(0));
            }
            auto point = gauss_solve(system, rhs);
            if (!point) return;
            for (const auto& row : inequalities) {
                Rational slack = 0;
                for (int v = 0; v < vars; ++v)
                    if (row[v] != 0) slack += row[v] * (*point)[v];
                if (slack < 0) return;
            }
            best = std::max(best, (*point)[K]);
            return;
        }
        for (int pick = start; pick < total; ++pick) {
            chosen[depth] = pick;
            self(self, depth + 1, pick + 1);
        }
    };
    combo(combo, 0, 0);
    return best;
}

LinearProgram simple_lp(int vars) {
    LinearProgram lp;
    lp.variables = vars;
    lp.objective.assign(vars, Rational(0));
    return lp;
}

}  // namespace

TEST_CASE("simplex solves a box LP") {
    LinearProgram lp = simple_lp(2);
    lp.objective = {Rational(1), Rational(1)};
    lp.add_row(RowSense::LessEqual, Rational(2)).coeffs = {Rational(1), Rational(0)};
    lp.add_row(RowSense::LessEqual, Rational(3)).coeffs = {Rational(0), Rational(1)};
    SimplexSolution solution = solve_lp(lp);
    REQUIRE(solution.status == SolveStatus::Optimal);
    CHECK(solution.objective == 5);
    CHECK(solution.x == std::vector<Rational>{2, 3});
}

TEST_CASE("simplex finds interior vertices") {
    // max 3x + 5y st x + y <= 4, x + 3y <= 6 -> (3, 1), value 14
    LinearProgram lp = simple_lp(2);
    lp.objective = {Rational(3), Rational(5)};
    lp.add_row(RowSense::LessEqual, Rational(4)).coeffs = {Rational(1), Rational(1)};
    lp.add_row(RowSense::LessEqual, Rational(6)).coeffs = {Rational(1), Rational(3)};
    SimplexSolution solution = solve_lp(lp);
    REQUIRE(solution.status == SolveStatus::Optimal);
    CHECK(solution.objective == 14);
    CHECK(solution.x == std::vector<Rational>{3, 1});

    // fractional data stays exact: max x st 3x <= 2
    LinearProgram frac = simple_lp(1);
    frac.objective = {Rational(1)};
    frac.add_row(RowSense::LessEqual, Rational(2)).coeffs = {Rational(3)};
    CHECK(solve_lp(frac).objective == Rational(2, 3));
}

TEST_CASE("simplex detects infeasibility and unboundedness") {
    LinearProgram infeasible = simple_lp(1);
    infeasible.objective = {Rational(1)};
    infeasible.add_row(RowSense::GreaterEqual, Rational(2)).coeffs = {Rational(1)};
    infeasible.add_row(RowSense::LessEqual, Rational(1)).coeffs = {Rational(1)};
    CHECK(solve_lp(infeasible).status == SolveStatus::Infeasible);

    LinearProgram unbounded = simple_lp(2);
    unbounded.objective = {Rational(1), Rational(0)};
    unbounded.add_row(RowSense::GreaterEqual, Rational(1)).coeffs = {Rational(1), Rational(0)};
    CHECK(solve_lp(unbounded).status == SolveStatus::Unbounded);
}

TEST_CASE("simplex breaks Beale's cycle") {
    // Beale's example cycles under the largest-coefficient rule; Bland's
    // rule must reach the optimum 1/20 at x = (1/25, 0, 1, 0).
    LinearProgram lp = simple_lp(4);
    lp.objective = {Rational(3, 4), Rational(-150), Rational(1, 50), Rational(-6)};
    lp.add_row(RowSense::LessEqual, Rational(0)).coeffs = {Rational(1, 4), Rational(-60),
                                                           Rational(-1, 25), Rational(9)};
    lp.add_row(RowSense::LessEqual, Rational(0)).coeffs = {Rational(1, 2), Rational(-90),
                                                           Rational(-1, 50), Rational(3)};
    lp.add_row(RowSense::LessEqual, Rational(1)).coeffs = {Rational(0), Rational(0), Rational(1),
                                                           Rational(0)};
    SimplexSolution solution = solve_lp(lp);
    REQUIRE(solution.status == SolveStatus::Optimal);
    CHECK(solution.objective == Rational(1, 20));
    CHECK(solution.x == std::vector<Rational>{Rational(1, 25), 0, 1, 0});
}

TEST_CASE("simplex survives redundant equalities") {
    // x + y = 2 stated twice plus the sum of both
    LinearProgram lp = simple_lp(2);
    lp.objective = {Rational(1), Rational(2)};
    lp.add_row(RowSense::Equal, Rational(2)).coeffs = {Rational(1), Rational(1)};
    lp.add_row(RowSense::Equal, Rational(2)).coeffs = {Rational(1), Rational(1)};
    lp.add_row(RowSense::Equal, Rational(4)).coeffs = {Rational(2), Rational(2)};
    SimplexSolution solution = solve_lp(lp);
    REQUIRE(solution.status == SolveStatus::Optimal);
    CHECK(solution.objective == 4);
    CHECK(solution.x == std::vector<Rational>{0, 2});
}

TEST_CASE("solve_p1 trivial instances") {
    LpSolution one = solve_p1(make_instance(1, {{7}}));
    CHECK(one.b == 7);
    CHECK(one.B.entries[0][0] == 1);

    // identical valuations: optimum is the common value, vertex solution is
    // a permutation matrix
    LpSolution identical = solve_p1(make_instance(1, {{4, 4, 4}, {4, 4, 4}, {4, 4, 4}}));
    CHECK(identical.b == 4);
    for (const auto& row : identical.B.entries)
        for (const auto& entry : row) CHECK((entry == 0 || entry == 1));
}

TEST_CASE("solve_p1 on the counterexample matches vertex enumeration") {
    Instance inst = counterexample_3x3(2);
    Rational reference = p1_reference_value(inst);
    CHECK(reference == 3);  // frozen from the enumeration oracle
    LpSolution solution = solve_p1(inst);
    CHECK(solution.b == reference);
    CHECK(solution.nonzeroCount <= 5 * inst.m);
}

TEST_CASE("solve_p1 matches vertex enumeration on random instances") {
    DeterministicRng rng(73);
    for (int trial = 0; trial < 25; ++trial) {
        int m = static_cast<int>(rng.range(1, 3));
        Instance inst = random_instance(rng, m, m, 1, 9);
        LpSolution solution = solve_p1(inst);
        CHECK(solution.b == p1_reference_value(inst));
        CHECK(solution.nonzeroCount <= 5 * m);
    }
}

TEST_CASE("solve_p1 scale invariance") {
    DeterministicRng rng(79);
    for (int trial = 0; trial < 10; ++trial) {
        int m = static_cast<int>(rng.range(1, 4));
        Instance inst = random_instance(rng, m, m, 1, 9);
        LpSolution base = solve_p1(inst);
        Instance scaled = inst;
        Rational c(7, 3);
        for (auto& row : scaled.u)
            for (auto& v : row) v *= c;
        CHECK(solve_p1(scaled).b == c * base.b);
    }
}

TEST_CASE("T times the LP value bounds the oracle optimum") {
    Instance inst = counterexample_3x3(3);
    LpSolution solution = solve_p1(inst);
    auto opts = brute_opt_profile(inst, 3);
    for (int t = 1; t <= 3; ++t) CHECK(Rational(t) * solution.b >= opts[t - 1]);
}
