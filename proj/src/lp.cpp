#include "egal/lp.hpp"

#include "egal/simplex.hpp"

#include <stdexcept>

namespace egal {

LpSolution solve_p1(const Instance& inst) {
    validate_instance(inst);
    if (!inst.is_square())
        throw std::invalid_argument("solve_p1 requires a square instance; pad first");
    const int m = inst.m;

    // variables: B_ij agent-major at i*m+j, then b at m*m
    LinearProgram lp;
    lp.variables = m * m + 1;
    lp.objective.assign(lp.variables, Rational(0));
    lp.objective[m * m] = 1;

    for (int i = 0; i < m; ++i) {
        auto& row = lp.add_row(RowSense::GreaterEqual, Rational(0));
        for (int j = 0; j < m; ++j) row.coeffs[i * m + j] = inst.value(i, j);
        row.coeffs[m * m] = -1;
    }
    for (int i = 0; i < m; ++i) {
        auto& row = lp.add_row(RowSense::Equal, Rational(1));
        for (int j = 0; j < m; ++j) row.coeffs[i * m + j] = 1;
    }
    for (int j = 0; j < m; ++j) {
        auto& row = lp.add_row(RowSense::Equal, Rational(1));
        for (int i = 0; i < m; ++i) row.coeffs[i * m + j] = 1;
    }

    SimplexSolution solved = solve_lp(lp);
    if (solved.status != SolveStatus::Optimal)
        throw std::logic_error("P1 is always feasible and bounded");

    std::vector<std::vector<Rational>> entries(m, std::vector<Rational>(m));
    int nonzero = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            entries[i][j] = solved.x[i * m + j];
            if (entries[i][j] != 0) ++nonzero;
        }

    LpSolution result;
    result.b = solved.objective;
    result.B = FractionalBistochastic::checked(std::move(entries));  // re-verifies sums
    result.basisSize = solved.basisSize;
    result.nonzeroCount = nonzero;

    // re-verify the value constraints by direct substitution
    for (int i = 0; i < m; ++i) {
        Rational total = 0;
        for (int j = 0; j < m; ++j)
            if (result.B.entries[i][j] != 0) total += result.B.entries[i][j] * inst.value(i, j);
        if (total < result.b)
            throw std::logic_error("P1 solution violates a value constraint");
    }
    if (nonzero > 5 * m)
        throw std::logic_error("P1 vertex solution has more than 5m nonzero entries");
    return result;
}

}  // namespace egal
