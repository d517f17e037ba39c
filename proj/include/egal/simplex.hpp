#pragma once

#include "egal/rational.hpp"

#include <vector>

namespace egal {

enum class RowSense { LessEqual, Equal, GreaterEqual };

/// maximize objective . x  subject to the rows, with x >= 0.
struct LinearProgram {
    struct Row {
        std::vector<Rational> coeffs;
        RowSense sense = RowSense::Equal;
        Rational rhs;
    };

    int variables = 0;
    std::vector<Rational> objective;
    std::vector<Row> rows;

    Row& add_row(RowSense sense, Rational rhs);
};

enum class SolveStatus { Optimal, Infeasible, Unbounded };

struct SimplexSolution {
    SolveStatus status = SolveStatus::Infeasible;
    Rational objective;
    std::vector<Rational> x;
    /// Rows of the final tableau = number of basic variables (vertex bookkeeping).
    int basisSize = 0;
};

/// Two-phase primal simplex over exact rationals with Bland's anti-cycling
/// rule. Always returns a basic (vertex) optimal solution. Every optimal
/// solve is certified internally against its dual (strong duality as an
/// exact identity); certificate failure throws std::logic_error.
SimplexSolution solve_lp(const LinearProgram& lp);

}  // namespace egal
