#pragma once

#include "egal/birkhoff.hpp"
#include "egal/core.hpp"

namespace egal {

/// Vertex-optimal solution of the per-round egalitarian linear program:
/// maximize b subject to sum_j B_ij u_i(g_j) >= b for every agent and B
/// bistochastic. b is the best per-round egalitarian value achievable
/// fractionally, so T*b bounds OPT(T) from above.
struct LpSolution {
    Rational b;
    FractionalBistochastic B;
    int basisSize = 0;
    int nonzeroCount = 0;
};

/// Solves the program with exact rational simplex (Bland's rule, agent-major
/// column order). Requires a square instance; pad first. The returned B is a
/// vertex of the feasible polytope, so it has at most 5m nonzero entries.
/// Feasibility and optimality are re-verified on every solve.
LpSolution solve_p1(const Instance& inst);

}  // namespace egal
