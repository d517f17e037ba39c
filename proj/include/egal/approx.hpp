#pragma once

#include "egal/birkhoff.hpp"
#include "egal/core.hpp"
#include "egal/lp.hpp"

#include <vector>

namespace egal {

/// Per-term selection counts of the anytime scheduler after some round t.
/// The scheduler maintains count_k >= alpha_k * t - 1 for every term.
struct ScheduleState {
    std::vector<Int> counts;
    int round = 0;
};

/// Everything the end-of-horizon approximation produced along the way;
/// the tests check the per-agent bound chain on these intermediates.
struct ApproxOptimalTrace {
    Instance square;           // padded instance the solver ran on
    LpSolution lp;
    Allocation floorAllocation;  // entries floor(T * B_ij)
    MatchingSequence sequence;   // projected to the caller's agents
};

/// Intermediates of the anytime approximation.
struct ApproxAnytimeTrace {
    Instance square;
    LpSolution lp;
    BirkhoffDecomposition decomposition;
    std::vector<int> pickedTerm;            // term index per round
    std::vector<ScheduleState> stateAfter;  // state after each round
    MatchingSequence sequence;              // projected
};

/// Sequence of T matchings with b^T(S) >= OPT(T) - m * max u. Rounds the
/// fractional egalitarian optimum down to an allocation and converts it to
/// a sequence, which never loses more than one copy of any good per agent.
MatchingSequence approx_optimal(const Instance& inst);
ApproxOptimalTrace approx_optimal_trace(const Instance& inst);

/// Sequence with b^t(S) >= OPT(t) - 5m * max u for every prefix t. Each
/// round plays the decomposition term minimizing (count+1)/alpha, ties to
/// the lowest term index. The schedule invariant is asserted every round.
MatchingSequence approx_anytime(const Instance& inst);
ApproxAnytimeTrace approx_anytime_trace(const Instance& inst);

}  // namespace egal
