#include "egal/approx.hpp"

#include <stdexcept>

namespace egal {

namespace {

Instance squared(const Instance& inst) { return pad_agents(pad_goods(inst)); }

}  // namespace

ApproxOptimalTrace approx_optimal_trace(const Instance& inst) {
    validate_instance(inst);
    ApproxOptimalTrace trace;
    trace.square = squared(inst);
    trace.lp = solve_p1(trace.square);

    const int m = trace.square.m;
    const Int T = trace.square.rounds;
    trace.floorAllocation = Allocation(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            trace.floorAllocation.counts[i][j] = floor_div(Rational(T) * trace.lp.B.entries[i][j]);

    MatchingSequence full = allocation_to_sequence(trace.floorAllocation, T);
    trace.sequence = project_to_agents(full, inst.n);
    return trace;
}

MatchingSequence approx_optimal(const Instance& inst) {
    return approx_optimal_trace(inst).sequence;
}

ApproxAnytimeTrace approx_anytime_trace(const Instance& inst) {
    validate_instance(inst);
    ApproxAnytimeTrace trace;
    trace.square = squared(inst);
    trace.lp = solve_p1(trace.square);
    trace.decomposition = decompose(trace.lp.B);

    const int termCount = trace.decomposition.term_count();
    std::vector<Int> counts(termCount, 0);
    MatchingSequence full;
    for (int round = 1; round <= trace.square.rounds; ++round) {
        int pick = 0;
        // exact rational comparison of (count_k + 1) / alpha_k
        Rational bestKey = Rational(counts[0] + 1) / trace.decomposition.terms[0].coefficient;
        for (int k = 1; k < termCount; ++k) {
            Rational key = Rational(counts[k] + 1) / trace.decomposition.terms[k].coefficient;
            if (key < bestKey) {
                bestKey = key;
                pick = k;
            }
        }
        ++counts[pick];
        trace.pickedTerm.push_back(pick);
        full.rounds.push_back(trace.decomposition.terms[pick].matching);

        Int total = 0;
        for (int k = 0; k < termCount; ++k) {
            total += counts[k];
            if (Rational(counts[k]) < trace.decomposition.terms[k].coefficient * round - 1)
                throw std::logic_error("anytime schedule invariant violated");
        }
        if (total != round) throw std::logic_error("anytime schedule lost a round");
        trace.stateAfter.push_back({counts, round});
    }
    trace.sequence = project_to_agents(full, inst.n);
    return trace;
}

MatchingSequence approx_anytime(const Instance& inst) {
    return approx_anytime_trace(inst).sequence;
}

}  // namespace egal
