#include "egal/two_agents.hpp"

#include <algorithm>
#include <stdexcept>

namespace egal {

namespace {

int favorite(const Instance& inst, int agent, int excluded = -1) {
    int best = -1;
    for (int j = 0; j < inst.m; ++j) {
        if (j == excluded) continue;
        if (best < 0 || inst.value(agent, j) > inst.value(agent, best)) best = j;
    }
    return best;
}

}  // namespace

TwoAgentReduction reduce_two_agents(const Instance& inst) {
    if (inst.n != 2) throw std::invalid_argument("two-agent solver requires exactly two agents");
    Instance padded = pad_goods(inst);
    TwoAgentReduction red;
    int fav1 = favorite(padded, 0);
    int fav2 = favorite(padded, 1);
    if (fav1 != fav2) {
        red.g1 = fav1;
        red.g2 = fav2;
        return red;
    }
    red.g0 = fav1;
    red.g1 = favorite(padded, 0, red.g0);
    red.g2 = favorite(padded, 1, red.g0);
    return red;
}

MatchingSequence anytime_two_agents(const Instance& inst) {
    if (inst.n != 2) throw std::invalid_argument("two-agent solver requires exactly two agents");
    Instance padded = pad_goods(inst);
    TwoAgentReduction red = reduce_two_agents(padded);
    const int T = padded.rounds;

    auto constant_sequence = [&](int goodFor1, int goodFor2) {
        MatchingSequence seq;
        seq.rounds.assign(T, Matching({goodFor1, goodFor2}));
        return seq;
    };

    if (red.g0 < 0) return constant_sequence(red.g1, red.g2);

    const Rational& u1g0 = padded.value(0, red.g0);
    const Rational& u1g1 = padded.value(0, red.g1);
    const Rational& u2g0 = padded.value(1, red.g0);
    const Rational& u2g2 = padded.value(1, red.g2);

    // trivial cases: an indifferent agent, or one agent's peak already
    // dominated by the other's second-best
    if (u1g0 == u1g1) return constant_sequence(red.g1, red.g0);
    if (u2g0 == u2g2) return constant_sequence(red.g0, red.g2);
    if (u1g0 <= u2g2) return constant_sequence(red.g0, red.g2);
    if (u2g0 <= u1g1) return constant_sequence(red.g1, red.g0);

    const Matching m1({red.g0, red.g2});
    const Matching m2({red.g1, red.g0});
    MatchingSequence seq;
    Rational v1 = 0, v2 = 0;
    bool forcedSwap = false;
    for (int t = 0; t < T; ++t) {
        bool pickFirst;
        if (forcedSwap) {
            pickFirst = false;
            forcedSwap = false;
        } else {
            Rational bottleneck1 = std::min(v1 + u1g0, v2 + u2g2);
            Rational bottleneck2 = std::min(v1 + u1g1, v2 + u2g0);
            if (bottleneck1 != bottleneck2) {
                pickFirst = bottleneck1 > bottleneck2;
            } else {
                // tie: g0 goes to agent 1 now and must go to agent 2 next round
                pickFirst = true;
                forcedSwap = true;
            }
        }
        if (pickFirst) {
            v1 += u1g0;
            v2 += u2g2;
            seq.rounds.push_back(m1);
        } else {
            v1 += u1g1;
            v2 += u2g0;
            seq.rounds.push_back(m2);
        }
    }
    return seq;
}

}  // namespace egal
