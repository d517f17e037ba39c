#pragma once

#include "egal/core.hpp"

namespace egal {

/// Outcome of the two-agent case split. When the agents share a unique
/// favorite good g0, every matching is weakly dominated by (g0, g2) or
/// (g1, g0) where g_i is agent i's best good besides g0; otherwise both
/// agents can peak simultaneously and g0 is -1.
struct TwoAgentReduction {
    int g0 = -1;
    int g1 = -1;  // agent 1's pick (favorite, or best besides g0)
    int g2 = -1;  // agent 2's pick
};

TwoAgentReduction reduce_two_agents(const Instance& inst);

/// Anytime optimal sequence for n = 2: trivial cases give a constant
/// matching; otherwise a greedy over the two undominated matchings, where a
/// bottleneck tie gives g0 to agent 1 now and to agent 2 next round.
MatchingSequence anytime_two_agents(const Instance& inst);

}  // namespace egal
