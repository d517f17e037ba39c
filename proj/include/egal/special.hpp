#pragma once

#include "egal/circulation.hpp"
#include "egal/core.hpp"
#include "egal/rational.hpp"

#include <optional>
#include <vector>

namespace egal {

/// Two good types: typeOf[j] in {0, 1}, and every agent values all goods of
/// one type identically.
struct GoodTypePartition {
    std::vector<int> typeOf;
};

/// Difference between the best and the n-th best good under a common
/// valuation; the additive slack of the greedy algorithm.
struct Gap {
    Rational delta;
};

bool is_binary(const Instance& inst);
bool is_identical(const Instance& inst);

/// Finds some valid two-type partition if one exists (goods grouped by
/// their full valuation column; at most two distinct columns allowed).
std::optional<GoodTypePartition> detect_two_good_types(const Instance& inst);

/// Goods covered by the (deterministic) maximum matching of the value-1
/// graph, sorted ascending. Binary valuations only.
std::vector<int> maximum_matching_goods(const Instance& inst);

/// Feasibility network for a binary bottleneck guess: agents supply b
/// rounds each, maximum-matching goods absorb T slots, a slack vertex
/// covers the remainder.
struct BinaryNetwork {
    CirculationNetwork net{1};
    std::vector<int> goods;                       // matched goods, ascending
    std::vector<std::pair<int, int>> agentEdges;  // (edge id, agent * |goods| + good slot)
};

BinaryNetwork binary_feasibility_network(const Instance& inst, std::int64_t b);

/// Exact optimum for binary valuations: binary search on the bottleneck
/// with a feasible-circulation test per guess.
MatchingSequence binary_optimal(const Instance& inst);

/// Feasibility network for a two-good-types bottleneck guess. `rejected`
/// marks the shortfall shortcut (some agent cannot reach b even on its best
/// good every round), in which case the network is not built.
struct TwoGoodsNetwork {
    bool rejected = false;
    CirculationNetwork net{1};
    std::vector<int> vertexOwner;         // agent of each agent-side vertex
    std::vector<int> vertexKind;          // 0/1 = restricted to that type, 2 = any good
    std::vector<std::vector<int>> edgeId;  // [agent vertex][good] or -1
};

TwoGoodsNetwork two_goods_feasibility_network(const Instance& inst, const GoodTypePartition& part,
                                              const Rational& b);

/// Exact optimum for two good types: binary search over the candidate
/// values k*u_i(type r) + (T-k)*u_i(type 1-r), feasibility by circulation.
MatchingSequence two_goods_optimal(const Instance& inst, const GoodTypePartition& part);

/// Exact optimum for identical valuations when T is a multiple of n:
/// cyclic shifts over the top n goods, each repeated T/n times.
MatchingSequence identical_exact(const Instance& inst);

/// Greedy for identical valuations: each round, agents pick their favorite
/// remaining top-n good in ascending order of cumulative value. Within
/// Gap.delta of optimal at every prefix.
MatchingSequence identical_greedy(const Instance& inst);

Gap identical_gap(const Instance& inst);

}  // namespace egal
