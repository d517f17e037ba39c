#pragma once

#include "egal/rational.hpp"

#include <cstddef>
#include <vector>

namespace egal {

/// One problem instance of the egalitarian repeated matching problem:
/// n agents, m goods, T rounds, non-negative rational valuations.
///
/// Padding helpers may extend an instance with zero-valued goods or
/// max-valued dummy agents; realAgents/realGoods remember the original
/// shape so reports can project padded solutions back.
struct Instance {
    int n = 0;  // agents
    int m = 0;  // goods
    int rounds = 0;  // T
    std::vector<std::vector<Rational>> u;  // u[i][j] = value of good j for agent i
    int realAgents = 0;  // <= n; agents beyond this are padding
    int realGoods = 0;   // <= m; goods beyond this are padding

    Instance() = default;
    Instance(int agents, int goods, int T, std::vector<std::vector<Rational>> values);

    const Rational& value(int agent, int good) const { return u[agent][good]; }
    bool is_square() const { return n == m; }
    /// Largest valuation over all agents and goods.
    Rational max_value() const;
    /// Largest valuation of one agent.
    Rational max_value(int agent) const;
};

/// Injective assignment of each agent to a distinct good for one round.
struct Matching {
    std::vector<int> assign;  // assign[i] = good index of agent i

    Matching() = default;
    explicit Matching(std::vector<int> goods) : assign(std::move(goods)) {}

    int size() const { return static_cast<int>(assign.size()); }
    int operator()(int agent) const { return assign[agent]; }
    bool operator==(const Matching& other) const { return assign == other.assign; }
    bool operator<(const Matching& other) const { return assign < other.assign; }
};

/// Ordered list of matchings, one per round.
struct MatchingSequence {
    std::vector<Matching> rounds;

    int length() const { return static_cast<int>(rounds.size()); }
    bool empty() const { return rounds.empty(); }
};

/// Multiplicity matrix: counts[i][j] = how often agent i receives good j.
struct Allocation {
    std::vector<std::vector<Int>> counts;

    Allocation() = default;
    Allocation(int agents, int goods) : counts(agents, std::vector<Int>(goods, 0)) {}

    int agents() const { return static_cast<int>(counts.size()); }
    int goods() const { return counts.empty() ? 0 : static_cast<int>(counts[0].size()); }
    Int row_sum(int i) const;
    Int col_sum(int j) const;
};

/// Cumulative per-agent values, bottleneck value and argmin agents per round.
struct ValueTrajectory {
    std::vector<std::vector<Rational>> perAgentPerRound;  // [round][agent]
    std::vector<Rational> bottleneckPerRound;
    std::vector<std::vector<int>> bottleneckAgents;

    int length() const { return static_cast<int>(bottleneckPerRound.size()); }
    /// Final cumulative value of an agent (requires non-empty trajectory).
    const Rational& final_value(int agent) const { return perAgentPerRound.back()[agent]; }
    const Rational& final_bottleneck() const { return bottleneckPerRound.back(); }
};

enum class Dominance { None, Weak, Strong };

/// Validates shape, non-negativity and padding bookkeeping; throws
/// std::invalid_argument on violation.
void validate_instance(const Instance& inst);

/// Throws std::invalid_argument unless `matching` is injective and in range.
void validate_matching(const Instance& inst, const Matching& matching);

/// Extends the instance with zero-valued goods until m >= n.
Instance pad_goods(const Instance& inst);

/// Extends the instance with m - n dummy agents valuing every good at the
/// global maximum valuation. Requires m >= n.
Instance pad_agents(const Instance& inst);

/// Exact cumulative values v_i^s, bottlenecks b^s and argmin sets of a
/// sequence. Throws on invalid matchings.
ValueTrajectory evaluate(const Instance& inst, const MatchingSequence& seq);

/// The allocation associated with a sequence: counts[i][j] = #{s : M^s(i) = j}.
Allocation allocation_of(const Instance& inst, const MatchingSequence& seq);

/// Value of an allocation for one agent: sum_j counts[i][j] * u_i(g_j).
Rational allocation_value(const Instance& inst, const Allocation& alloc, int agent);

/// Weak: every agent does at least as well under `m` as under `m0`.
/// Strong: weak plus at least one strict improvement.
Dominance pareto_dominates(const Instance& inst, const Matching& m, const Matching& m0);

/// Drops padded agents from every round of a sequence solved on a padded
/// instance; good indices are left untouched.
MatchingSequence project_to_agents(const MatchingSequence& seq, int agents);

}  // namespace egal
