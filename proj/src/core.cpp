#include "egal/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace egal {

Instance::Instance(int agents, int goods, int T, std::vector<std::vector<Rational>> values)
    : n(agents), m(goods), rounds(T), u(std::move(values)), realAgents(agents), realGoods(goods) {
    validate_instance(*this);
}

Rational Instance::max_value() const {
    Rational best = 0;
    for (const auto& row : u)
        for (const auto& v : row) best = std::max(best, v);
    return best;
}

Rational Instance::max_value(int agent) const {
    Rational best = 0;
    for (const auto& v : u[agent]) best = std::max(best, v);
    return best;
}

Int Allocation::row_sum(int i) const {
    Int total = 0;
    for (const auto& c : counts[i]) total += c;
    return total;
}

Int Allocation::col_sum(int j) const {
    Int total = 0;
    for (const auto& row : counts) total += row[j];
    return total;
}

void validate_instance(const Instance& inst) {
    if (inst.n <= 0 || inst.m <= 0 || inst.rounds <= 0)
        throw std::invalid_argument("instance dimensions must be positive");
    if (static_cast<int>(inst.u.size()) != inst.n)
        throw std::invalid_argument("valuation matrix has wrong number of rows");
    for (const auto& row : inst.u) {
        if (static_cast<int>(row.size()) != inst.m)
            throw std::invalid_argument("valuation matrix has wrong number of columns");
        for (const auto& v : row)
            if (v < 0) throw std::invalid_argument("valuations must be non-negative");
    }
    if (inst.realAgents <= 0 || inst.realAgents > inst.n || inst.realGoods <= 0 || inst.realGoods > inst.m)
        throw std::invalid_argument("padding bookkeeping out of range");
}

void validate_matching(const Instance& inst, const Matching& matching) {
    if (matching.size() != inst.n)
        throw std::invalid_argument("matching has wrong number of agents");
    std::vector<char> used(inst.m, 0);
    for (int good : matching.assign) {
        if (good < 0 || good >= inst.m)
            throw std::invalid_argument("good index out of range: " + std::to_string(good));
        if (used[good])
            throw std::invalid_argument("matching is not injective at good " + std::to_string(good));
        used[good] = 1;
    }
}

Instance pad_goods(const Instance& inst) {
    validate_instance(inst);
    if (inst.m >= inst.n) return inst;
    Instance out = inst;
    out.m = inst.n;
    for (auto& row : out.u) row.resize(out.m, Rational(0));
    return out;
}

Instance pad_agents(const Instance& inst) {
    validate_instance(inst);
    if (inst.m < inst.n)
        throw std::invalid_argument("pad_agents requires m >= n; run pad_goods first");
    if (inst.m == inst.n) return inst;
    Instance out = inst;
    Rational top = inst.max_value();
    out.n = inst.m;
    out.u.resize(out.n, std::vector<Rational>(out.m, top));
    return out;
}

ValueTrajectory evaluate(const Instance& inst, const MatchingSequence& seq) {
    ValueTrajectory traj;
    std::vector<Rational> totals(inst.n, Rational(0));
    for (const Matching& matching : seq.rounds) {
        validate_matching(inst, matching);
        for (int i = 0; i < inst.n; ++i) totals[i] += inst.value(i, matching(i));
        traj.perAgentPerRound.push_back(totals);
        Rational bottleneck = totals[0];
        for (int i = 1; i < inst.n; ++i) bottleneck = std::min(bottleneck, totals[i]);
        std::vector<int> argmin;
        for (int i = 0; i < inst.n; ++i)
            if (totals[i] == bottleneck) argmin.push_back(i);
        traj.bottleneckPerRound.push_back(bottleneck);
        traj.bottleneckAgents.push_back(std::move(argmin));
    }
    return traj;
}

Allocation allocation_of(const Instance& inst, const MatchingSequence& seq) {
    Allocation alloc(inst.n, inst.m);
    for (const Matching& matching : seq.rounds) {
        validate_matching(inst, matching);
        for (int i = 0; i < inst.n; ++i) ++alloc.counts[i][matching(i)];
    }
    return alloc;
}

Rational allocation_value(const Instance& inst, const Allocation& alloc, int agent) {
    Rational total = 0;
    for (int j = 0; j < inst.m; ++j)
        if (alloc.counts[agent][j] != 0) total += Rational(alloc.counts[agent][j]) * inst.value(agent, j);
    return total;
}

Dominance pareto_dominates(const Instance& inst, const Matching& m, const Matching& m0) {
    validate_matching(inst, m);
    validate_matching(inst, m0);
    bool strict = false;
    for (int i = 0; i < inst.n; ++i) {
        const Rational& a = inst.value(i, m(i));
        const Rational& b = inst.value(i, m0(i));
        if (a < b) return Dominance::None;
        if (a > b) strict = true;
    }
    return strict ? Dominance::Strong : Dominance::Weak;
}

MatchingSequence project_to_agents(const MatchingSequence& seq, int agents) {
    MatchingSequence out;
    out.rounds.reserve(seq.rounds.size());
    for (const Matching& matching : seq.rounds) {
        Matching reduced;
        reduced.assign.assign(matching.assign.begin(), matching.assign.begin() + agents);
        out.rounds.push_back(std::move(reduced));
    }
    return out;
}

}  // namespace egal
