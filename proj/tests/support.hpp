#pragma once

#include "egal/bigraph.hpp"
#include "egal/core.hpp"

#include <algorithm>
#include <initializer_list>
#include <vector>

namespace egal::testsupport {

/// Instance from integer valuations.
inline Instance make_instance(int T, std::vector<std::vector<int>> values) {
    std::vector<std::vector<Rational>> u;
    for (const auto& row : values) {
        u.emplace_back();
        for (int v : row) u.back().emplace_back(v);
    }
    int n = static_cast<int>(values.size());
    int m = static_cast<int>(values[0].size());
    return Instance(n, m, T, std::move(u));
}

/// The 3x3 counterexample instance with OPT(1)=2, OPT(2)=6 and no anytime
/// optimal sequence at T=2.
inline Instance counterexample_3x3(int T) {
    return make_instance(T, {{5, 2, 1}, {3, 3, 2}, {2, 5, 1}});
}

inline Matching matching(std::vector<int> assign) { return Matching(std::move(assign)); }

inline MatchingSequence sequence(std::vector<std::vector<int>> rounds) {
    MatchingSequence seq;
    for (auto& r : rounds) seq.rounds.emplace_back(std::move(r));
    return seq;
}

/// Constructive check of the maximum-matching-goods property under binary
/// valuations: builds a weak dominator of `matching` whose value-1
/// assignments all lie inside `goods`, or reports that none exists.
inline bool dominator_within(const Instance& inst, const Matching& matching,
                             const std::vector<int>& goods) {
    std::vector<int> needy;
    for (int i = 0; i < inst.n; ++i)
        if (inst.value(i, matching(i)) == 1) needy.push_back(i);

    Bigraph graph(std::max<int>(1, static_cast<int>(needy.size())), inst.m);
    for (std::size_t a = 0; a < needy.size(); ++a)
        for (int g : goods)
            if (inst.value(needy[a], g) == 1) graph.add_edge(static_cast<int>(a), g);
    std::vector<int> match = maximum_matching(graph);
    std::vector<char> taken(inst.m, 0);
    std::vector<int> assign(inst.n, -1);
    for (std::size_t a = 0; a < needy.size(); ++a) {
        if (match[a] < 0) return false;
        assign[needy[a]] = match[a];
        taken[match[a]] = 1;
    }
    int cursor = 0;
    for (int i = 0; i < inst.n; ++i) {
        if (assign[i] >= 0) continue;
        while (taken[cursor]) ++cursor;
        assign[i] = cursor;
        taken[cursor] = 1;
    }
    return pareto_dominates(inst, Matching(assign), matching) != Dominance::None;
}

}  // namespace egal::testsupport
