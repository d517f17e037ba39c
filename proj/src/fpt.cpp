#include "egal/fpt.hpp"

#include "egal/bigraph.hpp"
#include "egal/simplex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace egal {

Permutation::Permutation(std::vector<int> priorities) : pi(std::move(priorities)) {
    std::vector<char> seen(pi.size() + 1, 0);
    for (int p : pi) {
        if (p < 1 || p > static_cast<int>(pi.size()) || seen[p])
            throw std::invalid_argument("priorities must be a bijection onto 1..n");
        seen[p] = 1;
    }
}

RankTable rank_table(const Instance& inst) {
    validate_instance(inst);
    RankTable table;
    table.r.assign(inst.n, std::vector<int>(inst.m, 0));
    for (int i = 0; i < inst.n; ++i)
        for (int j = 0; j < inst.m; ++j) {
            int rank = 0;
            for (int g = 0; g < inst.m; ++g)
                if (inst.value(i, g) <= inst.value(i, j)) ++rank;
            table.r[i][j] = rank;
        }
    return table;
}

Matching pi_optimal_matching(const Instance& inst, const Permutation& pi) {
    Instance padded = pad_goods(inst);
    if (pi.agents() != padded.n) throw std::invalid_argument("permutation size mismatch");
    const int n = padded.n;
    const int m = padded.m;
    RankTable ranks = rank_table(padded);

    // w(i, g) = rank * m^(n - priority); dummy rows fill the square matrix
    std::vector<std::vector<Int>> weights(m, std::vector<Int>(m, 0));
    for (int i = 0; i < n; ++i) {
        Int factor = 1;
        for (int e = 0; e < n - pi.pi[i]; ++e) factor *= m;
        for (int j = 0; j < m; ++j) weights[i][j] = Int(ranks.r[i][j]) * factor;
    }
    Matching full = max_weight_perfect_matching(weights);
    Matching result;
    result.assign.assign(full.assign.begin(), full.assign.begin() + n);
    return result;
}

namespace {

// Priority orders in lexicographic order: element k of the order has
// priority k+1.
template <typename Callback>
void for_each_permutation(int n, Callback&& callback) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
        std::vector<int> priorities(n);
        for (int k = 0; k < n; ++k) priorities[order[k]] = k + 1;
        callback(Permutation(std::move(priorities)));
    } while (std::next_permutation(order.begin(), order.end()));
}

std::vector<Rational> profile_of(const Instance& inst, const Matching& matching, int agents) {
    std::vector<Rational> profile(agents);
    for (int i = 0; i < agents; ++i) profile[i] = inst.value(i, matching(i));
    return profile;
}

}  // namespace

std::vector<std::vector<Rational>> pareto_optimal_profiles(const Instance& inst, int limit) {
    validate_instance(inst);
    if (inst.n > limit)
        throw FptLimitExceeded("instance has more agents than the FPT limit; use approx instead");
    Instance padded = pad_goods(inst);
    std::vector<std::vector<Rational>> profiles;
    for_each_permutation(padded.n, [&](const Permutation& pi) {
        profiles.push_back(profile_of(padded, pi_optimal_matching(padded, pi), padded.n));
    });
    std::sort(profiles.begin(), profiles.end());
    profiles.erase(std::unique(profiles.begin(), profiles.end()), profiles.end());
    return profiles;
}

P2Program build_p2(const Instance& inst, int limit) {
    validate_instance(inst);
    if (inst.n > limit)
        throw FptLimitExceeded("instance has more agents than the FPT limit; use approx instead");
    Instance padded = pad_goods(inst);
    P2Program program;
    program.T = padded.rounds;
    std::map<std::vector<Rational>, bool> seen;
    for_each_permutation(padded.n, [&](const Permutation& pi) {
        Matching matching = pi_optimal_matching(padded, pi);
        auto profile = profile_of(padded, matching, padded.n);
        if (seen.emplace(profile, true).second) {
            program.matchings.push_back(std::move(matching));
            program.profiles.push_back(std::move(profile));
        }
    });
    return program;
}

namespace {

struct BranchNode {
    std::vector<Int> lower;
    std::vector<Int> upper;
};

// LP relaxation of the program at a branch node, with variables shifted by
// their lower bounds. Bound rows are added only where branching tightened
// the box below the trivial cap.
SimplexSolution solve_relaxation(const P2Program& program, const BranchNode& node,
                                 const Int& remaining) {
    const int K = static_cast<int>(program.matchings.size());
    const int agents = static_cast<int>(program.profiles[0].size());

    LinearProgram lp;
    lp.variables = K + 1;  // x_0..x_{K-1}, then b
    lp.objective.assign(lp.variables, Rational(0));
    lp.objective[K] = 1;

    for (int i = 0; i < agents; ++i) {
        Rational base = 0;
        for (int k = 0; k < K; ++k)
            if (node.lower[k] != 0) base += Rational(node.lower[k]) * program.profiles[k][i];
        auto& row = lp.add_row(RowSense::GreaterEqual, -base);
        for (int k = 0; k < K; ++k) row.coeffs[k] = program.profiles[k][i];
        row.coeffs[K] = -1;
    }
    {
        auto& row = lp.add_row(RowSense::Equal, Rational(remaining));
        for (int k = 0; k < K; ++k) row.coeffs[k] = 1;
    }
    for (int k = 0; k < K; ++k) {
        Int cap = node.upper[k] - node.lower[k];
        if (cap < remaining) {
            auto& row = lp.add_row(RowSense::LessEqual, Rational(cap));
            row.coeffs[k] = 1;
        }
    }
    return solve_lp(lp);
}

}  // namespace

FptResult fpt_optimal_result(const Instance& inst, int limit) {
    P2Program program = build_p2(inst, limit);
    const int K = static_cast<int>(program.matchings.size());
    const Int T = program.T;

    // warm incumbent: the best single matching played every round
    int seed = 0;
    auto rowMin = [&](int k) {
        return *std::min_element(program.profiles[k].begin(), program.profiles[k].end());
    };
    for (int k = 1; k < K; ++k)
        if (rowMin(k) > rowMin(seed)) seed = k;
    std::vector<Int> incumbent(K, 0);
    incumbent[seed] = T;
    Rational incumbentValue = Rational(T) * rowMin(seed);

    std::vector<BranchNode> stack;
    stack.push_back({std::vector<Int>(K, 0), std::vector<Int>(K, T)});
    while (!stack.empty()) {
        BranchNode node = std::move(stack.back());
        stack.pop_back();

        Int lowerTotal = 0, upperTotal = 0;
        for (int k = 0; k < K; ++k) {
            lowerTotal += node.lower[k];
            upperTotal += node.upper[k];
        }
        if (lowerTotal > T || upperTotal < T) continue;
        Int remaining = T - lowerTotal;

        SimplexSolution relaxed = solve_relaxation(program, node, remaining);
        if (relaxed.status != SolveStatus::Optimal) continue;
        if (relaxed.objective <= incumbentValue) continue;

        int fractional = -1;
        Rational largest = 0;
        for (int k = 0; k < K; ++k) {
            if (is_integer(relaxed.x[k])) continue;
            if (fractional < 0 || relaxed.x[k] > largest) {
                fractional = k;
                largest = relaxed.x[k];
            }
        }
        if (fractional < 0) {
            incumbentValue = relaxed.objective;
            for (int k = 0; k < K; ++k) incumbent[k] = node.lower[k] + numerator(relaxed.x[k]);
            continue;
        }

        Int split = node.lower[fractional] + floor_div(relaxed.x[fractional]);
        BranchNode down = node, up = node;
        down.upper[fractional] = split;
        up.lower[fractional] = split + 1;
        stack.push_back(std::move(down));
        stack.push_back(std::move(up));  // explore the >= branch first
    }

    FptResult result;
    result.copies = incumbent;
    result.bottleneck = incumbentValue;
    result.program = std::move(program);
    for (int k = 0; k < K; ++k)
        for (Int c = 0; c < incumbent[k]; ++c)
            result.sequence.rounds.push_back(result.program.matchings[k]);
    return result;
}

MatchingSequence fpt_optimal(const Instance& inst, int limit) {
    return fpt_optimal_result(inst, limit).sequence;
}

}  // namespace egal
