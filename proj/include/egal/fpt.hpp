#pragma once

#include "egal/core.hpp"
#include "egal/rational.hpp"

#include <stdexcept>
#include <vector>

namespace egal {

/// Agent priorities: pi[i] in [1..n], 1 being the highest priority.
struct Permutation {
    std::vector<int> pi;

    explicit Permutation(std::vector<int> priorities);
    int agents() const { return static_cast<int>(pi.size()); }
};

/// r[i][j] = number of goods agent i values at most as highly as good j
/// (inclusive), so ranks run from 1 to m and equal-valued goods share a rank.
struct RankTable {
    std::vector<std::vector<int>> r;
};

struct FptLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultFptLimit = 5;

RankTable rank_table(const Instance& inst);

/// A matching no agent can improve without hurting a higher-priority agent:
/// the maximum-weight matching under weights rank * m^(n - priority).
/// Always Pareto optimal.
Matching pi_optimal_matching(const Instance& inst, const Permutation& pi);

/// Valuation profiles of the pi-optimal matchings over all n! permutations;
/// by the permutation characterization this is exactly the set of
/// Pareto-optimal profiles. Sorted ascending.
std::vector<std::vector<Rational>> pareto_optimal_profiles(const Instance& inst,
                                                           int limit = kDefaultFptLimit);

/// The integer program over profile-distinct pi-optimal matchings: choose
/// how many rounds to play each so the minimum total value is maximized.
struct P2Program {
    std::vector<Matching> matchings;              // deduplicated by profile
    std::vector<std::vector<Rational>> profiles;  // per matching, per real agent
    Int T = 0;
};

P2Program build_p2(const Instance& inst, int limit = kDefaultFptLimit);

struct FptResult {
    MatchingSequence sequence;
    Rational bottleneck;      // equals OPT(T)
    std::vector<Int> copies;  // rounds played per program matching
    P2Program program;
};

/// Exact optimum for small n: solves the program by branch and bound with
/// exact LP relaxation bounds. Throws FptLimitExceeded when n > limit.
FptResult fpt_optimal_result(const Instance& inst, int limit = kDefaultFptLimit);
MatchingSequence fpt_optimal(const Instance& inst, int limit = kDefaultFptLimit);

}  // namespace egal
