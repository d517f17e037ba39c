#pragma once

#include "egal/core.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace egal {

/// Caps on the exhaustive searches. maxMatchings bounds the number of
/// injective matchings enumerated per round; maxStates bounds the total
/// number of expanded prefix states across all rounds.
struct OracleBudget {
    std::int64_t maxMatchings = 5000;
    std::int64_t maxStates = 1'000'000;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All injective matchings of n agents into m goods, lexicographically
/// ordered. Throws BudgetExceeded when there are more than `budget`.
std::vector<Matching> all_matchings(int n, int m, std::int64_t budget);

/// Exact OPT(t) by exhaustive search over matching sequences. Symmetric
/// prefixes (identical cumulative value vectors) are merged and dominated
/// prefixes pruned, which preserves every per-round optimum.
Rational brute_opt(const Instance& inst, int t, const OracleBudget& budget = {});

/// OPT(1), ..., OPT(t) from one search.
std::vector<Rational> brute_opt_profile(const Instance& inst, int t,
                                        const OracleBudget& budget = {});

/// A sequence achieving OPT(t) at round t (not necessarily before).
MatchingSequence brute_optimal_sequence(const Instance& inst, int t,
                                        const OracleBudget& budget = {});

struct AnytimeWitness {
    bool exists = false;
    MatchingSequence witness;  // meaningful when exists
};

/// Decides whether a sequence with b^s = OPT(s) for every s <= T exists,
/// returning one such sequence when it does.
AnytimeWitness anytime_exists(const Instance& inst, int T, const OracleBudget& budget = {});

/// All Pareto-optimal matchings with their valuation profiles, in
/// lexicographic matching order.
std::vector<std::pair<Matching, std::vector<Rational>>> pareto_enumerate(
    const Instance& inst, const OracleBudget& budget = {});

}  // namespace egal
