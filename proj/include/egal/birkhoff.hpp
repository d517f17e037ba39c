#pragma once

#include "egal/core.hpp"
#include "egal/rational.hpp"

#include <vector>

namespace egal {

/// Square non-negative integer matrix whose rows and columns all sum to the
/// same integer `scale`.
struct ScaledBistochastic {
    int size = 0;
    Int scale = 0;
    std::vector<std::vector<Int>> entries;

    /// Validates the row/column sums; throws std::invalid_argument otherwise.
    static ScaledBistochastic checked(std::vector<std::vector<Int>> entries, Int scale);
};

/// Square non-negative rational matrix with unit row and column sums.
struct FractionalBistochastic {
    int size = 0;
    std::vector<std::vector<Rational>> entries;

    static FractionalBistochastic checked(std::vector<std::vector<Rational>> entries);
};

/// Convex (or scaled integer) combination of permutation matchings that
/// reconstructs the decomposed matrix exactly.
struct BirkhoffDecomposition {
    struct Term {
        Rational coefficient;
        Matching matching;
    };
    std::vector<Term> terms;

    int term_count() const { return static_cast<int>(terms.size()); }
    Rational coefficient_sum() const;
};

/// Completes an allocation with row/column sums <= T into an m x m integer
/// matrix with all sums equal to T. Entries only grow, so no agent loses
/// value. Throws std::invalid_argument when a row or column already exceeds
/// T, naming the offending index.
ScaledBistochastic complete_to_bistochastic(const Allocation& alloc, Int T);

/// Birkhoff's algorithm. For scaled integer input all coefficients are
/// positive integers summing to the scale; for fractional input they are
/// positive rationals summing to one. At most m^2 - m + 1 terms.
BirkhoffDecomposition decompose(const ScaledBistochastic& matrix);
BirkhoffDecomposition decompose(const FractionalBistochastic& matrix);

/// Converts an allocation into a sequence of exactly T matchings such that
/// every agent ends at least as well off as under the allocation.
MatchingSequence allocation_to_sequence(const Allocation& alloc, Int T);

}  // namespace egal
