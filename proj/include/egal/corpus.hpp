#pragma once

#include "egal/core.hpp"

#include <cstdint>

namespace egal {

/// splitmix64. Used for every generated corpus so instances are identical
/// across platforms and runs; never std::uniform_int_distribution, whose
/// output is implementation-defined.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

/// n x m instance with integer valuations in [0, maxValue].
Instance random_instance(DeterministicRng& rng, int n, int m, int T, int maxValue);

/// Valuations in {0, 1}.
Instance random_binary_instance(DeterministicRng& rng, int n, int m, int T);

/// Exactly two good types (possibly one realized), values in [0, maxValue].
Instance random_two_type_instance(DeterministicRng& rng, int n, int m, int T, int maxValue);

/// All agents share one valuation row.
Instance random_identical_instance(DeterministicRng& rng, int n, int m, int T, int maxValue);

/// Allocation with every row and column sum at most T.
Allocation random_feasible_allocation(DeterministicRng& rng, int n, int m, int T);

}  // namespace egal
