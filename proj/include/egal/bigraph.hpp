#pragma once

#include "egal/core.hpp"
#include "egal/rational.hpp"

#include <optional>
#include <vector>

namespace egal {

/// Bipartite graph on [leftCount] x [rightCount] with optional integer
/// edge weights. Adjacency is kept sorted so searches are deterministic:
/// lowest left index first, then lowest right index.
struct Bigraph {
    int leftCount = 0;
    int rightCount = 0;
    std::vector<std::vector<int>> adjacency;  // adjacency[left] = sorted right indices

    Bigraph(int left, int right);
    void add_edge(int left, int right);
    bool has_edge(int left, int right) const;
};

/// Perfect matching via augmenting paths, or std::nullopt when none exists.
/// Requires leftCount == rightCount.
std::optional<Matching> perfect_matching(const Bigraph& g);

/// Maximum-cardinality matching; entry i is the right vertex matched to
/// left vertex i, or -1. Augments from the lowest left index first.
std::vector<int> maximum_matching(const Bigraph& g);

/// Maximum-weight perfect matching of a complete square bipartite graph.
///
/// Weights are arbitrary-precision (the rank construction for pi-optimal
/// matchings produces weights up to m^n). Ties are broken toward the
/// lexicographically smallest assignment vector: lowest right index for the
/// lowest left index first.
Matching max_weight_perfect_matching(const std::vector<std::vector<Int>>& weights);

}  // namespace egal
