#include "egal/bigraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace egal {

Bigraph::Bigraph(int left, int right) : leftCount(left), rightCount(right), adjacency(left) {
    if (left <= 0 || right <= 0) throw std::invalid_argument("bigraph sides must be positive");
}

void Bigraph::add_edge(int left, int right) {
    if (left < 0 || left >= leftCount || right < 0 || right >= rightCount)
        throw std::invalid_argument("bigraph edge out of range");
    auto& row = adjacency[left];
    auto it = std::lower_bound(row.begin(), row.end(), right);
    if (it != row.end() && *it == right)
        throw std::invalid_argument("duplicate bigraph edge");
    row.insert(it, right);
}

bool Bigraph::has_edge(int left, int right) const {
    const auto& row = adjacency[left];
    return std::binary_search(row.begin(), row.end(), right);
}

namespace {

// Free right vertices first so the lowest-indexed assignment wins ties;
// displacement happens only when no direct slot is left.
bool try_augment(const Bigraph& g, int left, std::vector<int>& matchOfRight,
                 std::vector<char>& visited) {
    for (int right : g.adjacency[left]) {
        if (visited[right] || matchOfRight[right] >= 0) continue;
        visited[right] = 1;
        matchOfRight[right] = left;
        return true;
    }
    for (int right : g.adjacency[left]) {
        if (visited[right]) continue;
        visited[right] = 1;
        if (try_augment(g, matchOfRight[right], matchOfRight, visited)) {
            matchOfRight[right] = left;
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<Matching> perfect_matching(const Bigraph& g) {
    if (g.leftCount != g.rightCount)
        throw std::invalid_argument("perfect matching requires a square bigraph");
    std::vector<int> matchOfRight(g.rightCount, -1);
    for (int left = 0; left < g.leftCount; ++left) {
        std::vector<char> visited(g.rightCount, 0);
        if (!try_augment(g, left, matchOfRight, visited)) return std::nullopt;
    }
    Matching result;
    result.assign.assign(g.leftCount, -1);
    for (int right = 0; right < g.rightCount; ++right)
        if (matchOfRight[right] >= 0) result.assign[matchOfRight[right]] = right;
    return result;
}

std::vector<int> maximum_matching(const Bigraph& g) {
    std::vector<int> matchOfRight(g.rightCount, -1);
    for (int left = 0; left < g.leftCount; ++left) {
        std::vector<char> visited(g.rightCount, 0);
        try_augment(g, left, matchOfRight, visited);
    }
    std::vector<int> matchOfLeft(g.leftCount, -1);
    for (int right = 0; right < g.rightCount; ++right)
        if (matchOfRight[right] >= 0) matchOfLeft[matchOfRight[right]] = right;
    return matchOfLeft;
}

Matching max_weight_perfect_matching(const std::vector<std::vector<Int>>& weights) {
    const int n = static_cast<int>(weights.size());
    if (n == 0) throw std::invalid_argument("empty weight matrix");
    for (const auto& row : weights) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("weight matrix must be square");
        for (const auto& w : row)
            if (w < 0) throw std::invalid_argument("weights must be non-negative");
    }

    // Perturb so the optimum is unique: scale real weights past the largest
    // possible tiebreak mass, then add a lexicographic bonus that prefers the
    // lowest good index for the lowest agent index.
    Int scale = 1;
    for (int i = 0; i < n; ++i) scale *= n + 1;
    std::vector<std::vector<Int>> adjusted(n, std::vector<Int>(n));
    Int top = 0;
    for (int i = 0; i < n; ++i) {
        Int digit = 1;
        for (int k = 0; k < n - 1 - i; ++k) digit *= n + 1;
        for (int j = 0; j < n; ++j) {
            adjusted[i][j] = weights[i][j] * scale + Int(n - j) * digit;
            top = std::max(top, adjusted[i][j]);
        }
    }

    // Hungarian algorithm on costs (minimization), exact integer potentials.
    std::vector<std::vector<Int>> cost(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cost[i][j] = top - adjusted[i][j];

    Int infinity = 1;
    for (const auto& row : cost)
        for (const auto& c : row) infinity += c;

    std::vector<Int> rowPotential(n + 1, 0), colPotential(n + 1, 0);
    std::vector<int> matchOfCol(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        matchOfCol[0] = i;
        int j0 = 0;
        std::vector<Int> minValue(n + 1, infinity);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            int i0 = matchOfCol[j0], j1 = 0;
            Int delta = infinity;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                Int current = cost[i0 - 1][j - 1] - rowPotential[i0] - colPotential[j];
                if (current < minValue[j]) {
                    minValue[j] = current;
                    way[j] = j0;
                }
                if (minValue[j] < delta) {
                    delta = minValue[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    rowPotential[matchOfCol[j]] += delta;
                    colPotential[j] -= delta;
                } else {
                    minValue[j] -= delta;
                }
            }
            j0 = j1;
        } while (matchOfCol[j0] != 0);
        do {
            int j1 = way[j0];
            matchOfCol[j0] = matchOfCol[j1];
            j0 = j1;
        } while (j0);
    }

    Matching result;
    result.assign.assign(n, -1);
    for (int j = 1; j <= n; ++j)
        if (matchOfCol[j] > 0) result.assign[matchOfCol[j] - 1] = j - 1;
    return result;
}

}  // namespace egal
