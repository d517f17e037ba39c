#include "egal/corpus.hpp"

namespace egal {

Instance random_instance(DeterministicRng& rng, int n, int m, int T, int maxValue) {
    std::vector<std::vector<Rational>> u(n, std::vector<Rational>(m));
    for (auto& row : u)
        for (auto& v : row) v = Rational(rng.range(0, maxValue));
    return Instance(n, m, T, std::move(u));
}

Instance random_binary_instance(DeterministicRng& rng, int n, int m, int T) {
    return random_instance(rng, n, m, T, 1);
}

Instance random_two_type_instance(DeterministicRng& rng, int n, int m, int T, int maxValue) {
    std::vector<Rational> typeValue[2];
    for (auto& values : typeValue) {
        values.resize(n);
        for (auto& v : values) v = Rational(rng.range(0, maxValue));
    }
    std::vector<std::vector<Rational>> u(n, std::vector<Rational>(m));
    for (int j = 0; j < m; ++j) {
        int type = static_cast<int>(rng.range(0, 1));
        for (int i = 0; i < n; ++i) u[i][j] = typeValue[type][i];
    }
    return Instance(n, m, T, std::move(u));
}

Instance random_identical_instance(DeterministicRng& rng, int n, int m, int T, int maxValue) {
    std::vector<Rational> row(m);
    for (auto& v : row) v = Rational(rng.range(0, maxValue));
    std::vector<std::vector<Rational>> u(n, row);
    return Instance(n, m, T, std::move(u));
}

Allocation random_feasible_allocation(DeterministicRng& rng, int n, int m, int T) {
    Allocation alloc(n, m);
    std::vector<Int> rowSum(n, 0), colSum(m, 0);
    const int attempts = 4 * n * T;
    for (int step = 0; step < attempts; ++step) {
        int i = static_cast<int>(rng.range(0, n - 1));
        int j = static_cast<int>(rng.range(0, m - 1));
        if (rowSum[i] < T && colSum[j] < T) {
            ++alloc.counts[i][j];
            ++rowSum[i];
            ++colSum[j];
        }
    }
    return alloc;
}

}  // namespace egal
