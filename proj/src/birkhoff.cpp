#include "egal/birkhoff.hpp"

#include "egal/bigraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace egal {

ScaledBistochastic ScaledBistochastic::checked(std::vector<std::vector<Int>> entries, Int scale) {
    const int size = static_cast<int>(entries.size());
    if (size == 0 || scale <= 0) throw std::invalid_argument("empty matrix or non-positive scale");
    for (int i = 0; i < size; ++i) {
        if (static_cast<int>(entries[i].size()) != size)
            throw std::invalid_argument("matrix must be square");
        Int rowSum = 0;
        for (const Int& e : entries[i]) {
            if (e < 0) throw std::invalid_argument("entries must be non-negative");
            rowSum += e;
        }
        if (rowSum != scale)
            throw std::invalid_argument("row " + std::to_string(i) + " does not sum to the scale");
    }
    for (int j = 0; j < size; ++j) {
        Int colSum = 0;
        for (int i = 0; i < size; ++i) colSum += entries[i][j];
        if (colSum != scale)
            throw std::invalid_argument("column " + std::to_string(j) + " does not sum to the scale");
    }
    return ScaledBistochastic{size, std::move(scale), std::move(entries)};
}

FractionalBistochastic FractionalBistochastic::checked(std::vector<std::vector<Rational>> entries) {
    const int size = static_cast<int>(entries.size());
    if (size == 0) throw std::invalid_argument("empty matrix");
    for (int i = 0; i < size; ++i) {
        if (static_cast<int>(entries[i].size()) != size)
            throw std::invalid_argument("matrix must be square");
        Rational rowSum = 0;
        for (const Rational& e : entries[i]) {
            if (e < 0) throw std::invalid_argument("entries must be non-negative");
            rowSum += e;
        }
        if (rowSum != 1)
            throw std::invalid_argument("row " + std::to_string(i) + " does not sum to 1");
    }
    for (int j = 0; j < size; ++j) {
        Rational colSum = 0;
        for (int i = 0; i < size; ++i) colSum += entries[i][j];
        if (colSum != 1)
            throw std::invalid_argument("column " + std::to_string(j) + " does not sum to 1");
    }
    return FractionalBistochastic{size, std::move(entries)};
}

Rational BirkhoffDecomposition::coefficient_sum() const {
    Rational total = 0;
    for (const Term& term : terms) total += term.coefficient;
    return total;
}

ScaledBistochastic complete_to_bistochastic(const Allocation& alloc, Int T) {
    const int n = alloc.agents();
    const int m = alloc.goods();
    if (T <= 0) throw std::invalid_argument("scale must be positive");
    if (m < n) throw std::invalid_argument("allocation needs at least as many goods as agents");

    std::vector<std::vector<Int>> matrix(m, std::vector<Int>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) matrix[i][j] = alloc.counts[i][j];

    std::vector<Int> rowSum(m, 0), colSum(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            rowSum[i] += matrix[i][j];
            colSum[j] += matrix[i][j];
        }
    for (int i = 0; i < n; ++i)
        if (rowSum[i] > T)
            throw std::invalid_argument("allocation row " + std::to_string(i) + " exceeds the scale");
    for (int j = 0; j < m; ++j)
        if (colSum[j] > T)
            throw std::invalid_argument("allocation column " + std::to_string(j) + " exceeds the scale");

    // Fill the first deficient (row, column) pair by the smaller of the two
    // deficits; every step completes a row or a column, so at most 2m steps.
    while (true) {
        int row = -1, col = -1;
        for (int i = 0; i < m && row < 0; ++i)
            if (rowSum[i] < T) row = i;
        for (int j = 0; j < m && col < 0; ++j)
            if (colSum[j] < T) col = j;
        if (row < 0 && col < 0) break;
        if (row < 0 || col < 0)
            throw std::logic_error("deficient row without deficient column");
        Int increment = std::min(T - rowSum[row], T - colSum[col]);
        matrix[row][col] += increment;
        rowSum[row] += increment;
        colSum[col] += increment;
    }
    return ScaledBistochastic::checked(std::move(matrix), T);
}

namespace {

// Shared skeleton of Birkhoff's algorithm over an exact field type.
template <typename Entry>
BirkhoffDecomposition birkhoff_loop(std::vector<std::vector<Entry>> residual) {
    const int size = static_cast<int>(residual.size());
    const int termBound = size * size - size + 1;
    BirkhoffDecomposition decomposition;
    while (true) {
        Bigraph support(size, size);
        bool any = false;
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j)
                if (residual[i][j] > 0) {
                    support.add_edge(i, j);
                    any = true;
                }
        if (!any) break;
        auto matching = perfect_matching(support);
        if (!matching)
            throw std::logic_error("bistochastic support lost Hall's condition; input corrupt");
        Entry coefficient = residual[0][(*matching)(0)];
        for (int i = 1; i < size; ++i)
            coefficient = std::min(coefficient, residual[i][(*matching)(i)]);
        for (int i = 0; i < size; ++i) residual[i][(*matching)(i)] -= coefficient;
        decomposition.terms.push_back({Rational(coefficient), *matching});
        if (decomposition.term_count() > termBound)
            throw std::logic_error("Birkhoff term bound exceeded; input corrupt");
    }
    return decomposition;
}

}  // namespace

BirkhoffDecomposition decompose(const ScaledBistochastic& matrix) {
    ScaledBistochastic::checked(matrix.entries, matrix.scale);
    return birkhoff_loop(matrix.entries);
}

BirkhoffDecomposition decompose(const FractionalBistochastic& matrix) {
    FractionalBistochastic::checked(matrix.entries);
    return birkhoff_loop(matrix.entries);
}

MatchingSequence allocation_to_sequence(const Allocation& alloc, Int T) {
    const int agents = alloc.agents();
    ScaledBistochastic completed = complete_to_bistochastic(alloc, T);
    BirkhoffDecomposition decomposition = decompose(completed);
    MatchingSequence seq;
    for (const auto& term : decomposition.terms) {
        if (!is_integer(term.coefficient) || term.coefficient <= 0)
            throw std::logic_error("integer decomposition produced a non-integer coefficient");
        Int copies = numerator(term.coefficient);
        Matching projected;
        projected.assign.assign(term.matching.assign.begin(), term.matching.assign.begin() + agents);
        for (Int c = 0; c < copies; ++c) seq.rounds.push_back(projected);
    }
    if (Int(seq.length()) != T)
        throw std::logic_error("allocation_to_sequence produced wrong length");
    return seq;
}

}  // namespace egal
