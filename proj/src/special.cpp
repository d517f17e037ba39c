#include "egal/special.hpp"

#include "egal/bigraph.hpp"
#include "egal/birkhoff.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace egal {

bool is_binary(const Instance& inst) {
    for (const auto& row : inst.u)
        for (const auto& v : row)
            if (v != 0 && v != 1) return false;
    return true;
}

bool is_identical(const Instance& inst) {
    for (int i = 1; i < inst.n; ++i)
        if (inst.u[i] != inst.u[0]) return false;
    return true;
}

std::optional<GoodTypePartition> detect_two_good_types(const Instance& inst) {
    std::vector<std::vector<Rational>> columns;
    GoodTypePartition part;
    part.typeOf.resize(inst.m);
    for (int j = 0; j < inst.m; ++j) {
        std::vector<Rational> column(inst.n);
        for (int i = 0; i < inst.n; ++i) column[i] = inst.value(i, j);
        int type = -1;
        for (std::size_t c = 0; c < columns.size(); ++c)
            if (columns[c] == column) type = static_cast<int>(c);
        if (type < 0) {
            if (columns.size() == 2) return std::nullopt;
            columns.push_back(std::move(column));
            type = static_cast<int>(columns.size()) - 1;
        }
        part.typeOf[j] = type;
    }
    return part;
}

namespace {

void require_binary(const Instance& inst) {
    if (!is_binary(inst)) throw std::invalid_argument("valuations must all be 0 or 1");
}

void require_identical(const Instance& inst) {
    if (!is_identical(inst)) throw std::invalid_argument("agents must have identical valuations");
}

void require_partition(const Instance& inst, const GoodTypePartition& part) {
    if (static_cast<int>(part.typeOf.size()) != inst.m)
        throw std::invalid_argument("partition size mismatch");
    // remember the first good of each type; all others must match its column
    int reference[2] = {-1, -1};
    for (int j = 0; j < inst.m; ++j) {
        int type = part.typeOf[j];
        if (type != 0 && type != 1) throw std::invalid_argument("good type must be 0 or 1");
        if (reference[type] < 0) {
            reference[type] = j;
            continue;
        }
        for (int i = 0; i < inst.n; ++i)
            if (inst.value(i, j) != inst.value(i, reference[type]))
                throw std::invalid_argument("goods of one type must be valued identically");
    }
}

// Goods of the top n values under the common valuation, ties to lower index.
std::vector<int> top_goods(const Instance& inst) {
    std::vector<int> order(inst.m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return inst.value(0, a) > inst.value(0, b); });
    order.resize(inst.n);
    return order;
}

}  // namespace

std::vector<int> maximum_matching_goods(const Instance& inst) {
    require_binary(inst);
    Instance padded = pad_goods(inst);
    Bigraph graph(padded.n, padded.m);
    for (int i = 0; i < padded.n; ++i)
        for (int j = 0; j < padded.m; ++j)
            if (padded.value(i, j) == 1) graph.add_edge(i, j);
    std::vector<int> matchOfLeft = maximum_matching(graph);
    std::vector<int> goods;
    for (int i = 0; i < padded.n; ++i)
        if (matchOfLeft[i] >= 0) goods.push_back(matchOfLeft[i]);
    std::sort(goods.begin(), goods.end());
    return goods;
}

BinaryNetwork binary_feasibility_network(const Instance& inst, std::int64_t b) {
    require_binary(inst);
    Instance padded = pad_goods(inst);
    const int n = padded.n;
    const std::int64_t T = padded.rounds;
    BinaryNetwork built;
    built.goods = maximum_matching_goods(padded);
    const std::int64_t coverage = static_cast<std::int64_t>(built.goods.size());

    // agents emit b rounds of value each, matched goods absorb T slots, the
    // slack vertex covers the slots agents leave unused
    const int slack = n + static_cast<int>(built.goods.size());
    built.net = CirculationNetwork(slack + 1);
    for (int i = 0; i < n; ++i) built.net.set_demand(i, -b);
    for (std::size_t j = 0; j < built.goods.size(); ++j)
        built.net.set_demand(n + static_cast<int>(j), T);
    built.net.set_demand(slack, static_cast<std::int64_t>(n) * b - coverage * T);
    for (int i = 0; i < n; ++i)
        for (std::size_t j = 0; j < built.goods.size(); ++j)
            if (padded.value(i, built.goods[j]) == 1) {
                int id = built.net.add_edge(i, n + static_cast<int>(j));
                built.agentEdges.emplace_back(
                    id, i * static_cast<int>(built.goods.size()) + static_cast<int>(j));
            }
    for (std::size_t j = 0; j < built.goods.size(); ++j)
        built.net.add_edge(slack, n + static_cast<int>(j));
    return built;
}

MatchingSequence binary_optimal(const Instance& inst) {
    require_binary(inst);
    Instance padded = pad_goods(inst);
    const int n = padded.n;
    const std::int64_t T = padded.rounds;
    const std::int64_t coverage =
        static_cast<std::int64_t>(maximum_matching_goods(padded).size());

    auto feasible_flow = [&](std::int64_t b) -> std::optional<std::vector<std::int64_t>> {
        if (static_cast<std::int64_t>(n) * b > coverage * T) return std::nullopt;
        if (b == 0) return std::vector<std::int64_t>{};
        BinaryNetwork built = binary_feasibility_network(padded, b);
        CirculationResult result = feasible_circulation(built.net);
        if (!result.feasible) return std::nullopt;
        std::vector<std::int64_t> flat(n * built.goods.size(), 0);
        for (const auto& [id, index] : built.agentEdges) flat[index] = result.flow[id];
        return flat;
    };

    std::int64_t low = 0, high = T;
    while (low < high) {
        std::int64_t mid = low + (high - low + 1) / 2;
        if (feasible_flow(mid)) low = mid;
        else high = mid - 1;
    }

    Allocation alloc(n, padded.m);
    if (low > 0) {
        std::vector<int> goods = maximum_matching_goods(padded);
        auto flat = feasible_flow(low);
        for (int i = 0; i < n; ++i)
            for (std::size_t j = 0; j < goods.size(); ++j)
                alloc.counts[i][goods[j]] = (*flat)[i * goods.size() + j];
    }
    return allocation_to_sequence(alloc, Int(T));
}

namespace {

// Per-agent values of the two types; a type with no realized good borrows
// the other's column so such agents read as indifferent.
std::array<std::vector<Rational>, 2> type_values(const Instance& inst,
                                                 const GoodTypePartition& part) {
    std::array<std::vector<Rational>, 2> typeValue;
    typeValue[0].assign(inst.n, Rational(0));
    typeValue[1].assign(inst.n, Rational(0));
    bool typeSeen[2] = {false, false};
    for (int j = 0; j < inst.m; ++j) {
        int type = part.typeOf[j];
        if (typeSeen[type]) continue;
        typeSeen[type] = true;
        for (int i = 0; i < inst.n; ++i) typeValue[type][i] = inst.value(i, j);
    }
    if (!typeSeen[0]) typeValue[0] = typeValue[1];
    if (!typeSeen[1]) typeValue[1] = typeValue[0];
    return typeValue;
}

}  // namespace

TwoGoodsNetwork two_goods_feasibility_network(const Instance& inst, const GoodTypePartition& part,
                                              const Rational& b) {
    require_partition(inst, part);
    if (inst.m < inst.n)
        throw std::invalid_argument("two-good-types solver requires m >= n; pad goods first");
    const int n = inst.n;
    const int m = inst.m;
    const std::int64_t T = inst.rounds;
    auto typeValue = type_values(inst, part);

    TwoGoodsNetwork built;
    // reject only on strict shortfall; at equality the agent's best good
    // every round still reaches b
    for (int i = 0; i < n; ++i)
        if (Rational(T) * std::max(typeValue[0][i], typeValue[1][i]) < b) {
            built.rejected = true;
            return built;
        }

    // vertices: goods first, then agent vertices, then the source
    std::vector<std::int64_t> vertexSupply;
    for (int i = 0; i < n; ++i) {
        if (typeValue[0][i] == typeValue[1][i]) {
            built.vertexOwner.push_back(i);
            built.vertexKind.push_back(2);
            vertexSupply.push_back(T);
        } else {
            int preferred = typeValue[0][i] > typeValue[1][i] ? 0 : 1;
            const Rational& high = typeValue[preferred][i];
            const Rational& low = typeValue[1 - preferred][i];
            // fewest high-type rounds that still reach b
            Int needed = ceil_div((b - Rational(T) * low) / (high - low));
            if (needed < 0) needed = 0;
            std::int64_t k = static_cast<std::int64_t>(needed);
            built.vertexOwner.push_back(i);
            built.vertexKind.push_back(preferred);
            vertexSupply.push_back(k);
            built.vertexOwner.push_back(i);
            built.vertexKind.push_back(2);
            vertexSupply.push_back(T - k);
        }
    }
    const int source = m + static_cast<int>(built.vertexOwner.size());
    built.net = CirculationNetwork(source + 1);
    for (int j = 0; j < m; ++j) built.net.set_demand(j, T);
    for (std::size_t v = 0; v < built.vertexOwner.size(); ++v)
        built.net.set_demand(m + static_cast<int>(v), -vertexSupply[v]);
    built.net.set_demand(source, -T * (m - n));

    built.edgeId.assign(built.vertexOwner.size(), std::vector<int>(m, -1));
    for (std::size_t v = 0; v < built.vertexOwner.size(); ++v)
        for (int j = 0; j < m; ++j)
            if (built.vertexKind[v] == 2 || built.vertexKind[v] == part.typeOf[j])
                built.edgeId[v][j] = built.net.add_edge(m + static_cast<int>(v), j);
    for (int j = 0; j < m; ++j) built.net.add_edge(source, j);
    return built;
}

MatchingSequence two_goods_optimal(const Instance& inst, const GoodTypePartition& part) {
    require_partition(inst, part);
    if (inst.m < inst.n)
        throw std::invalid_argument("two-good-types solver requires m >= n; pad goods first");
    const int n = inst.n;
    const int m = inst.m;
    const std::int64_t T = inst.rounds;
    auto typeValue = type_values(inst, part);

    // OPT is some agent's mixture value k*high + (T-k)*low, so searching the
    // candidate grid is exhaustive
    std::vector<Rational> candidates{Rational(0)};
    for (int i = 0; i < n; ++i)
        for (std::int64_t k = 0; k <= T; ++k)
            candidates.push_back(Rational(k) * typeValue[0][i] + Rational(T - k) * typeValue[1][i]);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    auto try_candidate = [&](const Rational& b) -> std::optional<Allocation> {
        TwoGoodsNetwork built = two_goods_feasibility_network(inst, part, b);
        if (built.rejected) return std::nullopt;
        CirculationResult result = feasible_circulation(built.net);
        if (!result.feasible) return std::nullopt;
        Allocation alloc(n, m);
        for (std::size_t v = 0; v < built.vertexOwner.size(); ++v)
            for (int j = 0; j < m; ++j)
                if (built.edgeId[v][j] >= 0)
                    alloc.counts[built.vertexOwner[v]][j] += result.flow[built.edgeId[v][j]];
        return alloc;
    };

    // largest feasible candidate; feasibility is antitone in b
    std::size_t low = 0, high = candidates.size() - 1;
    while (low < high) {
        std::size_t mid = low + (high - low + 1) / 2;
        if (try_candidate(candidates[mid])) low = mid;
        else high = mid - 1;
    }
    Allocation best = *try_candidate(candidates[low]);
    return allocation_to_sequence(best, Int(T));
}

MatchingSequence identical_exact(const Instance& inst) {
    require_identical(inst);
    Instance padded = pad_goods(inst);
    if (padded.rounds % padded.n != 0)
        throw std::invalid_argument("identical_exact needs T divisible by n; use identical_greedy");
    std::vector<int> top = top_goods(padded);
    MatchingSequence seq;
    for (int t = 0; t < padded.rounds; ++t) {
        Matching matching;
        matching.assign.resize(padded.n);
        for (int i = 0; i < padded.n; ++i) matching.assign[i] = top[(i + t) % padded.n];
        seq.rounds.push_back(std::move(matching));
    }
    return seq;
}

MatchingSequence identical_greedy(const Instance& inst) {
    require_identical(inst);
    Instance padded = pad_goods(inst);
    const int n = padded.n;
    std::vector<int> top = top_goods(padded);
    std::vector<Rational> cumulative(n, Rational(0));
    MatchingSequence seq;
    for (int t = 0; t < padded.rounds; ++t) {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return cumulative[a] < cumulative[b]; });
        Matching matching;
        matching.assign.resize(n);
        // identical valuations: the p-th poorest agent takes the p-th best good
        for (int p = 0; p < n; ++p) {
            matching.assign[order[p]] = top[p];
            cumulative[order[p]] += padded.value(0, top[p]);
        }
        seq.rounds.push_back(std::move(matching));
    }
    return seq;
}

Gap identical_gap(const Instance& inst) {
    require_identical(inst);
    Instance padded = pad_goods(inst);
    std::vector<int> top = top_goods(padded);
    return Gap{padded.value(0, top.front()) - padded.value(0, top.back())};
}

}  // namespace egal
