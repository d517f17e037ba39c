#include "egal/oracle.hpp"

#include <algorithm>
#include <limits>

namespace egal {

namespace {

constexpr std::int64_t kValueGuard = std::int64_t(1) << 60;

// The search runs on exact integers: valuations are multiplied by the least
// common denominator once, and results divided back at the end.
struct ScaledInstance {
    Instance padded;
    Int denominator = 1;
    std::vector<std::vector<std::int64_t>> values;

    explicit ScaledInstance(const Instance& inst) : padded(pad_goods(inst)) {
        for (const auto& row : padded.u)
            for (const auto& value : row)
                denominator = lcm(denominator, Int(boost::multiprecision::denominator(value)));
        values.assign(padded.n, std::vector<std::int64_t>(padded.m));
        for (int i = 0; i < padded.n; ++i)
            for (int j = 0; j < padded.m; ++j) {
                Rational scaled = padded.value(i, j) * Rational(denominator);
                Int whole = numerator(scaled);
                if (boost::multiprecision::denominator(scaled) != 1 || whole < 0 ||
                    whole > kValueGuard / (padded.rounds + 1))
                    throw std::invalid_argument("valuations too large for the oracle");
                values[i][j] = static_cast<std::int64_t>(whole);
            }
    }

    Rational unscale(std::int64_t value) const { return Rational(Int(value), denominator); }
};

struct Node {
    std::vector<std::int64_t> values;
    int parent = -1;    // index into the previous layer
    int matching = -1;  // matching applied to reach this node
};

std::int64_t node_min(const Node& node) {
    return *std::min_element(node.values.begin(), node.values.end());
}

bool dominates(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

// Deduplicates equal value vectors (first occurrence wins) and removes
// strictly dominated ones; interchangeability follows from additivity of
// the cumulative values.
void prune_layer(std::vector<Node>& layer) {
    std::vector<int> order(layer.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (layer[a].values != layer[b].values) return layer[a].values > layer[b].values;
        return a < b;
    });

    std::vector<Node> kept;
    for (int idx : order) {
        Node& candidate = layer[idx];
        bool covered = false;
        for (const Node& winner : kept)
            if (dominates(winner.values, candidate.values)) {
                covered = true;
                break;
            }
        if (!covered) kept.push_back(std::move(candidate));
    }
    layer = std::move(kept);
}

struct Search {
    const ScaledInstance& scaled;
    const OracleBudget& budget;
    std::vector<Matching> matchings;
    std::vector<std::vector<std::int64_t>> increments;  // per matching, per agent
    std::int64_t expanded = 0;

    Search(const ScaledInstance& instance, const OracleBudget& limits)
        : scaled(instance), budget(limits) {
        matchings = all_matchings(instance.padded.n, instance.padded.m, limits.maxMatchings);
        increments.reserve(matchings.size());
        for (const Matching& matching : matchings) {
            std::vector<std::int64_t> inc(instance.padded.n);
            for (int i = 0; i < instance.padded.n; ++i)
                inc[i] = instance.values[i][matching(i)];
            increments.push_back(std::move(inc));
        }
    }

    std::vector<Node> expand(const std::vector<Node>& layer) {
        std::vector<Node> next;
        next.reserve(layer.size() * matchings.size());
        for (int p = 0; p < static_cast<int>(layer.size()); ++p) {
            for (int k = 0; k < static_cast<int>(matchings.size()); ++k) {
                if (++expanded > budget.maxStates)
                    throw BudgetExceeded("oracle state budget exceeded");
                Node child;
                child.values = layer[p].values;
                for (std::size_t i = 0; i < child.values.size(); ++i)
                    child.values[i] += increments[k][i];
                child.parent = p;
                child.matching = k;
                next.push_back(std::move(child));
            }
        }
        return next;
    }

    MatchingSequence backtrack(const std::vector<std::vector<Node>>& layers, int finalIndex) const {
        MatchingSequence seq;
        int layerIndex = static_cast<int>(layers.size()) - 1;
        int nodeIndex = finalIndex;
        std::vector<int> chosen;
        while (layerIndex >= 1) {
            const Node& node = layers[layerIndex][nodeIndex];
            chosen.push_back(node.matching);
            nodeIndex = node.parent;
            --layerIndex;
        }
        std::reverse(chosen.begin(), chosen.end());
        for (int k : chosen) seq.rounds.push_back(matchings[k]);
        return seq;
    }
};

int best_index(const std::vector<Node>& layer) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(layer.size()); ++i)
        if (node_min(layer[i]) > node_min(layer[best])) best = i;
    return best;
}

std::vector<std::vector<Node>> run_layers(Search& search, int t) {
    std::vector<std::vector<Node>> layers;
    layers.push_back({Node{std::vector<std::int64_t>(search.scaled.padded.n, 0), -1, -1}});
    for (int round = 1; round <= t; ++round) {
        std::vector<Node> next = search.expand(layers.back());
        prune_layer(next);
        layers.push_back(std::move(next));
    }
    return layers;
}

}  // namespace

std::vector<Matching> all_matchings(int n, int m, std::int64_t budget) {
    if (n <= 0 || m < n) throw std::invalid_argument("need 1 <= n <= m");
    std::int64_t count = 1;
    for (int i = 0; i < n; ++i) {
        count *= m - i;
        if (count > budget) throw BudgetExceeded("matching enumeration budget exceeded");
    }
    std::vector<Matching> result;
    result.reserve(static_cast<std::size_t>(count));
    std::vector<int> assign(n, -1);
    std::vector<char> used(m, 0);
    auto recurse = [&](auto&& self, int agent) -> void {
        if (agent == n) {
            result.emplace_back(assign);
            return;
        }
        for (int good = 0; good < m; ++good) {
            if (used[good]) continue;
            used[good] = 1;
            assign[agent] = good;
            self(self, agent + 1);
            used[good] = 0;
        }
    };
    recurse(recurse, 0);
    return result;
}

Rational brute_opt(const Instance& inst, int t, const OracleBudget& budget) {
    return brute_opt_profile(inst, t, budget).back();
}

std::vector<Rational> brute_opt_profile(const Instance& inst, int t, const OracleBudget& budget) {
    if (t < 1) throw std::invalid_argument("round must be positive");
    ScaledInstance scaled(inst);
    Search search(scaled, budget);
    auto layers = run_layers(search, t);
    std::vector<Rational> profile;
    for (int round = 1; round <= t; ++round)
        profile.push_back(scaled.unscale(node_min(layers[round][best_index(layers[round])])));
    return profile;
}

MatchingSequence brute_optimal_sequence(const Instance& inst, int t, const OracleBudget& budget) {
    if (t < 1) throw std::invalid_argument("round must be positive");
    ScaledInstance scaled(inst);
    Search search(scaled, budget);
    auto layers = run_layers(search, t);
    return search.backtrack(layers, best_index(layers.back()));
}

AnytimeWitness anytime_exists(const Instance& inst, int T, const OracleBudget& budget) {
    if (T < 1) throw std::invalid_argument("round must be positive");
    ScaledInstance scaled(inst);
    Search search(scaled, budget);

    // per-round optima first, then a forward frontier of prefixes that hit
    // every optimum so far
    auto optLayers = run_layers(search, T);
    std::vector<std::int64_t> optimum;
    for (int round = 1; round <= T; ++round)
        optimum.push_back(node_min(optLayers[round][best_index(optLayers[round])]));

    std::vector<std::vector<Node>> layers;
    layers.push_back({Node{std::vector<std::int64_t>(scaled.padded.n, 0), -1, -1}});
    for (int round = 1; round <= T; ++round) {
        std::vector<Node> next = search.expand(layers.back());
        std::erase_if(next, [&](const Node& node) { return node_min(node) != optimum[round - 1]; });
        prune_layer(next);
        if (next.empty()) return {};
        layers.push_back(std::move(next));
    }
    return {true, search.backtrack(layers, 0)};
}

std::vector<std::pair<Matching, std::vector<Rational>>> pareto_enumerate(
    const Instance& inst, const OracleBudget& budget) {
    Instance padded = pad_goods(inst);
    std::vector<Matching> matchings = all_matchings(padded.n, padded.m, budget.maxMatchings);
    std::vector<std::vector<Rational>> profiles;
    profiles.reserve(matchings.size());
    for (const Matching& matching : matchings) {
        std::vector<Rational> profile(padded.n);
        for (int i = 0; i < padded.n; ++i) profile[i] = padded.value(i, matching(i));
        profiles.push_back(std::move(profile));
    }

    std::vector<std::pair<Matching, std::vector<Rational>>> result;
    for (std::size_t a = 0; a < matchings.size(); ++a) {
        bool dominated = false;
        for (std::size_t b = 0; b < matchings.size() && !dominated; ++b) {
            if (a == b) continue;
            bool allGeq = true, someStrict = false;
            for (int i = 0; i < padded.n; ++i) {
                if (profiles[b][i] < profiles[a][i]) allGeq = false;
                if (profiles[b][i] > profiles[a][i]) someStrict = true;
            }
            dominated = allGeq && someStrict;
        }
        if (!dominated) result.emplace_back(matchings[a], profiles[a]);
    }
    return result;
}

}  // namespace egal
