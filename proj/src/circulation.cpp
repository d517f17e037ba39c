#include "egal/circulation.hpp"

#include <limits>
#include <queue>
#include <stdexcept>

namespace egal {

CirculationNetwork::CirculationNetwork(int count) : vertexCount(count), demand(count, 0) {
    if (count <= 0) throw std::invalid_argument("network needs at least one vertex");
}

void CirculationNetwork::set_demand(int vertex, std::int64_t value) {
    if (vertex < 0 || vertex >= vertexCount) throw std::invalid_argument("vertex out of range");
    demand[vertex] = value;
}

int CirculationNetwork::add_edge(int from, int to, std::optional<std::int64_t> capacity) {
    if (from < 0 || from >= vertexCount || to < 0 || to >= vertexCount)
        throw std::invalid_argument("edge endpoint out of range");
    if (capacity && *capacity < 0) throw std::invalid_argument("capacity must be non-negative");
    edges.push_back({from, to, capacity});
    return static_cast<int>(edges.size()) - 1;
}

TransformedNetwork demand_transform(const CirculationNetwork& net) {
    std::int64_t positiveTotal = 0;
    for (std::int64_t d : net.demand)
        if (d > 0) positiveTotal += d;

    TransformedNetwork out;
    out.source = net.vertexCount;
    out.sink = net.vertexCount + 1;
    // An unbounded edge never needs to carry more than the total supply once
    // cycles are cancelled, so the positive demand total is a safe finite cap.
    for (const auto& edge : net.edges) {
        std::int64_t cap = edge.capacity ? *edge.capacity : positiveTotal;
        out.edges.push_back({edge.from, edge.to, cap});
    }
    for (int v = 0; v < net.vertexCount; ++v) {
        if (net.demand[v] < 0) out.edges.push_back({out.source, v, -net.demand[v]});
        else if (net.demand[v] > 0) out.edges.push_back({v, out.sink, net.demand[v]});
    }
    return out;
}

namespace {

// Edmonds-Karp. Keeps flows integral for integral capacities.
struct MaxFlow {
    struct Arc {
        int to;
        std::int64_t capacity;
        int reverse;
    };
    std::vector<std::vector<Arc>> graph;

    explicit MaxFlow(int vertices) : graph(vertices) {}

    std::pair<int, int> add(int from, int to, std::int64_t capacity) {
        graph[from].push_back({to, capacity, static_cast<int>(graph[to].size())});
        graph[to].push_back({from, 0, static_cast<int>(graph[from].size()) - 1});
        return {from, static_cast<int>(graph[from].size()) - 1};
    }

    std::int64_t run(int source, int sink) {
        std::int64_t total = 0;
        while (true) {
            std::vector<int> prevVertex(graph.size(), -1), prevArc(graph.size(), -1);
            prevVertex[source] = source;
            std::queue<int> frontier;
            frontier.push(source);
            while (!frontier.empty() && prevVertex[sink] < 0) {
                int v = frontier.front();
                frontier.pop();
                for (int a = 0; a < static_cast<int>(graph[v].size()); ++a) {
                    const Arc& arc = graph[v][a];
                    if (arc.capacity > 0 && prevVertex[arc.to] < 0) {
                        prevVertex[arc.to] = v;
                        prevArc[arc.to] = a;
                        frontier.push(arc.to);
                    }
                }
            }
            if (prevVertex[sink] < 0) break;
            std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
            for (int v = sink; v != source; v = prevVertex[v])
                bottleneck = std::min(bottleneck, graph[prevVertex[v]][prevArc[v]].capacity);
            for (int v = sink; v != source; v = prevVertex[v]) {
                Arc& arc = graph[prevVertex[v]][prevArc[v]];
                arc.capacity -= bottleneck;
                graph[arc.to][arc.reverse].capacity += bottleneck;
            }
            total += bottleneck;
        }
        return total;
    }
};

}  // namespace

CirculationResult feasible_circulation(const CirculationNetwork& net) {
    std::int64_t demandSum = 0;
    for (std::int64_t d : net.demand) demandSum += d;
    if (demandSum != 0) throw std::invalid_argument("vertex demands must sum to zero");

    TransformedNetwork transformed = demand_transform(net);
    MaxFlow solver(net.vertexCount + 2);
    std::vector<std::pair<int, int>> handles;
    handles.reserve(net.edges.size());
    std::int64_t required = 0;
    for (std::size_t e = 0; e < transformed.edges.size(); ++e) {
        const auto& edge = transformed.edges[e];
        auto handle = solver.add(edge.from, edge.to, *edge.capacity);
        if (e < net.edges.size()) handles.push_back(handle);
        if (edge.from == transformed.source) required += *edge.capacity;
    }

    CirculationResult result;
    if (solver.run(transformed.source, transformed.sink) != required) return result;
    result.feasible = true;
    result.flow.reserve(net.edges.size());
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        const auto& [vertex, arc] = handles[e];
        result.flow.push_back(*transformed.edges[e].capacity - solver.graph[vertex][arc].capacity);
    }
    return result;
}

}  // namespace egal
