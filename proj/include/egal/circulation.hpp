#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace egal {

/// Directed network for circulation with demands. A vertex's demand is its
/// required inflow minus outflow; negative demand marks a net supplier.
/// Capacity std::nullopt means unbounded.
struct CirculationNetwork {
    struct Edge {
        int from = 0;
        int to = 0;
        std::optional<std::int64_t> capacity;
    };

    explicit CirculationNetwork(int vertexCount);
    void set_demand(int vertex, std::int64_t demand);
    /// Returns the edge index, used to read back flows.
    int add_edge(int from, int to, std::optional<std::int64_t> capacity = std::nullopt);

    int vertexCount = 0;
    std::vector<std::int64_t> demand;
    std::vector<Edge> edges;
};

struct CirculationResult {
    bool feasible = false;
    std::vector<std::int64_t> flow;  // per edge, same order as network.edges
};

/// Computes an integer feasible circulation by the standard reduction to
/// single source/sink max flow, or reports infeasibility. Throws
/// std::invalid_argument when demands do not sum to zero.
CirculationResult feasible_circulation(const CirculationNetwork& net);

/// The reduction target, exposed for debugging via the CLI: the max-flow
/// network with super source/sink appended as the last two vertices.
struct TransformedNetwork {
    int source = 0;
    int sink = 0;
    std::vector<CirculationNetwork::Edge> edges;  // all capacities finite
};

TransformedNetwork demand_transform(const CirculationNetwork& net);

}  // namespace egal
