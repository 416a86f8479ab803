#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tss/errors.hpp"

namespace tss {

/// A simple undirected graph with one integer threshold per vertex.
/// Vertex ids are 0..n-1, adjacency lists are sorted and duplicate-free.
/// Thresholds may be <= 0 (the vertex activates unconditionally after time 0)
/// or larger than the degree (the vertex can only be activated by seeding it).
struct ThresholdedNetwork {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<int> theta;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    long long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;
};

/// Validates and canonicalizes the input. Rejects self-loops, out-of-range
/// ids, duplicate edges and a threshold vector of the wrong length.
ThresholdedNetwork build_network(int n, const std::vector<std::pair<int, int>>& edges,
                                 std::vector<int> theta);

/// BFS distance between u and v; nullopt when they lie in different components.
std::optional<int> distance(const ThresholdedNetwork& net, int u, int v);

/// Representatives of two distinct components, or nullopt if connected.
/// An empty graph counts as connected.
std::optional<std::pair<int, int>> find_disconnection(const ThresholdedNetwork& net);

inline bool is_connected(const ThresholdedNetwork& net) {
    return !find_disconnection(net).has_value();
}

}  // namespace tss
