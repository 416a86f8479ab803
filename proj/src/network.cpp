#include "tss/network.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace tss {

bool ThresholdedNetwork::has_edge(int u, int v) const {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

long long ThresholdedNetwork::edge_count() const {
    long long deg_sum = 0;
    for (const auto& a : adj) deg_sum += static_cast<long long>(a.size());
    return deg_sum / 2;
}

std::vector<std::pair<int, int>> ThresholdedNetwork::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < n; ++u)
        for (int w : adj[u])
            if (u < w) out.emplace_back(u, w);
    return out;
}

ThresholdedNetwork build_network(int n, const std::vector<std::pair<int, int>>& edges,
                                 std::vector<int> theta) {
    if (n < 0) throw ValidationError("vertex count must be nonnegative");
    if (static_cast<int>(theta.size()) != n)
        throw ValidationError("threshold vector has " + std::to_string(theta.size()) +
                              " entries for " + std::to_string(n) + " vertices");
    ThresholdedNetwork net;
    net.n = n;
    net.adj.assign(n, {});
    net.theta = std::move(theta);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an out-of-range endpoint");
        if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
        net.adj[u].push_back(v);
        net.adj[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& a = net.adj[v];
        std::sort(a.begin(), a.end());
        auto dup = std::adjacent_find(a.begin(), a.end());
        if (dup != a.end())
            throw ValidationError("duplicate edge (" + std::to_string(std::min(v, *dup)) + "," +
                                  std::to_string(std::max(v, *dup)) + ")");
    }
    return net;
}

std::optional<int> distance(const ThresholdedNetwork& net, int u, int v) {
    if (u < 0 || u >= net.n || v < 0 || v >= net.n)
        throw ValidationError("distance: vertex id out of range");
    if (u == v) return 0;
    std::vector<int> dist(net.n, -1);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int w : net.adj[x]) {
            if (dist[w] >= 0) continue;
            dist[w] = dist[x] + 1;
            if (w == v) return dist[w];
            q.push(w);
        }
    }
    return std::nullopt;
}

std::optional<std::pair<int, int>> find_disconnection(const ThresholdedNetwork& net) {
    if (net.n <= 1) return std::nullopt;
    std::vector<char> seen(net.n, 0);
    std::queue<int> q;
    seen[0] = 1;
    q.push(0);
    int reached = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int w : net.adj[x]) {
            if (seen[w]) continue;
            seen[w] = 1;
            ++reached;
            q.push(w);
        }
    }
    if (reached == net.n) return std::nullopt;
    for (int v = 0; v < net.n; ++v)
        if (!seen[v]) return std::make_pair(0, v);
    return std::nullopt;
}

}  // namespace tss
