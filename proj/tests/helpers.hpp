#pragma once

// Shared graph builders and independent reference implementations for tests.
// The reference closures and checks here stay deliberately naive; they are
// the yardstick the optimized library code is measured against.

#include <algorithm>
#include <vector>

#include "tss/block_cut_tree.hpp"
#include "tss/generators.hpp"
#include "tss/network.hpp"

namespace tss::testing {

inline ThresholdedNetwork path_graph(int n, std::vector<int> theta) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build_network(n, edges, std::move(theta));
}

inline ThresholdedNetwork cycle_graph(int n, std::vector<int> theta) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return build_network(n, edges, std::move(theta));
}

inline ThresholdedNetwork complete_graph(int n, std::vector<int> theta) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return build_network(n, edges, std::move(theta));
}

inline ThresholdedNetwork star_graph(int leaves, std::vector<int> theta) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return build_network(leaves + 1, edges, std::move(theta));
}

// Two triangles sharing vertex 2.
inline ThresholdedNetwork bowtie(std::vector<int> theta) {
    return build_network(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}, std::move(theta));
}

inline ThresholdedNetwork petersen(std::vector<int> theta) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, 5 + i);                // spokes
    }
    return build_network(10, edges, std::move(theta));
}

// K4 minus the edge (0,3): the smallest 2-connected chordal non-complete graph.
inline ThresholdedNetwork diamond(std::vector<int> theta) {
    return build_network(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}, std::move(theta));
}

inline std::vector<int> const_theta(int n, int k) { return std::vector<int>(n, k); }

// Fixpoint closure by full rescans; quadratic and obviously correct.
inline std::vector<char> naive_closure(const ThresholdedNetwork& net,
                                       const std::vector<int>& seeds) {
    std::vector<char> active(net.n, 0);
    for (int s : seeds) active[s] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < net.n; ++v) {
            if (active[v]) continue;
            int cnt = 0;
            for (int w : net.adj[v]) cnt += active[w];
            if (cnt >= net.theta[v]) {
                active[v] = 1;
                changed = true;
            }
        }
    }
    return active;
}

inline bool naive_is_target_set(const ThresholdedNetwork& net, const std::vector<int>& seeds) {
    auto active = naive_closure(net, seeds);
    return std::all_of(active.begin(), active.end(), [](char a) { return a != 0; });
}

// Exhaustive induced-cycle->=4 detection: a vertex subset inducing a
// connected 2-regular subgraph of size >= 4. Usable up to ~15 vertices.
inline bool has_hole_bruteforce(const ThresholdedNetwork& net) {
    int n = net.n;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) < 4) continue;
        bool ok = true;
        int first = -1;
        for (int v = 0; v < n && ok; ++v) {
            if (!(mask >> v & 1)) continue;
            if (first < 0) first = v;
            int d = 0;
            for (int w : net.adj[v]) d += (mask >> w & 1);
            if (d != 2) ok = false;
        }
        if (!ok) continue;
        // connectivity of the induced subgraph
        unsigned seen = 1u << first;
        std::vector<int> stack{first};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : net.adj[v])
                if ((mask >> w & 1) && !(seen >> w & 1)) {
                    seen |= 1u << w;
                    stack.push_back(w);
                }
        }
        if (seen == mask) return true;
    }
    return false;
}

// True iff `cycle` lists an induced chordless cycle of net in order.
inline bool is_induced_cycle(const ThresholdedNetwork& net, const std::vector<int>& cycle) {
    int k = static_cast<int>(cycle.size());
    if (k < 4) return false;
    std::vector<char> in(net.n, 0);
    for (int v : cycle) {
        if (v < 0 || v >= net.n || in[v]) return false;
        in[v] = 1;
    }
    for (int i = 0; i < k; ++i) {
        int u = cycle[i];
        int next = cycle[(i + 1) % k];
        if (!net.has_edge(u, next)) return false;
        int deg_in = 0;
        for (int w : net.adj[u]) deg_in += in[w];
        if (deg_in != 2) return false;
    }
    return true;
}

// Connected Erdos-Renyi-style sample: keeps drawing until connected.
inline ThresholdedNetwork random_connected_graph(SplitMix64& rng, int n, int percent_edge,
                                                 int theta_lo, int theta_hi) {
    while (true) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (static_cast<int>(rng.below(100)) < percent_edge) edges.emplace_back(i, j);
        auto net = build_network(n, edges, const_theta(n, 0));
        if (!is_connected(net)) continue;
        for (int v = 0; v < n; ++v) net.theta[v] = rng.range(theta_lo, theta_hi);
        return net;
    }
}

// Random thresholds in [0, degree+1], the mix the solvers must handle.
inline void randomize_theta_by_degree(SplitMix64& rng, ThresholdedNetwork& net) {
    for (int v = 0; v < net.n; ++v) net.theta[v] = rng.range(0, net.degree(v) + 1);
}

// 2-connected chordal blocks (size >= 3) harvested from generated chordal
// graphs, with their thresholds.
inline std::vector<ThresholdedNetwork> random_2connected_chordal_blocks(SplitMix64& rng,
                                                                        int count, int max_n) {
    std::vector<ThresholdedNetwork> out;
    while (static_cast<int>(out.size()) < count) {
        auto net = gen_chordal(rng.next(), {rng.range(4, max_n), rng.range(2, 4), {1, 2, 3}});
        auto bct = block_cut_tree(net);
        for (std::size_t b = 0; b < bct.blocks.size(); ++b) {
            const auto& verts = bct.blocks[b];
            if (verts.size() < 3) continue;
            std::vector<int> local(net.n, -1);
            for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
            std::vector<std::pair<int, int>> edges;
            for (auto [u, w] : bct.block_edges[b]) edges.emplace_back(local[u], local[w]);
            std::vector<int> theta;
            for (int v : verts) theta.push_back(net.theta[v]);
            out.push_back(build_network(static_cast<int>(verts.size()), edges, std::move(theta)));
            if (static_cast<int>(out.size()) == count) break;
        }
    }
    return out;
}

}  // namespace tss::testing
