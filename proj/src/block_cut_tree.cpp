#include "tss/block_cut_tree.hpp"

#include <algorithm>
#include <set>

#include "tss/chordality.hpp"

namespace tss {

namespace {

// Iterative Hopcroft-Tarjan biconnected components; recursion would overflow
// on path-like inputs of the sizes the cactus solver targets.
void biconnected_components(const ThresholdedNetwork& net,
                            std::vector<std::vector<std::pair<int, int>>>& comp_edges) {
    int n = net.n;
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), next_child(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    std::vector<int> call_stack;
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        call_stack.push_back(root);
        disc[root] = low[root] = timer++;
        while (!call_stack.empty()) {
            int u = call_stack.back();
            bool descended = false;
            while (next_child[u] < static_cast<int>(net.adj[u].size())) {
                int w = net.adj[u][next_child[u]++];
                if (disc[w] < 0) {
                    parent[w] = u;
                    disc[w] = low[w] = timer++;
                    edge_stack.emplace_back(u, w);
                    call_stack.push_back(w);
                    descended = true;
                    break;
                }
                if (w != parent[u] && disc[w] < disc[u]) {
                    edge_stack.emplace_back(u, w);
                    low[u] = std::min(low[u], disc[w]);
                }
            }
            if (descended) continue;
            call_stack.pop_back();
            int p = parent[u];
            if (p < 0) continue;
            low[p] = std::min(low[p], low[u]);
            if (low[u] >= disc[p]) {
                // Edges down to (p,u) form one block.
                std::vector<std::pair<int, int>> block;
                while (true) {
                    auto e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e);
                    if (e.first == p && e.second == u) break;
                }
                comp_edges.push_back(std::move(block));
            }
        }
    }
}

}  // namespace

BlockCutTree block_cut_tree(const ThresholdedNetwork& net) {
    if (auto split = find_disconnection(net))
        throw DisconnectedError(split->first, split->second);

    BlockCutTree bct;
    bct.is_cut.assign(net.n, 0);
    if (net.n == 0) return bct;
    if (net.n == 1) {
        bct.blocks.push_back({0});
        bct.block_edges.emplace_back();
        bct.cuts_of_block.emplace_back();
        bct.processing_order.push_back({0, -1});
        return bct;
    }

    std::vector<std::vector<std::pair<int, int>>> comp_edges;
    biconnected_components(net, comp_edges);

    std::vector<int> block_count(net.n, 0);
    for (auto& edges : comp_edges) {
        std::vector<int> verts;
        for (auto& [u, w] : edges) {
            verts.push_back(u);
            verts.push_back(w);
            if (u > w) std::swap(u, w);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::sort(edges.begin(), edges.end());
        for (int v : verts) ++block_count[v];
        bct.blocks.push_back(std::move(verts));
        bct.block_edges.push_back(std::move(edges));
    }

    for (int v = 0; v < net.n; ++v)
        if (block_count[v] >= 2) {
            bct.is_cut[v] = 1;
            bct.cut_vertices.push_back(v);
        }
    std::vector<int> cut_index(net.n, -1);
    for (std::size_t i = 0; i < bct.cut_vertices.size(); ++i)
        cut_index[bct.cut_vertices[i]] = static_cast<int>(i);
    bct.blocks_of_cut.assign(bct.cut_vertices.size(), {});
    bct.cuts_of_block.assign(bct.blocks.size(), {});
    for (std::size_t b = 0; b < bct.blocks.size(); ++b)
        for (int v : bct.blocks[b])
            if (bct.is_cut[v]) {
                bct.cuts_of_block[b].push_back(v);
                bct.blocks_of_cut[cut_index[v]].push_back(static_cast<int>(b));
            }

    // Peel pendant blocks, smallest minimum vertex id first. A cut vertex
    // stays live while at least two of its blocks remain.
    std::vector<int> live_cuts_of_block(bct.blocks.size(), 0);
    std::vector<int> live_blocks_of_cut(bct.cut_vertices.size(), 0);
    for (std::size_t b = 0; b < bct.blocks.size(); ++b)
        live_cuts_of_block[b] = static_cast<int>(bct.cuts_of_block[b].size());
    for (std::size_t c = 0; c < bct.cut_vertices.size(); ++c)
        live_blocks_of_cut[c] = static_cast<int>(bct.blocks_of_cut[c].size());

    std::vector<char> peeled(bct.blocks.size(), 0);
    std::set<std::pair<int, int>> pendant;  // (min vertex id, block)
    for (std::size_t b = 0; b < bct.blocks.size(); ++b)
        if (live_cuts_of_block[b] <= 1) pendant.insert({bct.blocks[b][0], static_cast<int>(b)});

    int remaining = static_cast<int>(bct.blocks.size());
    while (remaining > 1) {
        auto [key, b] = *pendant.begin();
        pendant.erase(pendant.begin());
        peeled[b] = 1;
        --remaining;
        int attach = -1;
        for (int v : bct.cuts_of_block[b]) {
            int c = cut_index[v];
            if (live_blocks_of_cut[c] >= 2) attach = v;
        }
        if (attach == -1) throw Error("internal: pendant block without a live cut vertex");
        bct.processing_order.push_back({b, attach});
        for (int v : bct.cuts_of_block[b]) {
            int c = cut_index[v];
            if (--live_blocks_of_cut[c] == 1) {
                // v is no longer a separator; its last block may become pendant.
                for (int nb : bct.blocks_of_cut[c]) {
                    if (peeled[nb]) continue;
                    if (--live_cuts_of_block[nb] <= 1 && remaining > 1)
                        pendant.insert({bct.blocks[nb][0], nb});
                }
            }
        }
    }
    for (std::size_t b = 0; b < bct.blocks.size(); ++b)
        if (!peeled[b]) bct.processing_order.push_back({static_cast<int>(b), -1});
    return bct;
}

BlockClass classify_block(const ThresholdedNetwork& net, const std::vector<int>& block) {
    if (block.size() == 2) return BlockClass::Edge;
    std::vector<char> in_block(net.n, 0);
    for (int v : block) in_block[v] = 1;
    bool complete = true, all_deg2 = true;
    for (int v : block) {
        int d = 0;
        for (int w : net.adj[v])
            if (in_block[w]) ++d;
        if (d != static_cast<int>(block.size()) - 1) complete = false;
        if (d != 2) all_deg2 = false;
    }
    if (block.size() == 1) return complete ? BlockClass::Complete : BlockClass::Other;
    if (complete) return BlockClass::Complete;
    if (all_deg2) return BlockClass::Cycle;

    // Induced subgraph on the block; chordality is inherited but checked.
    std::vector<int> local(net.n, -1);
    for (std::size_t i = 0; i < block.size(); ++i) local[block[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int v : block)
        for (int w : net.adj[v])
            if (in_block[w] && v < w) edges.emplace_back(local[v], local[w]);
    auto sub = build_network(static_cast<int>(block.size()), edges,
                             std::vector<int>(block.size(), 0));
    if (recognize_chordal(sub).chordal) return BlockClass::TwoConnectedChordal;
    return BlockClass::Other;
}

BlockClass classify_block_counts(std::size_t vertices, std::size_t edges) {
    // Inside a block (2-connected, or a lone edge/vertex) the edge count
    // already separates the cactus cases: minimum degree 2 forces e == k to
    // mean a cycle, and a simple graph has e == k(k-1)/2 only when complete.
    if (vertices == 2) return BlockClass::Edge;
    if (edges == vertices * (vertices - 1) / 2) return BlockClass::Complete;
    if (edges == vertices) return BlockClass::Cycle;
    return BlockClass::Other;
}

GraphClass classify_graph(const ThresholdedNetwork& net) {
    auto bct = block_cut_tree(net);
    bool cactus = true;
    for (std::size_t b = 0; b < bct.blocks.size(); ++b) {
        BlockClass c = classify_block_counts(bct.blocks[b].size(), bct.block_edges[b].size());
        if (c != BlockClass::Edge && c != BlockClass::Complete && c != BlockClass::Cycle) {
            cactus = false;
            break;
        }
    }
    if (cactus) return GraphClass::BlockCactus;
    bool theta_ok = true;
    for (int v = 0; v < net.n; ++v)
        if (net.theta[v] > 2) theta_ok = false;
    if (theta_ok && recognize_chordal(net).chordal) return GraphClass::ChordalThetaLe2;
    return GraphClass::General;
}

const char* to_string(BlockClass c) {
    switch (c) {
        case BlockClass::Edge: return "edge";
        case BlockClass::Complete: return "complete";
        case BlockClass::Cycle: return "cycle";
        case BlockClass::TwoConnectedChordal: return "two-connected-chordal";
        case BlockClass::Other: return "other";
    }
    return "?";
}

const char* to_string(GraphClass c) {
    switch (c) {
        case GraphClass::BlockCactus: return "block-cactus";
        case GraphClass::ChordalThetaLe2: return "chordal";
        case GraphClass::General: return "general";
    }
    return "?";
}

}  // namespace tss
