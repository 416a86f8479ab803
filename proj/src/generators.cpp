#include "tss/generators.hpp"

#include <algorithm>
#include <string>

namespace tss {

ThresholdedNetwork gen_block_cactus(std::uint64_t seed, const BlockCactusParams& params) {
    if (params.blocks < 1) throw ValidationError("gen_block_cactus: need at least one block");
    if (params.min_size < 2 || params.max_size < params.min_size)
        throw ValidationError("gen_block_cactus: invalid block size range");
    if (params.cycle_fraction < 0.0 || params.cycle_fraction > 1.0)
        throw ValidationError("gen_block_cactus: cycle fraction outside [0,1]");

    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    for (int b = 0; b < params.blocks; ++b) {
        int size = rng.range(params.min_size, params.max_size);
        bool cycle = size >= 3 && rng.chance(params.cycle_fraction);
        int attach = (b == 0) ? -1 : static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        std::vector<int> verts;
        if (attach >= 0) verts.push_back(attach);
        while (static_cast<int>(verts.size()) < size) verts.push_back(n++);
        if (cycle) {
            for (std::size_t i = 0; i + 1 < verts.size(); ++i)
                edges.emplace_back(verts[i], verts[i + 1]);
            edges.emplace_back(verts.back(), verts.front());
        } else {
            for (std::size_t i = 0; i < verts.size(); ++i)
                for (std::size_t j = i + 1; j < verts.size(); ++j)
                    edges.emplace_back(verts[i], verts[j]);
        }
    }
    std::vector<int> theta(n, params.constant_theta);
    auto net = build_network(n, edges, std::move(theta));
    if (params.policy == ThetaPolicy::UniformDegree)
        for (int v = 0; v < n; ++v) net.theta[v] = rng.range(0, net.degree(v) + 1);
    return net;
}

ThresholdedNetwork gen_chordal(std::uint64_t seed, const ChordalParams& params) {
    if (params.n < 1) throw ValidationError("gen_chordal: need at least one vertex");
    if (params.width < 1) throw ValidationError("gen_chordal: width must be positive");

    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    // clique_of[v]: a vertex set known to induce a clique ({v} plus the clique
    // v was attached to); attaching inside it keeps the graph chordal.
    std::vector<std::vector<int>> clique_of(params.n);
    clique_of[0] = {0};
    for (int v = 1; v < params.n; ++v) {
        int host = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
        std::vector<int> pool = clique_of[host];
        int take = rng.range(1, std::min(params.width, static_cast<int>(pool.size())));
        // Partial Fisher-Yates; the prefix is the chosen attachment clique.
        for (int i = 0; i < take; ++i) {
            int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(pool.size() - i)));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(take);
        for (int u : pool) edges.emplace_back(u, v);
        pool.push_back(v);
        std::sort(pool.begin(), pool.end());
        clique_of[v] = std::move(pool);
    }

    int wsum = params.theta_weights[0] + params.theta_weights[1] + params.theta_weights[2];
    if (wsum <= 0) throw ValidationError("gen_chordal: threshold weights must be positive");
    std::vector<int> theta(params.n, 0);
    for (int v = 0; v < params.n; ++v) {
        int roll = static_cast<int>(rng.below(static_cast<std::uint64_t>(wsum)));
        theta[v] = (roll < params.theta_weights[0]) ? 0
                   : (roll < params.theta_weights[0] + params.theta_weights[1]) ? 1
                                                                                : 2;
    }
    return build_network(params.n, edges, std::move(theta));
}

}  // namespace tss
