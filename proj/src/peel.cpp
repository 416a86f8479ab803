#include "peel.hpp"

#include <algorithm>

namespace tss::detail {

LocalBlock make_local_block(const BlockCutTree& bct, int block_index,
                            const std::vector<int>& theta, int cut_vertex) {
    const auto& verts = bct.blocks[block_index];  // sorted
    LocalBlock lb;
    lb.global_of_local = verts;
    lb.net.n = static_cast<int>(verts.size());
    lb.net.adj.assign(lb.net.n, {});
    lb.net.theta.resize(lb.net.n);
    auto local_of = [&](int g) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), g) - verts.begin());
    };
    for (int i = 0; i < lb.net.n; ++i) lb.net.theta[i] = theta[verts[i]];
    for (const auto& [u, w] : bct.block_edges[block_index]) {
        int lu = local_of(u), lw = local_of(w);
        lb.net.adj[lu].push_back(lw);
        lb.net.adj[lw].push_back(lu);
    }
    for (auto& a : lb.net.adj) std::sort(a.begin(), a.end());
    if (cut_vertex >= 0) lb.local_cut = local_of(cut_vertex);
    return lb;
}

SolveReport peel_solve(
    const ThresholdedNetwork& net, const BlockCutTree& bct, SolverKind kind,
    const std::function<PendantResult(const ThresholdedNetwork&, int, int)>& pendant,
    const std::function<std::vector<int>(const ThresholdedNetwork&, int)>& base) {
    std::vector<int> theta = net.theta;
    SolveReport report;
    report.solver = kind;

    for (const auto& step : bct.processing_order) {
        LocalBlock lb = make_local_block(bct, step.block, theta, step.cut_vertex);
        BlockTrace trace;
        trace.block = bct.blocks[step.block];
        trace.cut_vertex = step.cut_vertex;
        std::vector<int> local_seed;
        if (step.cut_vertex < 0) {
            local_seed = base(lb.net, step.block);
        } else {
            PendantResult pr = pendant(lb.net, lb.local_cut, step.block);
            local_seed = std::move(pr.seed);
            trace.gain = pr.gain;
            theta[step.cut_vertex] -= pr.gain;
        }
        for (int u : local_seed) {
            trace.local_seed.push_back(lb.global_of_local[u]);
            report.seed.push_back(lb.global_of_local[u]);
        }
        std::sort(trace.local_seed.begin(), trace.local_seed.end());
        report.per_block_trace.push_back(std::move(trace));
    }

    std::sort(report.seed.begin(), report.seed.end());
    report.size = static_cast<int>(report.seed.size());
    if (!is_target_set(net, report.seed))
        throw Error("internal: computed seed fails verification");
    return report;
}

}  // namespace tss::detail
