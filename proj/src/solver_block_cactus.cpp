#include <algorithm>
#include <string>

#include "peel.hpp"
#include "tss/diffusion.hpp"
#include "tss/solver.hpp"

namespace tss {

namespace {

void require_complete(const ThresholdedNetwork& block) {
    for (int v = 0; v < block.n; ++v)
        if (block.degree(v) != block.n - 1)
            throw WrongClassError("block is not complete");
}

void require_cycle(const ThresholdedNetwork& block) {
    if (block.n < 3) throw WrongClassError("cycle block needs at least 3 vertices");
    for (int v = 0; v < block.n; ++v)
        if (block.degree(v) != 2) throw WrongClassError("block is not a cycle");
    if (auto split = find_disconnection(block))
        throw WrongClassError("block is not a cycle (disconnected)");
}

// Greedy seed count for a set of mutually adjacent vertices. Input is
// (threshold, id) sorted nondecreasing; the seed is always the suffix. A
// vertex whose threshold exceeds m-1 can only be seeded; after that, walking
// the rest from the easiest up, any deficit against the current active count
// is paid for by extending the seed suffix.
int clique_seed_count(const std::vector<std::pair<int, int>>& order) {
    int m = static_cast<int>(order.size());
    int s = 0;
    for (const auto& [th, id] : order)
        if (th > m - 1) ++s;
    int ell = s;
    for (int i = 1; i <= m - ell; ++i) {
        int th = order[i - 1].first;
        if (th > s + i - 1) s += th - (s + i - 1);
        if (m - s == i) break;
    }
    return s;
}

std::vector<int> clique_solve(const std::vector<std::pair<int, int>>& sorted_order) {
    int m = static_cast<int>(sorted_order.size());
    int s = clique_seed_count(sorted_order);
    std::vector<int> seed;
    seed.reserve(s);
    for (int i = m - s; i < m; ++i) seed.push_back(sorted_order[i].second);
    std::sort(seed.begin(), seed.end());
    return seed;
}

int count_active_neighbors(const ThresholdedNetwork& block, const ActivationResult& act, int v) {
    int gain = 0;
    for (int w : block.adj[v])
        if (act.round_of[w] >= 0) ++gain;
    return gain;
}

// --- path machinery -------------------------------------------------------
//
// Thresholds along a path, positions 0..L-1. Forced vertices (threshold above
// path degree) are seeded; their neighbors are discounted; one left-to-right
// and one right-to-left sweep propagate free activation; what remains splits
// into components whose interior thresholds are 1 or 2, with 1 at both ends.

struct PathAnalysis {
    std::vector<char> forced;       // S1
    std::vector<char> free_after;   // S2
    std::vector<int> th;            // thresholds after discounts
    struct Component {
        int begin = 0, end = 0;      // positions [begin, end]
        std::vector<int> twos;       // positions with threshold 2, ascending
    };
    std::vector<Component> components;
};

PathAnalysis analyze_path(const std::vector<int>& thetas) {
    int len = static_cast<int>(thetas.size());
    PathAnalysis pa;
    pa.th = thetas;
    pa.forced.assign(len, 0);
    pa.free_after.assign(len, 0);
    auto deg = [&](int i) { return (len == 1) ? 0 : ((i == 0 || i == len - 1) ? 1 : 2); };
    for (int i = 0; i < len; ++i)
        if (pa.th[i] > deg(i)) pa.forced[i] = 1;
    for (int i = 0; i < len; ++i) {
        if (pa.forced[i]) continue;
        if (i > 0 && pa.forced[i - 1]) --pa.th[i];
        if (i + 1 < len && pa.forced[i + 1]) --pa.th[i];
    }
    for (int i = 0; i + 1 < len; ++i)
        if (!pa.forced[i] && pa.th[i] <= 0) --pa.th[i + 1];
    for (int i = len - 1; i >= 1; --i)
        if (!pa.forced[i] && pa.th[i] <= 0) --pa.th[i - 1];
    for (int i = 0; i < len; ++i)
        if (!pa.forced[i] && pa.th[i] <= 0) pa.free_after[i] = 1;

    for (int i = 0; i < len; ++i) {
        if (pa.forced[i] || pa.free_after[i]) continue;
        PathAnalysis::Component comp;
        comp.begin = i;
        while (i < len && !pa.forced[i] && !pa.free_after[i]) {
            if (pa.th[i] != 1 && pa.th[i] != 2)
                throw Error("internal: residual path threshold outside {1,2}");
            if (pa.th[i] == 2) comp.twos.push_back(i);
            comp.end = i;
            ++i;
        }
        if (pa.th[comp.begin] != 1 || pa.th[comp.end] != 1)
            throw Error("internal: residual path component must end in threshold 1");
        pa.components.push_back(std::move(comp));
    }
    return pa;
}

// Seed patterns covering one component. Odd count of 2s: the odd-indexed 2s,
// the only shape an optimal set can take there. Even count: anchored either
// at the left end (with the even-indexed 2s) or at the right end (with the
// odd-indexed 2s); both are optimal, they differ in which side they light up.
std::vector<std::vector<int>> component_candidates(const PathAnalysis::Component& c) {
    const auto& twos = c.twos;
    int q = static_cast<int>(twos.size());
    if (q % 2 == 1) {
        std::vector<int> odd;
        for (int j = 0; j < q; j += 2) odd.push_back(twos[j]);
        return {odd};
    }
    std::vector<int> left{c.begin}, right;
    for (int j = 1; j < q; j += 2) left.push_back(twos[j]);
    for (int j = 0; j < q; j += 2) right.push_back(twos[j]);
    right.push_back(c.end);
    if (left == right) return {left};
    return {left, right};
}

std::vector<int> forced_and_interior(const PathAnalysis& pa, bool include_first_last) {
    std::vector<int> seed;
    int len = static_cast<int>(pa.forced.size());
    for (int i = 0; i < len; ++i)
        if (pa.forced[i]) seed.push_back(i);
    int nc = static_cast<int>(pa.components.size());
    for (int ci = 0; ci < nc; ++ci) {
        if (!include_first_last && (ci == 0 || ci == nc - 1)) continue;
        auto cand = component_candidates(pa.components[ci]);
        seed.insert(seed.end(), cand[0].begin(), cand[0].end());
    }
    return seed;
}

}  // namespace

std::vector<int> path_optimal_seed(const std::vector<int>& thetas) {
    PathAnalysis pa = analyze_path(thetas);
    auto seed = forced_and_interior(pa, true);
    std::sort(seed.begin(), seed.end());
    return seed;
}

int complete_closure_size(const std::vector<int>& sorted_residual_thetas, int s) {
    if (s < 0) throw ValidationError("complete_closure_size: negative seed count");
    if (!std::is_sorted(sorted_residual_thetas.begin(), sorted_residual_thetas.end()))
        throw ValidationError("complete_closure_size: thresholds must be nondecreasing");
    int count = static_cast<int>(sorted_residual_thetas.size());
    for (int i = 1; i <= count; ++i)
        if (sorted_residual_thetas[i - 1] > s + i - 1) return i - 1;
    return count;
}

PendantResult pendant_complete_solve(const ThresholdedNetwork& block, int v) {
    require_complete(block);
    if (v < 0 || v >= block.n) throw ValidationError("pendant_complete_solve: bad cut vertex");
    std::vector<std::pair<int, int>> order;
    order.reserve(block.n - 1);
    for (int u = 0; u < block.n; ++u)
        if (u != v) order.emplace_back(block.theta[u] - 1, u);
    std::sort(order.begin(), order.end());
    PendantResult res;
    res.seed = clique_solve(order);
    res.gain = count_active_neighbors(block, closure(block, res.seed), v);
    return res;
}

std::vector<int> base_complete_solve(const ThresholdedNetwork& block) {
    require_complete(block);
    std::vector<std::pair<int, int>> order;
    order.reserve(block.n);
    for (int u = 0; u < block.n; ++u) order.emplace_back(block.theta[u], u);
    std::sort(order.begin(), order.end());
    return clique_solve(order);
}

PendantResult pendant_cycle_solve(const ThresholdedNetwork& block, int v) {
    require_cycle(block);
    if (v < 0 || v >= block.n) throw ValidationError("pendant_cycle_solve: bad cut vertex");

    // Unroll the residual path starting from v's smaller neighbor.
    std::vector<int> path;
    path.reserve(block.n - 1);
    int prev = v, cur = std::min(block.adj[v][0], block.adj[v][1]);
    while (cur != v) {
        path.push_back(cur);
        int next = (block.adj[cur][0] == prev) ? block.adj[cur][1] : block.adj[cur][0];
        prev = cur;
        cur = next;
    }
    int len = static_cast<int>(path.size());
    std::vector<int> th(len);
    for (int i = 0; i < len; ++i) th[i] = block.theta[path[i]] - ((i == 0 || i == len - 1) ? 1 : 0);

    PathAnalysis pa = analyze_path(th);
    std::vector<int> fixed = forced_and_interior(pa, false);

    // Only the two boundary components can change which of v's neighbors end
    // up active, so their candidate patterns are compared by realized gain.
    std::vector<std::vector<int>> first_opts{{}}, last_opts{{}};
    int nc = static_cast<int>(pa.components.size());
    if (nc >= 1) first_opts = component_candidates(pa.components[0]);
    if (nc >= 2) last_opts = component_candidates(pa.components[nc - 1]);

    PendantResult best;
    best.gain = -1;
    for (const auto& f : first_opts)
        for (const auto& l : last_opts) {
            std::vector<int> seed_pos = fixed;
            seed_pos.insert(seed_pos.end(), f.begin(), f.end());
            if (nc >= 2) seed_pos.insert(seed_pos.end(), l.begin(), l.end());
            std::vector<int> seed;
            seed.reserve(seed_pos.size());
            for (int p : seed_pos) seed.push_back(path[p]);
            std::sort(seed.begin(), seed.end());
            int gain = count_active_neighbors(block, closure(block, seed), v);
            if (gain > best.gain || (gain == best.gain && seed < best.seed)) {
                best.gain = gain;
                best.seed = std::move(seed);
            }
        }
    return best;
}

std::vector<int> base_cycle_solve(const ThresholdedNetwork& block) {
    require_cycle(block);
    int n = block.n;

    auto unroll = [&](int anchor) {
        std::vector<int> path;
        path.reserve(n - 1);
        int prev = anchor, cur = std::min(block.adj[anchor][0], block.adj[anchor][1]);
        while (cur != anchor) {
            path.push_back(cur);
            int next = (block.adj[cur][0] == prev) ? block.adj[cur][1] : block.adj[cur][0];
            prev = cur;
            cur = next;
        }
        return path;
    };
    auto solve_path = [&](const std::vector<int>& path, bool discount_ends) {
        int len = static_cast<int>(path.size());
        std::vector<int> th(len);
        for (int i = 0; i < len; ++i)
            th[i] = block.theta[path[i]] - ((discount_ends && (i == 0 || i == len - 1)) ? 1 : 0);
        std::vector<int> seed;
        for (int p : path_optimal_seed(th)) seed.push_back(path[p]);
        std::sort(seed.begin(), seed.end());
        return seed;
    };

    int anchor_forced = -1, anchor_free = -1, anchor_two = -1;
    for (int u = 0; u < n; ++u) {
        if (block.theta[u] > 2 && anchor_forced < 0) anchor_forced = u;
        if (block.theta[u] <= 0 && anchor_free < 0) anchor_free = u;
        if (block.theta[u] == 2 && anchor_two < 0) anchor_two = u;
    }

    std::vector<int> seed;
    if (anchor_forced >= 0) {
        // Threshold above the degree: the anchor is in every target set.
        seed = solve_path(unroll(anchor_forced), true);
        seed.push_back(anchor_forced);
        std::sort(seed.begin(), seed.end());
    } else if (anchor_free >= 0) {
        // The anchor activates on its own; no optimal set contains it.
        seed = solve_path(unroll(anchor_free), true);
    } else if (anchor_two >= 0) {
        // Either the anchor is seeded, or it activates last off both
        // neighbors and contributes nothing; take the better reduction.
        auto path = unroll(anchor_two);
        std::vector<int> with = solve_path(path, true);
        with.push_back(anchor_two);
        std::sort(with.begin(), with.end());
        std::vector<int> without = solve_path(path, false);
        seed = (without.size() < with.size() ||
                (without.size() == with.size() && without <= with))
                   ? without
                   : with;
    } else {
        // All thresholds are 1: any single vertex cascades around.
        seed = {0};
    }
    if (!is_target_set(block, seed)) throw Error("internal: cycle seed fails verification");
    return seed;
}

SolveReport solve_block_cactus(const ThresholdedNetwork& net) {
    auto bct = block_cut_tree(net);
    enum Kind { K_COMPLETE, K_CYCLE };
    std::vector<Kind> kind(bct.blocks.size());
    for (std::size_t b = 0; b < bct.blocks.size(); ++b) {
        BlockClass c = classify_block_counts(bct.blocks[b].size(), bct.block_edges[b].size());
        if (c == BlockClass::Edge || c == BlockClass::Complete)
            kind[b] = K_COMPLETE;
        else if (c == BlockClass::Cycle)
            kind[b] = K_CYCLE;
        else
            throw WrongClassError("not a block-cactus graph: the block containing vertex " +
                                  std::to_string(bct.blocks[b][0]) +
                                  " is neither complete nor a cycle");
    }

    auto pendant = [&](const ThresholdedNetwork& lb, int lv, int b) {
        return kind[b] == K_COMPLETE ? pendant_complete_solve(lb, lv)
                                     : pendant_cycle_solve(lb, lv);
    };
    auto base = [&](const ThresholdedNetwork& lb, int b) {
        return kind[b] == K_COMPLETE ? base_complete_solve(lb) : base_cycle_solve(lb);
    };
    return detail::peel_solve(net, bct, SolverKind::BlockCactus, pendant, base);
}

}  // namespace tss
