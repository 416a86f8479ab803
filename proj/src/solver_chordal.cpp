#include <algorithm>
#include <string>

#include "peel.hpp"
#include "tss/chordality.hpp"
#include "tss/diffusion.hpp"
#include "tss/solver.hpp"

namespace tss {

namespace {

void require_theta_le2(const ThresholdedNetwork& block) {
    for (int u = 0; u < block.n; ++u)
        if (block.theta[u] > 2)
            throw WrongThresholdsError("vertex " + std::to_string(u) + " has threshold " +
                                       std::to_string(block.theta[u]) + " > 2");
}

// Two distinct members of `set` within distance 2: some closed neighborhood
// contains two of them.
bool close_pair_exists(const ThresholdedNetwork& block, const std::vector<int>& set) {
    std::vector<int> hits(block.n, 0);
    for (int x : set) {
        ++hits[x];
        for (int w : block.adj[x]) ++hits[w];
    }
    for (int u = 0; u < block.n; ++u)
        if (hits[u] >= 2) return true;
    return false;
}

int gain_of(const ThresholdedNetwork& block, const std::vector<int>& seed, int v) {
    auto act = closure(block, seed);
    int gain = 0;
    for (int w : block.adj[v])
        if (act.round_of[w] >= 0) ++gain;
    return gain;
}

}  // namespace

ChordalBlockAnalysis analyze_block(const ThresholdedNetwork& block, std::optional<int> v) {
    require_theta_le2(block);
    if (v && (*v < 0 || *v >= block.n)) throw ValidationError("analyze_block: bad cut vertex");
    ChordalBlockAnalysis an;

    if (v) {
        // Thresholds of G - v once v's help is granted.
        std::vector<char> is_nb(block.n, 0);
        for (int w : block.adj[*v]) is_nb[w] = 1;
        auto theta1 = [&](int u) { return block.theta[u] - (is_nb[u] ? 1 : 0); };
        for (int u = 0; u < block.n; ++u)
            if (u != *v && theta1(u) <= 0) an.I.push_back(u);
        // P2: an edge of G - v from a free vertex into a threshold-1 vertex.
        for (int x : an.I)
            for (int y : block.adj[x]) {
                if (y == *v) continue;
                if (theta1(y) == 1) an.P2 = true;
            }
        an.P1 = close_pair_exists(block, an.I);
    }
    for (int u = 0; u < block.n; ++u) {
        if (block.theta[u] < 2) an.J.push_back(u);
        if (block.theta[u] <= 0) an.J0.push_back(u);
    }
    an.Q1 = close_pair_exists(block, an.J0);
    for (int x : an.J0)
        for (int y : block.adj[x])
            if (block.theta[y] == 1) an.Q2 = true;
    return an;
}

PendantResult pendant_chordal_solve(const ThresholdedNetwork& block, int v) {
    require_theta_le2(block);
    if (v < 0 || v >= block.n) throw ValidationError("pendant_chordal_solve: bad cut vertex");
    ChordalBlockAnalysis an = analyze_block(block, v);

    std::vector<char> is_nb(block.n, 0);
    for (int w : block.adj[v]) is_nb[w] = 1;
    bool i_meets_nv = std::any_of(an.I.begin(), an.I.end(), [&](int u) { return is_nb[u]; });

    PendantResult res;
    if (i_meets_nv || an.P1 || an.P2) {
        // (a)-(c): the cut vertex alone influences the whole block.
    } else if (an.J.empty()) {
        // (d): all thresholds are 2; any neighbor of v is optimal and stays
        // alone in its closure. Adjacency is sorted, so take the first.
        res.seed = {block.adj[v][0]};
    } else {
        // (e): one vertex next to a sub-2 threshold influences everything.
        int x = -1;
        for (int w : an.J)
            for (int y : block.adj[w])
                if (y != v && (x == -1 || y < x)) x = y;
        if (x == -1) throw Error("internal: chordal case (e) found no candidate");
        res.seed = {x};
    }
    res.gain = gain_of(block, res.seed, v);

    std::vector<int> with_v = res.seed;
    with_v.push_back(v);
    if (!closure(block, with_v).all_active(block.n))
        throw Error("internal: chordal pendant seed fails verification");
    return res;
}

std::vector<int> base_2connected_chordal_solve(const ThresholdedNetwork& block) {
    require_theta_le2(block);
    if (block.n < 3)
        throw WrongClassError("base_2connected_chordal_solve: blocks below 3 vertices "
                              "use the complete-block routines");
    ChordalBlockAnalysis an = analyze_block(block, std::nullopt);

    std::vector<int> seed;
    if (an.Q1 || an.Q2) {
        // (f): free vertices already ignite the block.
    } else if (!an.J.empty()) {
        int x = -1;
        for (int w : an.J)
            for (int y : block.adj[w])
                if (x == -1 || y < x) x = y;
        if (x == -1) throw Error("internal: chordal base found no candidate");
        seed = {x};
    } else {
        // All thresholds are 2: one edge is necessary and sufficient.
        int best_u = -1, best_w = -1;
        for (int u = 0; u < block.n && best_u < 0; ++u)
            if (!block.adj[u].empty()) {
                best_u = u;
                best_w = block.adj[u][0];
            }
        if (best_u < 0) throw WrongClassError("block has no edge");
        seed = {best_u, best_w};
    }
    if (!is_target_set(block, seed))
        throw Error("internal: chordal base seed fails verification");
    return seed;
}

SolveReport solve_chordal(const ThresholdedNetwork& net) {
    require_theta_le2(net);
    auto bct = block_cut_tree(net);
    if (!recognize_chordal(net).chordal) throw WrongClassError("graph is not chordal");

    auto pendant = [&](const ThresholdedNetwork& lb, int lv, int) {
        return lb.n <= 2 ? pendant_complete_solve(lb, lv) : pendant_chordal_solve(lb, lv);
    };
    auto base = [&](const ThresholdedNetwork& lb, int) -> std::vector<int> {
        if (lb.n == 1) return lb.theta[0] <= 0 ? std::vector<int>{} : std::vector<int>{0};
        if (lb.n == 2) {
            // Degenerate root: try the four subsets directly.
            const std::vector<std::vector<int>> subsets{{}, {0}, {1}, {0, 1}};
            for (const auto& s : subsets)
                if (is_target_set(lb, s)) return s;
            throw Error("internal: no subset of K2 is a target set");
        }
        return base_2connected_chordal_solve(lb);
    };
    return detail::peel_solve(net, bct, SolverKind::Chordal, pendant, base);
}

}  // namespace tss
