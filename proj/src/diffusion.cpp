#include "tss/diffusion.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace tss {

namespace {

std::vector<char> seed_mask(const ThresholdedNetwork& net, const std::vector<int>& seeds) {
    std::vector<char> mask(net.n, 0);
    for (int s : seeds) {
        if (s < 0 || s >= net.n)
            throw ValidationError("seed vertex " + std::to_string(s) + " out of range");
        mask[s] = 1;
    }
    return mask;
}

void finish(const ThresholdedNetwork& net, ActivationResult& res) {
    res.active.clear();
    for (int v = 0; v < net.n; ++v)
        if (res.round_of[v] >= 0) res.active.push_back(v);
}

}  // namespace

ActivationResult closure(const ThresholdedNetwork& net, const std::vector<int>& seeds) {
    std::vector<char> active = seed_mask(net, seeds);
    ActivationResult res;
    res.round_of.assign(net.n, -1);

    // BFS by rounds; cnt tracks active neighbors of each inactive vertex.
    std::vector<int> cnt(net.n, 0);
    std::deque<int> queue;
    for (int v = 0; v < net.n; ++v)
        if (active[v]) {
            res.round_of[v] = 0;
            queue.push_back(v);
        }
    // theta <= 0 vertices activate automatically in round 1.
    for (int v = 0; v < net.n; ++v)
        if (!active[v] && net.theta[v] <= 0) {
            active[v] = 1;
            res.round_of[v] = 1;
            res.convinced_sequence.push_back(v);
            queue.push_back(v);
        }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        int next_round = res.round_of[u] + 1;
        for (int w : net.adj[u]) {
            if (active[w]) continue;
            if (++cnt[w] >= net.theta[w]) {
                active[w] = 1;
                res.round_of[w] = next_round;
                res.convinced_sequence.push_back(w);
                queue.push_back(w);
            }
        }
    }
    finish(net, res);
    return res;
}

ActivationResult closure_sequential(const ThresholdedNetwork& net, const std::vector<int>& seeds,
                                    const std::vector<int>* priority) {
    if (priority && static_cast<int>(priority->size()) != net.n)
        throw ValidationError("priority vector has wrong length");
    auto prio = [&](int v) { return priority ? (*priority)[v] : v; };

    std::vector<char> active = seed_mask(net, seeds);
    ActivationResult res;
    res.round_of.assign(net.n, -1);
    std::vector<int> cnt(net.n, 0);
    for (int v = 0; v < net.n; ++v)
        if (active[v]) {
            res.round_of[v] = 0;
            for (int w : net.adj[v]) ++cnt[w];
        }

    std::set<std::pair<int, int>> eligible;
    for (int v = 0; v < net.n; ++v)
        if (!active[v] && cnt[v] >= net.theta[v]) eligible.insert({prio(v), v});

    int step = 0;
    while (!eligible.empty()) {
        int v = eligible.begin()->second;
        eligible.erase(eligible.begin());
        active[v] = 1;
        res.round_of[v] = ++step;
        res.convinced_sequence.push_back(v);
        for (int w : net.adj[v]) {
            ++cnt[w];
            if (!active[w] && cnt[w] >= net.theta[w]) eligible.insert({prio(w), w});
        }
    }
    finish(net, res);
    return res;
}

bool is_target_set(const ThresholdedNetwork& net, const std::vector<int>& seeds) {
    return closure(net, seeds).all_active(net.n);
}

ReducedNetwork reduce_for_removed_vertex(const ThresholdedNetwork& net, int v) {
    if (v < 0 || v >= net.n) throw ValidationError("reduce_for_removed_vertex: bad vertex id");
    ReducedNetwork red;
    red.old_of_new.reserve(net.n - 1);
    red.new_of_old.assign(net.n, -1);
    for (int u = 0; u < net.n; ++u) {
        if (u == v) continue;
        red.new_of_old[u] = static_cast<int>(red.old_of_new.size());
        red.old_of_new.push_back(u);
    }
    red.net.n = net.n - 1;
    red.net.adj.assign(red.net.n, {});
    red.net.theta.resize(red.net.n);
    for (int u = 0; u < net.n; ++u) {
        if (u == v) continue;
        int nu = red.new_of_old[u];
        red.net.theta[nu] = net.theta[u] - (net.has_edge(u, v) ? 1 : 0);
        for (int w : net.adj[u])
            if (w != v) red.net.adj[nu].push_back(red.new_of_old[w]);
    }
    return red;
}

ThresholdedNetwork reduce_cut_threshold(const ThresholdedNetwork& net, int v, int gain) {
    if (v < 0 || v >= net.n) throw ValidationError("reduce_cut_threshold: bad vertex id");
    if (gain < 0) throw ValidationError("reduce_cut_threshold: negative gain");
    ThresholdedNetwork out = net;
    out.theta[v] -= gain;
    return out;
}

}  // namespace tss
