#include "tss/chordality.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace tss {

namespace {

// Reverse maximum-cardinality-search order. If the graph is chordal this is a
// perfect elimination order.
std::vector<int> mcs_order(const ThresholdedNetwork& net) {
    int n = net.n;
    std::vector<int> weight(n, 0);
    std::vector<char> visited(n, 0);
    std::set<std::pair<int, int>> by_weight;  // (-weight, v)
    for (int v = 0; v < n; ++v) by_weight.insert({0, v});
    std::vector<int> visit_seq;
    visit_seq.reserve(n);
    while (!by_weight.empty()) {
        int v = by_weight.begin()->second;
        by_weight.erase(by_weight.begin());
        visited[v] = 1;
        visit_seq.push_back(v);
        for (int w : net.adj[v]) {
            if (visited[w]) continue;
            by_weight.erase({-weight[w], w});
            ++weight[w];
            by_weight.insert({-weight[w], w});
        }
    }
    std::reverse(visit_seq.begin(), visit_seq.end());
    return visit_seq;
}

struct PeoCheck {
    bool ok = true;
    // On failure: mid is adjacent to both ends, the ends are nonadjacent, and
    // both ends come later than mid in the order.
    int mid = -1, end_a = -1, end_b = -1;
};

PeoCheck check_peo(const ThresholdedNetwork& net, const std::vector<int>& order) {
    int n = net.n;
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    // Standard deferred check: the later neighbors of v minus the nearest one
    // must be neighbors of that nearest one.
    std::vector<std::vector<std::pair<int, int>>> to_check(n);  // (vertex, origin)
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        for (auto [w, origin] : to_check[v])
            if (!net.has_edge(v, w)) return {false, origin, v, w};
        int parent = -1;
        for (int w : net.adj[v])
            if (pos[w] > i && (parent == -1 || pos[w] < pos[parent])) parent = w;
        if (parent == -1) continue;
        for (int w : net.adj[v])
            if (pos[w] > i && w != parent) to_check[parent].push_back({w, v});
    }
    return {};
}

// Shortest a-b path in net avoiding the closed neighborhood of x except a, b.
// Returns the path a..b or empty if none exists.
std::vector<int> path_avoiding(const ThresholdedNetwork& net, int x, int a, int b) {
    std::vector<char> blocked(net.n, 0);
    blocked[x] = 1;
    for (int w : net.adj[x]) blocked[w] = 1;
    blocked[a] = blocked[b] = 0;
    std::vector<int> prev(net.n, -2);
    std::queue<int> q;
    prev[a] = -1;
    q.push(a);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (u == b) break;
        for (int w : net.adj[u]) {
            if (blocked[w] || prev[w] != -2) continue;
            prev[w] = u;
            q.push(w);
        }
    }
    if (prev[b] == -2) return {};
    std::vector<int> path;
    for (int u = b; u != -1; u = prev[u]) path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path;
}

// A shortest a-b path in G minus (N[x] \ {a,b}) is induced there, so the
// cycle x,a,...,b is an induced cycle of length >= 4 in G.
std::vector<int> hole_from_triple(const ThresholdedNetwork& net, int x, int a, int b) {
    auto path = path_avoiding(net, x, a, b);
    if (path.empty()) return {};
    std::vector<int> cycle;
    cycle.push_back(x);
    cycle.insert(cycle.end(), path.begin(), path.end());
    return cycle;
}

std::vector<int> find_hole(const ThresholdedNetwork& net, const PeoCheck& fail) {
    auto hole = hole_from_triple(net, fail.mid, fail.end_a, fail.end_b);
    if (!hole.empty()) return hole;
    // The failing triple certifies non-chordality but its ends may be cut off
    // once the neighborhood is removed; scan all triples for one that closes.
    for (int x = 0; x < net.n; ++x) {
        const auto& nb = net.adj[x];
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (net.has_edge(nb[i], nb[j])) continue;
                hole = hole_from_triple(net, x, nb[i], nb[j]);
                if (!hole.empty()) return hole;
            }
    }
    return {};
}

}  // namespace

bool verify_peo(const ThresholdedNetwork& net, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != net.n) return false;
    std::vector<char> seen(net.n, 0);
    for (int v : order) {
        if (v < 0 || v >= net.n || seen[v]) return false;
        seen[v] = 1;
    }
    return check_peo(net, order).ok;
}

ChordalityResult recognize_chordal(const ThresholdedNetwork& net) {
    ChordalityResult res;
    if (net.n == 0) {
        res.chordal = true;
        return res;
    }
    auto order = mcs_order(net);
    auto check = check_peo(net, order);
    if (check.ok) {
        res.chordal = true;
        res.peo = std::move(order);
        return res;
    }
    res.chordal = false;
    res.witness_cycle = find_hole(net, check);
    if (res.witness_cycle.empty())
        throw Error("internal: elimination check failed but no hole was found");
    return res;
}

}  // namespace tss
