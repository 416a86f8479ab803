#include "tss/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "tss/diffusion.hpp"

namespace tss {

namespace {

// Visits size-k index subsets of 0..pool-1 in lexicographic order.
template <typename F>
bool for_each_combination(int pool, int k, F&& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > pool) return false;
    while (true) {
        if (fn(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == pool - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void check_limit(const ThresholdedNetwork& net) {
    if (net.n > oracle_vertex_limit())
        throw OracleLimitError("oracle limited to " + std::to_string(oracle_vertex_limit()) +
                               " vertices (" + std::to_string(net.n) +
                               " given); set TSS_ORACLE_LIMIT to raise");
}

std::vector<int> forced_vertices(const ThresholdedNetwork& net) {
    std::vector<int> forced;
    for (int v = 0; v < net.n; ++v)
        if (net.theta[v] > net.degree(v)) forced.push_back(v);
    return forced;
}

}  // namespace

int oracle_vertex_limit() {
    if (const char* env = std::getenv("TSS_ORACLE_LIMIT")) {
        int lim = std::atoi(env);
        if (lim > 0) return lim;
    }
    return 20;
}

std::optional<OracleResult> brute_force_min_seed(const ThresholdedNetwork& net,
                                                 std::optional<int> cap, bool prune) {
    check_limit(net);
    std::vector<int> forced = prune ? forced_vertices(net) : std::vector<int>{};
    std::vector<char> is_forced(net.n, 0);
    for (int v : forced) is_forced[v] = 1;
    std::vector<int> pool;
    for (int v = 0; v < net.n; ++v)
        if (!is_forced[v]) pool.push_back(v);

    int max_size = cap.value_or(net.n);
    for (int k = static_cast<int>(forced.size()); k <= max_size; ++k) {
        int extra = k - static_cast<int>(forced.size());
        std::optional<OracleResult> found;
        for_each_combination(static_cast<int>(pool.size()), extra, [&](const std::vector<int>& idx) {
            std::vector<int> seed = forced;
            for (int i : idx) seed.push_back(pool[i]);
            if (!is_target_set(net, seed)) return false;
            std::sort(seed.begin(), seed.end());
            found = OracleResult{k, std::move(seed)};
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

std::vector<std::vector<int>> enumerate_optimal_sets(const ThresholdedNetwork& net) {
    check_limit(net);
    auto best = brute_force_min_seed(net);
    std::vector<std::vector<int>> out;
    if (!best) return out;
    int k = best->size;

    std::vector<int> forced = forced_vertices(net);
    std::vector<char> is_forced(net.n, 0);
    for (int v : forced) is_forced[v] = 1;
    std::vector<int> pool;
    for (int v = 0; v < net.n; ++v)
        if (!is_forced[v]) pool.push_back(v);

    int extra = k - static_cast<int>(forced.size());
    for_each_combination(static_cast<int>(pool.size()), extra, [&](const std::vector<int>& idx) {
        std::vector<int> seed = forced;
        for (int i : idx) seed.push_back(pool[i]);
        if (is_target_set(net, seed)) {
            std::sort(seed.begin(), seed.end());
            out.push_back(std::move(seed));
        }
        return false;
    });
    std::sort(out.begin(), out.end());
    return out;
}

PendantOracle best_pendant_seed(const ThresholdedNetwork& net, int v) {
    if (v < 0 || v >= net.n) throw ValidationError("best_pendant_seed: bad vertex id");
    auto red = reduce_for_removed_vertex(net, v);
    auto optima = enumerate_optimal_sets(red.net);

    PendantOracle best;
    best.gain = -1;
    for (const auto& local : optima) {
        std::vector<int> seed;
        seed.reserve(local.size());
        for (int u : local) seed.push_back(red.old_of_new[u]);
        auto act = closure(net, seed);
        int gain = 0;
        for (int w : net.adj[v])
            if (act.round_of[w] >= 0) ++gain;
        if (gain > best.gain) {
            best.gain = gain;
            best.seed = seed;
        }
    }
    return best;
}

}  // namespace tss
