// Acceptance suite: one line per criterion, PASS/FAIL, nonzero exit on any
// failure. Everything here is deterministic (seeded) and desk-scale.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "tss/block_cut_tree.hpp"
#include "tss/diffusion.hpp"
#include "tss/generators.hpp"
#include "tss/hamming.hpp"
#include "tss/oracle.hpp"
#include "tss/solver.hpp"

using namespace tss;
using namespace tss::testing;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
    std::printf("criterion %d (%s): %s%s%s\n", criterion, name.c_str(), pass ? "PASS" : "FAIL",
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::vector<ThresholdedNetwork> cactus_instances(SplitMix64& rng, int count, int max_n) {
    std::vector<ThresholdedNetwork> out;
    while (static_cast<int>(out.size()) < count) {
        BlockCactusParams params{rng.range(1, 4), 2, 5, 0.5, ThetaPolicy::Constant, 0};
        auto net = gen_block_cactus(rng.next(), params);
        if (net.n > max_n) continue;
        randomize_theta_by_degree(rng, net);
        out.push_back(std::move(net));
    }
    return out;
}

void criterion_block_cactus() {
    SplitMix64 rng(20240901);
    auto instances = cactus_instances(rng, 300, 13);
    int bad = 0;
    for (const auto& net : instances) {
        auto rep = solve_block_cactus(net);
        auto oracle = brute_force_min_seed(net);
        if (!oracle || rep.size != oracle->size || !is_target_set(net, rep.seed)) ++bad;
    }
    report(1, "block-cactus exactness", bad == 0,
           std::to_string(instances.size()) + " instances, " + std::to_string(bad) +
               " mismatches");
}

void criterion_chordal() {
    SplitMix64 rng(20240902);
    int bad = 0, total = 0;
    while (total < 300) {
        auto net = gen_chordal(rng.next(), {rng.range(1, 13), rng.range(1, 4), {1, 2, 3}});
        ++total;
        auto rep = solve_chordal(net);
        auto oracle = brute_force_min_seed(net);
        if (!oracle || rep.size != oracle->size || !is_target_set(net, rep.seed)) ++bad;
    }
    report(2, "chordal exactness", bad == 0,
           std::to_string(total) + " instances, " + std::to_string(bad) + " mismatches");
}

void criterion_pendant_objective() {
    SplitMix64 rng(20240903);
    int bad = 0, total = 0;
    // complete blocks
    for (int iter = 0; iter < 70; ++iter) {
        int n = rng.range(2, 11);
        auto block = complete_graph(n, const_theta(n, 0));
        for (int v = 0; v < n; ++v) block.theta[v] = rng.range(-1, n + 1);
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        auto got = pendant_complete_solve(block, v);
        auto want = best_pendant_seed(block, v);
        ++total;
        if (got.seed.size() != want.seed.size() || got.gain != want.gain) ++bad;
    }
    // cycle blocks
    for (int iter = 0; iter < 70; ++iter) {
        int n = rng.range(3, 11);
        auto block = cycle_graph(n, const_theta(n, 0));
        for (int v = 0; v < n; ++v) block.theta[v] = rng.range(-1, 4);
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        auto got = pendant_cycle_solve(block, v);
        auto want = best_pendant_seed(block, v);
        ++total;
        if (got.seed.size() != want.seed.size() || got.gain != want.gain) ++bad;
    }
    // 2-connected chordal blocks with thresholds <= 2
    auto blocks = random_2connected_chordal_blocks(rng, 70, 11);
    for (auto& block : blocks) {
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(block.n)));
        auto got = pendant_chordal_solve(block, v);
        auto want = best_pendant_seed(block, v);
        ++total;
        if (got.seed.size() != want.seed.size() || got.gain != want.gain) ++bad;
    }
    report(3, "pendant objective", bad == 0,
           std::to_string(total) + " contexts, " + std::to_string(bad) + " mismatches");
}

void criterion_hamming_formula() {
    int bad = 0, total = 0;
    const std::vector<std::vector<int>> oracle_dims{{2, 2}, {3, 3}, {2, 3}, {2, 2, 2}, {2, 2, 3}};
    for (const auto& dims : oracle_dims) {
        auto spec = make_hamming_spec(dims);
        auto net = hamming_graph(spec);
        ++total;
        if (brute_force_min_seed(net)->size != min_seed_formula(spec.t())) ++bad;
    }

    // construction check: exhaustive over small dim tuples plus the largest
    // products up to 6561 vertices
    std::vector<std::vector<int>> sweep;
    std::vector<int> cur;
    auto rec = [&](auto&& self, long long product) -> void {
        if (!cur.empty()) sweep.push_back(cur);
        if (static_cast<int>(cur.size()) == 8) return;
        for (int d = 2; d <= 9; ++d) {
            if (product * d > 2048) break;
            cur.push_back(d);
            self(self, product * d);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    sweep.push_back({3, 3, 3, 3, 3, 3, 3, 3});
    sweep.push_back({9, 9, 9, 9});
    sweep.push_back({81, 81});
    sweep.push_back({729});
    sweep.push_back({2, 2, 2, 2, 2, 2, 2, 2});

    int construct_bad = 0;
    for (const auto& dims : sweep) {
        auto spec = make_hamming_spec(dims);
        auto net = hamming_graph(spec, 6561);
        std::vector<int> ids;
        for (const auto& tup : optimal_seed(spec))
            ids.push_back(static_cast<int>(tuple_to_id(spec, tup)));
        ++total;
        if (static_cast<int>(ids.size()) != min_seed_formula(spec.t()) ||
            !is_target_set(net, ids))
            ++construct_bad;
    }
    report(4, "hamming formula and construction", bad == 0 && construct_bad == 0,
           std::to_string(total) + " checks (" + std::to_string(sweep.size()) +
               " constructions), " + std::to_string(bad + construct_bad) + " mismatches");
}

void criterion_subcube_normal_form_and_bound() {
    SplitMix64 rng(20240905);
    const std::vector<std::vector<int>> specs{
        {2, 2}, {3, 3},   {2, 3},    {2, 2, 2},    {4, 4},    {3, 3, 3},
        {2, 3, 4}, {4, 8}, {16, 16}, {2, 2, 2, 2}, {5, 5, 5}, {6, 6, 6},
        {15, 17},  {2, 2, 2, 2, 2, 2, 2, 2}};
    int bad_closure = 0, bad_far = 0, bad_bound = 0, total = 0;
    for (const auto& dims : specs) {
        auto spec = make_hamming_spec(dims);
        auto net = hamming_graph(spec, 256);
        for (int iter = 0; iter < 200; ++iter) {
            int k = rng.range(1, 6);
            std::vector<std::vector<int>> seeds;
            for (int s = 0; s < k; ++s) {
                std::vector<int> tup(spec.t());
                for (int i = 0; i < spec.t(); ++i)
                    tup[i] = static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.dims[i])));
                seeds.push_back(std::move(tup));
            }
            ++total;
            auto algebra = closure_subcubes(spec, seeds);
            for (std::size_t i = 0; i < algebra.parts.size(); ++i)
                for (std::size_t j = i + 1; j < algebra.parts.size(); ++j)
                    if (subcube_distance(spec, algebra.parts[i], algebra.parts[j]) < 3) ++bad_far;
            std::vector<int> ids;
            for (const auto& tup : seeds) ids.push_back(static_cast<int>(tuple_to_id(spec, tup)));
            auto act = closure(net, ids);
            std::vector<long long> members;
            for (const auto& c : algebra.parts) {
                auto m = subcube_members(spec, c);
                members.insert(members.end(), m.begin(), m.end());
            }
            std::sort(members.begin(), members.end());
            std::vector<long long> diffused(act.active.begin(), act.active.end());
            if (members != diffused) ++bad_closure;
            if (!star_lower_bound_holds(spec, seeds, algebra)) ++bad_bound;
        }
    }
    report(5, "subcube normal form", bad_closure == 0 && bad_far == 0,
           std::to_string(total) + " seed sets, " + std::to_string(bad_closure) +
               " closure mismatches, " + std::to_string(bad_far) + " near pairs");

    // exhaustive |S| <= 4 on the 3-cube
    auto spec = make_hamming_spec({2, 2, 2});
    int bound_total = 0;
    for (unsigned mask = 1; mask < 256; ++mask) {
        if (__builtin_popcount(mask) > 4) continue;
        std::vector<std::vector<int>> seeds;
        for (int id = 0; id < 8; ++id)
            if (mask >> id & 1) seeds.push_back(id_to_tuple(spec, id));
        ++bound_total;
        if (!star_lower_bound_holds(spec, seeds, closure_subcubes(spec, seeds))) ++bad_bound;
    }
    report(6, "subcube lower bound", bad_bound == 0,
           std::to_string(total) + " random + " + std::to_string(bound_total) +
               " exhaustive seed sets, " + std::to_string(bad_bound) + " violations");
}

void criterion_order_independence() {
    SplitMix64 rng(20240907);
    int bad = 0;
    for (int iter = 0; iter < 500; ++iter) {
        int n = rng.range(2, 24);
        auto net = random_connected_graph(rng, n, rng.range(15, 60), -1, 5);
        std::vector<int> seeds;
        for (int v = 0; v < n; ++v)
            if (rng.chance(0.25)) seeds.push_back(v);
        auto par = closure(net, seeds);
        for (int t = 0; t < 5; ++t) {
            std::vector<int> prio(n);
            std::iota(prio.begin(), prio.end(), 0);
            for (int i = n - 1; i > 0; --i)
                std::swap(prio[i], prio[rng.below(static_cast<std::uint64_t>(i + 1))]);
            if (closure_sequential(net, seeds, &prio).active != par.active) ++bad;
        }
    }
    report(7, "parallel/sequential order independence", bad == 0,
           "500 instances x 5 orders, " + std::to_string(bad) + " disagreements");
}

void criterion_t_connected_chordal() {
    SplitMix64 rng(20240908);
    int bad = 0, total = 0;
    auto blocks = random_2connected_chordal_blocks(rng, 100, 13);
    for (auto& block : blocks) {
        for (int v = 0; v < block.n; ++v) block.theta[v] = 2;
        ++total;
        if (brute_force_min_seed(block)->size != 2) ++bad;
    }
    for (int k = 2; k <= 8; ++k)
        for (int t = 1; t < k; ++t) {
            ++total;
            if (brute_force_min_seed(complete_graph(k, const_theta(k, t)))->size != t) ++bad;
        }
    report(8, "t-connected chordal sanity", bad == 0,
           std::to_string(total) + " instances, " + std::to_string(bad) + " mismatches");
}

void criterion_scaling() {
    SplitMix64 rng(20240909);
    std::vector<int> sizes{10000, 20000, 40000, 80000, 160000, 320000};
    std::vector<double> millis;
    for (int target : sizes) {
        // about target/3 blocks of sizes 2..6 lands near the target size
        BlockCactusParams params{target / 3, 2, 6, 0.5, ThetaPolicy::Constant, 0};
        auto net = gen_block_cactus(rng.next(), params);
        randomize_theta_by_degree(rng, net);
        auto start = std::chrono::steady_clock::now();
        auto rep = solve_block_cactus(net);
        auto stop = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        millis.push_back(ms);
        if (!is_target_set(net, rep.seed)) {
            report(9, "near-linear scaling", false, "seed verification failed");
            return;
        }
    }
    bool pass = true;
    std::string detail;
    for (std::size_t i = 0; i < millis.size(); ++i) {
        if (i) detail += ", ";
        detail += std::to_string(sizes[i]) + ":" + std::to_string(millis[i]) + "ms";
        // factor 3 per doubling with a 20ms allowance for constant noise
        if (i && millis[i] > 3.0 * millis[i - 1] + 20.0) pass = false;
    }
    report(9, "near-linear scaling", pass, detail);
}

}  // namespace

int main() {
    criterion_block_cactus();
    criterion_chordal();
    criterion_pendant_objective();
    criterion_hamming_formula();
    criterion_subcube_normal_form_and_bound();
    criterion_order_independence();
    criterion_t_connected_chordal();
    criterion_scaling();
    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
