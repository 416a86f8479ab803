#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "helpers.hpp"
#include "tss/diffusion.hpp"

using namespace tss;
using namespace tss::testing;

TEST_CASE("closure cascades along a path") {
    auto p3 = path_graph(3, const_theta(3, 1));
    auto act = closure(p3, {0});
    CHECK(act.active == std::vector<int>{0, 1, 2});
    CHECK(act.round_of == std::vector<int>{0, 1, 2});
    CHECK(act.convinced_sequence == std::vector<int>{1, 2});
}

TEST_CASE("closure on C4 with opposite seeds finishes in one round") {
    auto c4 = cycle_graph(4, const_theta(4, 2));
    auto act = closure(c4, {0, 2});
    CHECK(act.all_active(4));
    CHECK(act.round_of[1] == 1);
    CHECK(act.round_of[3] == 1);
}

TEST_CASE("closure of the full vertex set has no convinced sequence") {
    auto net = bowtie(const_theta(5, 2));
    std::vector<int> all(5);
    std::iota(all.begin(), all.end(), 0);
    auto act = closure(net, all);
    CHECK(act.all_active(5));
    CHECK(act.convinced_sequence.empty());
}

TEST_CASE("nonpositive thresholds activate in round one, not zero") {
    auto net = path_graph(3, {0, 5, 0});
    auto act = closure(net, {});
    CHECK(act.round_of[0] == 1);
    CHECK(act.round_of[2] == 1);
    CHECK(act.round_of[1] == -1);
}

TEST_CASE("sequential closure matches the parallel active set") {
    auto p3 = path_graph(3, const_theta(3, 1));
    auto act = closure_sequential(p3, {1});
    CHECK(act.all_active(3));
    CHECK(act.convinced_sequence == std::vector<int>{0, 2});

    std::vector<int> prefer_high{2, 1, 0};
    auto act2 = closure_sequential(p3, {1}, &prefer_high);
    CHECK(act2.convinced_sequence == std::vector<int>{2, 0});

    auto closed = closure_sequential(p3, {0, 1, 2});
    CHECK(closed.convinced_sequence.empty());
}

TEST_CASE("is_target_set on P4 with threshold 2") {
    auto p4 = path_graph(4, const_theta(4, 2));
    CHECK(is_target_set(p4, {0, 1, 3}));
    CHECK(!is_target_set(p4, {0, 3}));
    CHECK(is_target_set(p4, {0, 1, 2, 3}));
}

TEST_CASE("reduce_for_removed_vertex lowers neighbor thresholds") {
    auto tri = complete_graph(3, const_theta(3, 2));
    auto red = reduce_for_removed_vertex(tri, 0);
    CHECK(red.net.n == 2);
    CHECK(red.net.theta == std::vector<int>{1, 1});
    CHECK(red.net.has_edge(0, 1));
    CHECK(red.old_of_new == std::vector<int>{1, 2});
    CHECK(red.new_of_old == std::vector<int>{-1, 0, 1});

    auto star = star_graph(3, {2, 1, 1, 1});
    auto red2 = reduce_for_removed_vertex(star, 0);
    CHECK(red2.net.edge_count() == 0);
    CHECK(red2.net.theta == std::vector<int>{0, 0, 0});

    auto p3 = path_graph(3, {1, 1, 1});
    auto red3 = reduce_for_removed_vertex(p3, 2);
    CHECK(red3.net.theta[red3.new_of_old[0]] == 1);  // not adjacent to 2
    CHECK(red3.net.theta[red3.new_of_old[1]] == 0);
}

TEST_CASE("reduce_cut_threshold applies the gain") {
    auto tri = complete_graph(3, const_theta(3, 2));
    CHECK(reduce_cut_threshold(tri, 0, 1).theta == std::vector<int>{1, 2, 2});
    CHECK(reduce_cut_threshold(tri, 0, 0).theta == std::vector<int>{2, 2, 2});
    CHECK(reduce_cut_threshold(tri, 0, 3).theta[0] == -1);
    CHECK_THROWS_AS(reduce_cut_threshold(tri, 0, -1), ValidationError);
}

TEST_CASE("closure agrees with the naive fixpoint on random graphs") {
    SplitMix64 rng(7);
    for (int iter = 0; iter < 150; ++iter) {
        int n = rng.range(1, 9);
        auto net = random_connected_graph(rng, n, 45, -1, 4);
        std::vector<int> seeds;
        for (int v = 0; v < n; ++v)
            if (rng.chance(0.3)) seeds.push_back(v);
        auto act = closure(net, seeds);
        auto ref = naive_closure(net, seeds);
        for (int v = 0; v < n; ++v) CHECK((act.round_of[v] >= 0) == (ref[v] != 0));
    }
}

TEST_CASE("property: sequential order independence") {
    SplitMix64 rng(11);
    for (int iter = 0; iter < 100; ++iter) {
        int n = rng.range(2, 10);
        auto net = random_connected_graph(rng, n, 40, 0, 3);
        std::vector<int> seeds;
        for (int v = 0; v < n; ++v)
            if (rng.chance(0.25)) seeds.push_back(v);
        auto par = closure(net, seeds);
        for (int t = 0; t < 4; ++t) {
            std::vector<int> prio(n);
            std::iota(prio.begin(), prio.end(), 0);
            for (int i = n - 1; i > 0; --i)
                std::swap(prio[i], prio[rng.below(static_cast<std::uint64_t>(i + 1))]);
            auto seq = closure_sequential(net, seeds, &prio);
            CHECK(seq.active == par.active);
        }
    }
}

TEST_CASE("property: monotonicity and idempotence of closure") {
    SplitMix64 rng(13);
    for (int iter = 0; iter < 100; ++iter) {
        int n = rng.range(2, 9);
        auto net = random_connected_graph(rng, n, 40, 0, 3);
        std::vector<int> small, large;
        for (int v = 0; v < n; ++v) {
            if (rng.chance(0.2)) small.push_back(v);
            if (rng.chance(0.25)) large.push_back(v);
        }
        for (int v : small)
            if (std::find(large.begin(), large.end(), v) == large.end()) large.push_back(v);
        auto a_small = closure(net, small);
        auto a_large = closure(net, large);
        CHECK(std::includes(a_large.active.begin(), a_large.active.end(), a_small.active.begin(),
                            a_small.active.end()));
        auto again = closure(net, a_small.active);
        CHECK(again.active == a_small.active);
    }
}

TEST_CASE("property: rounds never exceed n") {
    SplitMix64 rng(17);
    for (int iter = 0; iter < 60; ++iter) {
        int n = rng.range(1, 10);
        auto net = random_connected_graph(rng, n, 35, 0, 3);
        std::vector<int> seeds;
        for (int v = 0; v < n; ++v)
            if (rng.chance(0.3)) seeds.push_back(v);
        CHECK(closure(net, seeds).rounds() <= n);
    }
}

TEST_CASE("property: removing a seeded vertex preserves target sets") {
    // For every S not containing v: S targets (G-v, theta1) iff S+v targets G.
    SplitMix64 rng(19);
    for (int iter = 0; iter < 40; ++iter) {
        int n = rng.range(2, 8);
        auto net = random_connected_graph(rng, n, 45, 0, 3);
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        auto red = reduce_for_removed_vertex(net, v);
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            std::vector<int> local, global{v};
            for (int u = 0; u < n - 1; ++u)
                if (mask >> u & 1) {
                    local.push_back(u);
                    global.push_back(red.old_of_new[u]);
                }
            CHECK(is_target_set(red.net, local) == is_target_set(net, global));
        }
    }
}
