#pragma once

#include <vector>

#include "tss/network.hpp"

namespace tss {

/// Outcome of an activation process.
/// Seeds carry round 0; a vertex activated later carries the round in which it
/// turned active (the step index for the sequential rule); round_of is -1 for
/// vertices that never activate. convinced_sequence lists the non-seed
/// activations in nondecreasing round order.
struct ActivationResult {
    std::vector<int> round_of;
    std::vector<int> active;  // sorted
    std::vector<int> convinced_sequence;

    bool all_active(int n) const { return static_cast<int>(active.size()) == n; }
    int rounds() const {
        int r = 0;
        for (int x : round_of) r = std::max(r, x);
        return r;
    }
};

/// Parallel updating rule: each round, every inactive vertex with at least
/// theta(v) active neighbors activates. Vertices with theta(v) <= 0 that are
/// not seeds activate in round 1. Runs to the fixpoint in O(n + m).
ActivationResult closure(const ThresholdedNetwork& net, const std::vector<int>& seeds);

/// Sequential updating rule: one eligible vertex activates per step. The
/// eligible vertex with the smallest priority is picked; priority defaults to
/// the vertex id. The final active set equals the parallel closure for every
/// priority (the process is monotone).
ActivationResult closure_sequential(const ThresholdedNetwork& net, const std::vector<int>& seeds,
                                    const std::vector<int>* priority = nullptr);

/// True iff the closure of seeds activates every vertex.
bool is_target_set(const ThresholdedNetwork& net, const std::vector<int>& seeds);

/// G - v with thresholds lowered by one on the removed vertex's neighbors,
/// plus the id bijection between the two graphs.
struct ReducedNetwork {
    ThresholdedNetwork net;
    std::vector<int> old_of_new;
    std::vector<int> new_of_old;  // -1 for the removed vertex
};

ReducedNetwork reduce_for_removed_vertex(const ThresholdedNetwork& net, int v);

/// Same network with theta(v) lowered by gain (the cut-vertex discount).
ThresholdedNetwork reduce_cut_threshold(const ThresholdedNetwork& net, int v, int gain);

}  // namespace tss
