#pragma once

#include <optional>
#include <vector>

#include "tss/network.hpp"

namespace tss {

struct OracleResult {
    int size = 0;
    std::vector<int> witness;  // sorted
};

/// Exhaustive minimum target set. Vertices with theta(v) > degree(v) belong
/// to every target set and are forced in before enumeration (set prune=false
/// to disable). Subsets are tried in increasing size, lexicographically
/// within a size, so the witness is deterministic. Returns nullopt when cap
/// is given and no target set of size <= cap exists.
std::optional<OracleResult> brute_force_min_seed(const ThresholdedNetwork& net,
                                                 std::optional<int> cap = std::nullopt,
                                                 bool prune = true);

/// All optimal target sets in lexicographic order.
std::vector<std::vector<int>> enumerate_optimal_sets(const ThresholdedNetwork& net);

struct PendantOracle {
    std::vector<int> seed;  // vertex ids of net (v excluded)
    int gain = 0;
};

/// Ground truth for the pendant objective: among all optimal target sets of
/// (net - v, theta_1), one maximizing |N(v) ∩ [S]| where the closure runs in
/// net under the original thresholds. Deterministic: first maximizer in
/// lexicographic order.
PendantOracle best_pendant_seed(const ThresholdedNetwork& net, int v);

/// Enumeration guard; TSS_ORACLE_LIMIT overrides the default of 20.
int oracle_vertex_limit();

}  // namespace tss
