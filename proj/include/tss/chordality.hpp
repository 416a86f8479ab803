#pragma once

#include <vector>

#include "tss/network.hpp"

namespace tss {

/// Result of chordality recognition. When chordal, peo is a verified perfect
/// elimination order (for each position i, the later neighbors of peo[i]
/// form a clique). Otherwise witness_cycle is an induced cycle of length
/// >= 4, listed in cycle order.
struct ChordalityResult {
    bool chordal = false;
    std::vector<int> peo;
    std::vector<int> witness_cycle;
};

/// Maximum-cardinality search followed by the elimination-order check. The
/// check certifies the answer in both directions: a passing order is a PEO,
/// and a failing one yields a hole.
ChordalityResult recognize_chordal(const ThresholdedNetwork& net);

/// True iff order (a permutation of 0..n-1) is a perfect elimination order.
bool verify_peo(const ThresholdedNetwork& net, const std::vector<int>& order);

}  // namespace tss
