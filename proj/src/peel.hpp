#pragma once

// Internal: shared pendant-peeling driver for the block solvers.

#include <functional>
#include <vector>

#include "tss/block_cut_tree.hpp"
#include "tss/diffusion.hpp"
#include "tss/solver.hpp"

namespace tss::detail {

struct LocalBlock {
    ThresholdedNetwork net;
    std::vector<int> global_of_local;
    int local_cut = -1;  // -1 when the step has no attaching cut vertex
};

LocalBlock make_local_block(const BlockCutTree& bct, int block_index,
                            const std::vector<int>& theta, int cut_vertex);

// Peels processing_order, calling pendant() on every non-root block and
// base() on the root, discounting theta at each cut vertex by the returned
// gain. Verifies that the union is a target set.
SolveReport peel_solve(
    const ThresholdedNetwork& net, const BlockCutTree& bct, SolverKind kind,
    const std::function<PendantResult(const ThresholdedNetwork&, int, int)>& pendant,
    const std::function<std::vector<int>(const ThresholdedNetwork&, int)>& base);

}  // namespace tss::detail
