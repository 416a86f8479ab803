#pragma once

#include <optional>
#include <vector>

#include "tss/block_cut_tree.hpp"
#include "tss/network.hpp"

namespace tss {

enum class SolverKind { BlockCactus, Chordal };

/// One pendant-peel step: the block's vertices, the attaching cut vertex
/// (-1 for the root block), the locally chosen seed and the threshold
/// discount |N(v) ∩ closure| granted to the cut vertex.
struct BlockTrace {
    std::vector<int> block;
    int cut_vertex = -1;
    std::vector<int> local_seed;
    int gain = 0;
};

struct SolveReport {
    std::vector<int> seed;  // sorted
    int size = 0;
    SolverKind solver = SolverKind::BlockCactus;
    std::vector<BlockTrace> per_block_trace;
};

/// Exact optimal target set for a connected block-cactus graph (every block
/// complete or a cycle), by peeling pendant blocks and discounting the cut
/// vertex's threshold by the realized gain. Throws WrongClassError otherwise.
SolveReport solve_block_cactus(const ThresholdedNetwork& net);

/// Exact optimal target set for a connected chordal graph with all
/// thresholds <= 2. Throws WrongThresholdsError / WrongClassError.
SolveReport solve_chordal(const ThresholdedNetwork& net);

/// Seed and gain of one pendant-block subproblem, in the block's vertex ids.
struct PendantResult {
    std::vector<int> seed;  // sorted, excludes the cut vertex
    int gain = 0;
};

/// Pendant step for a complete block containing cut vertex v: sort the other
/// vertices by lowered threshold, take the greedy suffix as the seed, and
/// read the gain off the closure inside the block.
PendantResult pendant_complete_solve(const ThresholdedNetwork& block, int v);

/// Closed-form closure size in a complete graph: given the non-seed
/// thresholds in nondecreasing order and the seed count s, returns r such
/// that the closure is the seeds plus the r easiest residual vertices.
int complete_closure_size(const std::vector<int>& sorted_residual_thetas, int s);

/// Pendant step for a cycle block: forced seeds, free-activation discounts
/// swept once in each direction, then per-path-component seed patterns with
/// the boundary variants compared by their realized gain.
PendantResult pendant_cycle_solve(const ThresholdedNetwork& block, int v);

/// Optimal target set of a free-standing complete graph.
std::vector<int> base_complete_solve(const ThresholdedNetwork& block);

/// Optimal target set of a free-standing cycle, by anchoring one vertex and
/// taking the best of the constant number of cases its threshold allows.
std::vector<int> base_cycle_solve(const ThresholdedNetwork& block);

/// Optimal target set of a free-standing path with arbitrary thresholds.
/// The cycle and chordal routines reduce to this.
std::vector<int> path_optimal_seed(const std::vector<int>& thetas);

/// Sets and flags driving the chordal pendant-block case split. I collects
/// vertices free once the cut vertex is discounted; J / J0 collect thresholds
/// below 2 / at most 0; the flags witness close pairs or boosting edges.
struct ChordalBlockAnalysis {
    std::vector<int> I, J, J0;  // sorted vertex ids of the block
    bool P1 = false, P2 = false, Q1 = false, Q2 = false;
};

ChordalBlockAnalysis analyze_block(const ThresholdedNetwork& block, std::optional<int> v);

/// Pendant step for a 2-connected chordal block with thresholds <= 2; the
/// five cases are tried in order and the first that applies decides.
PendantResult pendant_chordal_solve(const ThresholdedNetwork& block, int v);

/// Optimal target set of a free-standing 2-connected chordal block with
/// thresholds <= 2: empty set, one vertex next to a sub-2 threshold, or one
/// edge, in that order of preference.
std::vector<int> base_2connected_chordal_solve(const ThresholdedNetwork& block);

}  // namespace tss
