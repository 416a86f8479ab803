#pragma once

#include <utility>
#include <vector>

#include "tss/network.hpp"

namespace tss {

/// Decomposition of a connected graph into blocks (maximal subgraphs without a
/// cut vertex) and the cut vertices joining them, plus a deterministic
/// pendant-first peeling order ending in a root block.
struct BlockCutTree {
    std::vector<std::vector<int>> blocks;                       // sorted vertex ids
    std::vector<std::vector<std::pair<int, int>>> block_edges;  // each edge once, u < v
    std::vector<int> cut_vertices;                              // sorted
    std::vector<char> is_cut;
    std::vector<std::vector<int>> cuts_of_block;   // incidence, sorted cut ids
    std::vector<std::vector<int>> blocks_of_cut;   // indexed like cut_vertices

    struct PeelStep {
        int block;       // index into blocks
        int cut_vertex;  // attaching cut vertex; -1 for the final root block
    };
    std::vector<PeelStep> processing_order;
};

/// Biconnected-components decomposition. Requires a connected input and
/// throws DisconnectedError (naming two components) otherwise. A single
/// vertex yields one edgeless block.
BlockCutTree block_cut_tree(const ThresholdedNetwork& net);

enum class BlockClass { Edge, Complete, Cycle, TwoConnectedChordal, Other };

/// Most specific class of an induced block: Edge before Complete (K_2),
/// Complete before Cycle (so C_3 counts as complete), then chordality.
BlockClass classify_block(const ThresholdedNetwork& net, const std::vector<int>& block);

/// Same classification from a block's vertex and edge counts alone; valid
/// only for actual blocks, where 2-connectivity pins the degree structure.
/// Never returns TwoConnectedChordal (that needs the adjacency).
BlockClass classify_block_counts(std::size_t vertices, std::size_t edges);

enum class GraphClass { BlockCactus, ChordalThetaLe2, General };

/// Dispatch class for the solvers. Block-cactus wins when both classes hold
/// since that solver places no cap on thresholds.
GraphClass classify_graph(const ThresholdedNetwork& net);

const char* to_string(BlockClass c);
const char* to_string(GraphClass c);

}  // namespace tss
