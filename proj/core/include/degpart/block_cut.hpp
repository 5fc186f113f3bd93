#pragma once

#include <utility>
#include <vector>

#include "degpart/graph.hpp"
#include "degpart/op_counter.hpp"

namespace degpart {

/// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices) and
/// cut vertices of a graph. Every edge lies in exactly one block; a vertex
/// lies in two or more blocks iff it is a cut vertex; the block-cut
/// incidence structure is a forest.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;        // sorted vertex lists, ordered by min member
    std::vector<int> cut_vertices;               // sorted
    std::vector<std::vector<int>> blocks_of_cut; // parallel to cut_vertices: block indices

    bool is_cut(int v) const;
};

/// Lowpoint DFS block decomposition, O(n + m). Works per component.
BlockDecomposition block_cut_tree(const Graph& g, OpCounter* ops = nullptr);

/// Blocks containing exactly one cut vertex, as (block index, cut vertex)
/// pairs. Throws if the graph is disconnected or has no cut vertex.
std::vector<std::pair<int, int>> end_blocks(const BlockDecomposition& d);

} // namespace degpart
