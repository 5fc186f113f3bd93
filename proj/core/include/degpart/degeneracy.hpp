#pragma once

#include <utility>
#include <vector>

#include "degpart/graph.hpp"
#include "degpart/op_counter.hpp"
#include "degpart/partition.hpp"

namespace degpart {

struct VertexOrdering {
    std::vector<int> order; // order[i] = i-th vertex; a permutation of 0..n-1
};

struct DegeneracyResult {
    VertexOrdering ordering;
    int degeneracy = 0;
};

/// Bucket-queue peeling, O(n + m). In the returned ordering every vertex has
/// at most `degeneracy` neighbours earlier than itself, and the bound is
/// attained exactly.
DegeneracyResult degeneracy_ordering(const Graph& g, OpCounter* ops = nullptr);

/// Ordering of a connected graph that ends at `root` and in which every
/// other vertex has at least one later neighbour (its search-tree parent).
VertexOrdering parent_last_ordering(const Graph& g, int root, OpCounter* ops = nullptr);

struct GreedyOptions {
    std::vector<std::pair<int, int>> pinned;    // (vertex, class): placed as-is
    std::vector<std::pair<int, int>> forbidden; // (vertex, class): never placed there
    /// Prefer a 0-target class whenever the vertex has no neighbour placed
    /// there yet (used to keep the independent class fillable when the class
    /// list carries an odd-degree trailing independent set).
    bool prefer_zero_classes = false;
};

/// Places vertices in ordering sequence: each vertex goes to the first
/// admissible class (at most target[q] already-placed neighbours, not
/// forbidden), lowest index first except for the zero-class preference.
/// Throws std::logic_error if some vertex has no admissible class; the
/// caller guarantees admissibility through the ordering.
Partition greedy_assign(const Graph& g, const VertexOrdering& ordering,
                        const PartitionSpec& spec, const GreedyOptions& opt = {},
                        OpCounter* ops = nullptr);

} // namespace degpart
