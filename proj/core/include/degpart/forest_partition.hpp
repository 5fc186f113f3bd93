#pragma once

#include "degpart/degeneracy.hpp"
#include "degpart/graph.hpp"
#include "degpart/op_counter.hpp"
#include "degpart/partition.hpp"

namespace degpart {

/// Vertices at distance exactly two whose joint removal keeps the graph
/// connected; `witness` is a common neighbour.
struct EligiblePair {
    int x = -1;
    int y = -1;
    int witness = -1;
};

/// Partition into floor(k/2) forests plus, for odd k, one trailing
/// independent set. `k` is the maximum degree it was built for.
struct ForestPartition {
    Partition partition;
    int k = 0;
    int forest_count = 0;
    bool has_independent_class = false;

    int independent_class() const { return has_independent_class ? forest_count : -1; }
};

/// The class layout of a forest partition for maximum degree k.
PartitionSpec forest_spec(int k);

/// Finds an eligible pair of a 2-connected graph that is neither complete
/// nor a cycle, in O(n + m). Throws on precondition violations.
EligiblePair find_eligible_pair(const Graph& g, OpCounter* ops = nullptr);

/// Forest partition of a graph with maximum degree <= k none of whose
/// components is k-regular: degeneracy ordering + greedy assignment.
ForestPartition forest_partition_nonregular(const Graph& g, int k, OpCounter* ops = nullptr);

/// Forest partition of a 2-connected k-regular graph distinct from K_{k+1},
/// k >= 3, via the eligible-pair identification step.
ForestPartition forest_partition_2connected(const Graph& g, int k, OpCounter* ops = nullptr);

/// Forest partition of a connected k-regular graph with a cut vertex:
/// split off an end block, partition both sides, pair classes and place the
/// cut vertex.
ForestPartition forest_partition_with_cut(const Graph& g, int k, OpCounter* ops = nullptr);

/// Dispatch over components: non-regular, 2-connected regular, or regular
/// with a cut vertex. Requires max degree k >= 3 and no K_{k+1} component.
ForestPartition forest_partition(const Graph& g, OpCounter* ops = nullptr);

/// Maps a forest partition onto an arbitrary 0/1 spec with s + t >= k
/// (t = number of 1-classes): whole forests into 1-classes, the independent
/// set and split forest halves into 0-classes, surplus classes left empty.
Partition allocate_classes(const Graph& g, const ForestPartition& fp,
                           const PartitionSpec& spec, OpCounter* ops = nullptr);

/// Full pipeline for a spec with sum(p_i) >= k - s on a graph with maximum
/// degree k >= 3 and no K_{k+1} component. 0/1 specs go through the forest
/// partition; general specs require that no component is k-regular.
Partition degenerate_partition(const Graph& g, const PartitionSpec& spec,
                               OpCounter* ops = nullptr);

namespace detail {

struct EndBlockTrace {
    bool used_fallback = false; // odd-k rebuild of the end-block partition
    int cut_vertex = -1;
    int placed_class = -1;
};

/// forest_partition_with_cut with the combination trace exposed.
ForestPartition forest_partition_with_cut_traced(const Graph& g, int k,
                                                 EndBlockTrace* trace,
                                                 OpCounter* ops = nullptr);

/// Rebuilds a forest partition of an end block minus its cut vertex so that
/// the chosen neighbour `w` of the cut vertex lands in the independent set:
/// ordering [w] + per-component parent-last orderings of B' - w, each rooted
/// at a neighbour of the cut vertex. `cut_neighbors` are the cut vertex's
/// neighbours inside B'.
Partition rebuild_end_block_partition(const Graph& b_prime, int k, int w,
                                      const std::vector<int>& cut_neighbors,
                                      OpCounter* ops = nullptr);

} // namespace detail

} // namespace degpart
