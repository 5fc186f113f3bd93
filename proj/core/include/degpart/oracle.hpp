#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "degpart/graph.hpp"
#include "degpart/partition.hpp"
#include "degpart/rsat.hpp"

namespace degpart {

struct SearchBudget {
    long long node_limit = 100'000'000;
    double time_limit_seconds = 600.0;
};

enum class SearchStatus {
    Found,          // a partition was produced (or the visitor stopped the walk)
    None,           // search space exhausted, no partition exists
    BudgetExceeded, // verdict unknown
};

struct SearchResult {
    SearchStatus status = SearchStatus::None;
    std::optional<Partition> partition;
    long long nodes_visited = 0;
};

/// Exhaustive depth-first (p1,...,ps)-partition search. A branch is pruned
/// as soon as the already-assigned vertices of some class contain a
/// nonempty core at that class's threshold; cores only grow as vertices
/// are added, so pruning is sound. When all class targets are equal the
/// first vertex is pinned to class 0.
SearchResult find_partition_bruteforce(const Graph& g, const PartitionSpec& spec,
                                       const SearchBudget& budget = {},
                                       const std::vector<int>& order_hint = {});

/// Runs the same search but reports every partition found to `visit`;
/// returning false from the visitor stops the walk (status Found). Status
/// None means the space was exhausted (all partitions were reported).
SearchStatus for_each_partition(const Graph& g, const PartitionSpec& spec,
                                const SearchBudget& budget,
                                const std::vector<int>& order_hint,
                                const std::function<bool(const Partition&)>& visit,
                                long long* nodes_visited = nullptr);

/// Every pair (x, y) at distance exactly two with G - {x, y} connected,
/// by direct check. Intended for small graphs (|V| <= 64).
std::vector<std::pair<int, int>> all_eligible_pairs(const Graph& g);

/// Exhaustive assignment enumeration filtered by the variant check.
/// Requires at most 20 variables.
std::vector<Assignment> all_satisfying_assignments(int num_vars,
                                                   const std::vector<std::vector<int>>& clauses,
                                                   SatVariant variant);
std::vector<Assignment> all_satisfying_assignments(const RSatInstance& inst,
                                                   SatVariant variant);

} // namespace degpart
