#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "degpart/graph.hpp"

namespace degpart {

/// Requested degeneracy bound per class: class i must induce a
/// targets[i]-degenerate subgraph (0 = independent set, 1 = forest).
struct PartitionSpec {
    std::vector<int> targets;

    int size() const { return static_cast<int>(targets.size()); }
    int sum() const;
    bool all_zero_one() const;
    int ones() const;

    /// Parses "p1,p2,..." (non-negative integers, at least one class).
    static PartitionSpec parse(const std::string& csv);
};

/// Total assignment of vertices to spec classes. class_of[v] in 0..s-1.
struct Partition {
    PartitionSpec spec;
    std::vector<int> class_of;

    std::vector<std::vector<int>> members() const;
};

struct ClassCore {
    int class_index;
    std::vector<int> core; // residual after peeling, sorted
};

struct ValidationReport {
    bool ok = false;
    std::vector<ClassCore> failures;
};

/// Peels each class at its target threshold; the class passes iff it peels
/// to empty. Failures carry the residual core.
ValidationReport validate_partition(const Graph& g, const Partition& p);

/// Splits a 1-degenerate class into two independent sets by BFS layer
/// parity per tree. Throws if the induced subgraph is not a forest.
std::pair<std::vector<int>, std::vector<int>>
split_forest(const Graph& g, const std::vector<int>& forest_class);

/// Re-splits every class of a valid partition by a greedy pass over the
/// class's own degeneracy ordering. Requires, for each class with bound p
/// split into targets (p1,...,pt), that sum(pi + 1) >= p + 1.
Partition refine_partition(const Graph& g, const Partition& p,
                           const std::vector<PartitionSpec>& per_class);

/// Partition file format: "p partition <s> <p_1> ... <p_s>" header, then one
/// "v <vertex> <class>" line per vertex, both 1-based. "c " comments allowed.
std::string serialize_partition(const Partition& p);
Partition parse_partition(std::istream& in, int expected_n = -1);
Partition parse_partition_text(const std::string& text, int expected_n = -1);
Partition parse_partition_file(const std::string& path, int expected_n = -1);

} // namespace degpart
