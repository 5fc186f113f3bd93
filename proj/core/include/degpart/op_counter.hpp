#pragma once

namespace degpart {

/// Machine-independent work counters. Conventions: one edge_scans increment
/// per adjacency-list entry touched, one vertex_visits increment per vertex
/// pop or bucket move, one class_probes increment per class admissibility
/// check. Counters only grow.
struct OpCounter {
    unsigned long long vertex_visits = 0;
    unsigned long long edge_scans = 0;
    unsigned long long class_probes = 0;

    unsigned long long total() const { return vertex_visits + edge_scans + class_probes; }
};

} // namespace degpart
