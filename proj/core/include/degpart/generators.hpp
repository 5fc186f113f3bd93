#pragma once

#include <cstdint>
#include <string>

#include "degpart/graph.hpp"

namespace degpart {

/// Simple k-regular graph via the pairing model: shuffle n*k stubs, pair
/// them up, reject pairings with loops or repeated edges, retry up to 200
/// times. Deterministic for a fixed seed. Throws on infeasible (n*k odd,
/// k >= n) input or when the retry budget runs out.
Graph random_regular(int n, int k, std::uint64_t seed);

/// Curated family: "petersen", "prism", "bowtie", "q3", "k<t>" (complete),
/// "c<t>" (cycle). Names are case-insensitive.
Graph named_graph(const std::string& name);

} // namespace degpart
