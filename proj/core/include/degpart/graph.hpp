#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace degpart {

/// Simple undirected graph over dense vertex ids 0..n-1.
///
/// Adjacency lists are kept sorted. Instances are immutable after
/// construction; from_edges() rejects self-loops and parallel edges, so the
/// simplicity and symmetry invariants hold for every object that exists.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Throws std::invalid_argument on
    /// self-loops, duplicate edges or out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    /// All edges with the smaller endpoint first, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    /// Subgraph induced by `vertices` (sorted, distinct). New ids are the
    /// positions in `vertices`; optional maps translate between id spaces.
    Graph induced(const std::vector<int>& vertices,
                  std::vector<int>* old_of_new = nullptr,
                  std::vector<int>* new_of_old = nullptr) const;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// Reads the "p edge" graph format: optional "c " comment lines, one
/// "p edge <n> <m>" header, then exactly m lines "e <u> <v>" with
/// 1 <= u < v <= n. Vertex ids are 1-based in files, 0-based in memory.
Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
Graph parse_graph_file(const std::string& path);

/// Inverse of parse_graph: header plus sorted "e" lines, LF endings.
std::string serialize_graph(const Graph& g);

int max_degree(const Graph& g);
bool is_k_regular(const Graph& g, int k);
bool is_complete(const Graph& g);

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

} // namespace degpart
