#include "degpart/block_cut.hpp"

#include <algorithm>
#include <stdexcept>

namespace degpart {

bool BlockDecomposition::is_cut(int v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

BlockDecomposition block_cut_tree(const Graph& g, OpCounter* ops) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
    std::vector<char> is_art(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> blocks;

    // Explicit DFS frames: vertex plus index into its adjacency list.
    std::vector<std::pair<int, size_t>> stack;
    int timer = 0;

    auto pop_block = [&](int u, int w) {
        std::vector<int> verts;
        while (!edge_stack.empty()) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e.first == u && e.second == w) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        blocks.push_back(std::move(verts));
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            blocks.push_back({root}); // isolated vertex forms its own block
            continue;
        }
        stack.emplace_back(root, 0);
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (ops) ++ops->vertex_visits;
            const auto& nbrs = g.neighbors(v);
            if (idx < nbrs.size()) {
                int u = nbrs[idx++];
                if (ops) ++ops->edge_scans;
                if (u == parent[v]) continue;
                if (disc[u] == -1) {
                    parent[u] = v;
                    ++child_count[v];
                    edge_stack.emplace_back(v, u);
                    disc[u] = low[u] = timer++;
                    stack.emplace_back(u, 0);
                } else if (disc[u] < disc[v]) {
                    edge_stack.emplace_back(v, u);
                    low[v] = std::min(low[v], disc[u]);
                }
            } else {
                stack.pop_back();
                int p = parent[v];
                if (p != -1) {
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) {
                        if (parent[p] != -1 || child_count[p] > 1) is_art[p] = 1;
                        pop_block(p, v);
                    }
                }
            }
        }
    }

    BlockDecomposition d;
    std::sort(blocks.begin(), blocks.end());
    d.blocks = std::move(blocks);
    for (int v = 0; v < n; ++v)
        if (is_art[v]) d.cut_vertices.push_back(v);
    d.blocks_of_cut.assign(d.cut_vertices.size(), {});
    for (size_t b = 0; b < d.blocks.size(); ++b)
        for (int v : d.blocks[b]) {
            auto it = std::lower_bound(d.cut_vertices.begin(), d.cut_vertices.end(), v);
            if (it != d.cut_vertices.end() && *it == v)
                d.blocks_of_cut[it - d.cut_vertices.begin()].push_back(static_cast<int>(b));
        }
    return d;
}

std::vector<std::pair<int, int>> end_blocks(const BlockDecomposition& d) {
    if (d.cut_vertices.empty())
        throw std::invalid_argument("end_blocks: graph is 2-connected, no end blocks");
    std::vector<std::pair<int, int>> out;
    for (size_t b = 0; b < d.blocks.size(); ++b) {
        int cut = -1;
        int cuts = 0;
        for (int v : d.blocks[b])
            if (d.is_cut(v)) {
                cut = v;
                ++cuts;
            }
        if (cuts == 1) out.emplace_back(static_cast<int>(b), cut);
    }
    return out;
}

} // namespace degpart
