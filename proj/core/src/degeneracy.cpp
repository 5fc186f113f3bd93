#include "degpart/degeneracy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace degpart {

DegeneracyResult degeneracy_ordering(const Graph& g, OpCounter* ops) {
    int n = g.vertex_count();
    DegeneracyResult res;
    res.ordering.order.resize(n);
    if (n == 0) return res;

    int maxd = 0;
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        maxd = std::max(maxd, deg[v]);
    }

    // Counting-sort bucket layout: vert holds vertices ordered by current
    // degree, pos[v] is v's index in vert, bin[d] is the start of degree d.
    std::vector<int> bin(maxd + 2, 0), vert(n), pos(n);
    for (int v = 0; v < n; ++v) ++bin[deg[v]];
    int start = 0;
    for (int d = 0; d <= maxd; ++d) {
        int width = bin[d];
        bin[d] = start;
        start += width;
    }
    for (int v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]]++;
        vert[pos[v]] = v;
    }
    for (int d = maxd; d >= 1; --d) bin[d] = bin[d - 1];
    bin[0] = 0;

    int degeneracy = 0;
    for (int i = 0; i < n; ++i) {
        int v = vert[i];
        int dv = deg[v];
        if (ops) ++ops->vertex_visits;
        degeneracy = std::max(degeneracy, dv);
        for (int u : g.neighbors(v)) {
            if (ops) ++ops->edge_scans;
            // Stored degrees never drop below the current peel level, so the
            // degree-du zone starts after position i and the swap is safe.
            if (pos[u] <= i || deg[u] <= dv) continue;
            int du = deg[u], pu = pos[u], pw = bin[du];
            int w = vert[pw];
            if (u != w) {
                std::swap(vert[pu], vert[pw]);
                pos[u] = pw;
                pos[w] = pu;
            }
            ++bin[du];
            --deg[u];
            if (ops) ++ops->vertex_visits;
        }
    }
    // Peeling lists smallest-degree vertices first; reversing it bounds the
    // number of earlier neighbours by the degeneracy.
    for (int i = 0; i < n; ++i) res.ordering.order[i] = vert[n - 1 - i];
    res.degeneracy = degeneracy;
    return res;
}

VertexOrdering parent_last_ordering(const Graph& g, int root, OpCounter* ops) {
    int n = g.vertex_count();
    if (root < 0 || root >= n) throw std::invalid_argument("parent_last_ordering: bad root");
    std::vector<int> disc;
    disc.reserve(n);
    std::vector<char> seen(n, 0);
    std::vector<int> queue;
    queue.push_back(root);
    seen[root] = 1;
    size_t head = 0;
    while (head < queue.size()) {
        int v = queue[head++];
        if (ops) ++ops->vertex_visits;
        disc.push_back(v);
        for (int u : g.neighbors(v)) {
            if (ops) ++ops->edge_scans;
            if (!seen[u]) {
                seen[u] = 1;
                queue.push_back(u);
            }
        }
    }
    if (static_cast<int>(disc.size()) != n)
        throw std::invalid_argument("parent_last_ordering: graph is disconnected");
    VertexOrdering out;
    out.order.assign(disc.rbegin(), disc.rend());
    return out;
}

Partition greedy_assign(const Graph& g, const VertexOrdering& ordering,
                        const PartitionSpec& spec, const GreedyOptions& opt,
                        OpCounter* ops) {
    int n = g.vertex_count();
    int s = spec.size();
    if (s < 1) throw std::invalid_argument("greedy_assign: empty spec");
    if (static_cast<int>(ordering.order.size()) != n)
        throw std::invalid_argument("greedy_assign: ordering does not cover the graph");

    std::vector<int> cls(n, -1);
    std::vector<int> placed((size_t)n * s, 0); // placed[v*s+q] = v's neighbours already in q
    std::vector<char> forb((size_t)n * s, 0);
    for (auto [v, q] : opt.forbidden) {
        if (v < 0 || v >= n || q < 0 || q >= s)
            throw std::invalid_argument("greedy_assign: forbidden entry out of range");
        forb[(size_t)v * s + q] = 1;
    }
    std::vector<int> pin(n, -1);
    for (auto [v, q] : opt.pinned) {
        if (v < 0 || v >= n || q < 0 || q >= s)
            throw std::invalid_argument("greedy_assign: pinned entry out of range");
        pin[v] = q;
    }
    bool has_zero_class = false;
    for (int t : spec.targets) has_zero_class |= (t == 0);

    for (int v : ordering.order) {
        if (cls[v] != -1) throw std::invalid_argument("greedy_assign: vertex repeated in ordering");
        int chosen = -1;
        if (pin[v] != -1) {
            chosen = pin[v];
            if (placed[(size_t)v * s + chosen] > spec.targets[chosen])
                throw std::logic_error("greedy_assign: pinned class over capacity");
        } else {
            if (opt.prefer_zero_classes && has_zero_class) {
                for (int q = 0; q < s; ++q) {
                    if (ops) ++ops->class_probes;
                    if (spec.targets[q] == 0 && !forb[(size_t)v * s + q] &&
                        placed[(size_t)v * s + q] == 0) {
                        chosen = q;
                        break;
                    }
                }
            }
            if (chosen == -1) {
                for (int q = 0; q < s; ++q) {
                    if (ops) ++ops->class_probes;
                    if (!forb[(size_t)v * s + q] &&
                        placed[(size_t)v * s + q] <= spec.targets[q]) {
                        chosen = q;
                        break;
                    }
                }
            }
            if (chosen == -1)
                throw std::logic_error("greedy_assign: no admissible class for vertex " +
                                       std::to_string(v + 1));
        }
        cls[v] = chosen;
        for (int u : g.neighbors(v)) {
            if (ops) ++ops->edge_scans;
            if (cls[u] == -1) ++placed[(size_t)u * s + chosen];
        }
    }
    return Partition{spec, std::move(cls)};
}

} // namespace degpart
