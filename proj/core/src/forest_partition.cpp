#include "degpart/forest_partition.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

#include "degpart/block_cut.hpp"

namespace degpart {

PartitionSpec forest_spec(int k) {
    if (k < 3) throw std::invalid_argument("forest_spec: maximum degree must be at least 3");
    PartitionSpec spec;
    spec.targets.assign(k / 2, 1);
    if (k % 2 == 1) spec.targets.push_back(0);
    return spec;
}

namespace {

ForestPartition wrap(Partition&& p, int k) {
    ForestPartition fp;
    fp.partition = std::move(p);
    fp.k = k;
    fp.forest_count = k / 2;
    fp.has_independent_class = (k % 2 == 1);
    return fp;
}

bool two_connected(const Graph& g, const BlockDecomposition& d) {
    return g.vertex_count() >= 3 && is_connected(g) && d.cut_vertices.empty();
}

// First vertex at distance exactly two from src, with a witness common
// neighbour; {-1, -1} when every other vertex is adjacent to src.
std::pair<int, int> distance_two_vertex(const Graph& g, int src, OpCounter* ops) {
    std::vector<int> level(g.vertex_count(), -1);
    level[src] = 0;
    for (int u : g.neighbors(src)) level[u] = 1;
    int best = -1, witness = -1;
    for (int u : g.neighbors(src)) {
        if (ops) ++ops->vertex_visits;
        for (int w : g.neighbors(u)) {
            if (ops) ++ops->edge_scans;
            if (level[w] == -1 && (best == -1 || w < best)) {
                best = w;
                witness = u;
            }
        }
    }
    if (best == -1) return {-1, -1};
    // lowest witness for determinism
    for (int u : g.neighbors(src))
        if (u < witness && g.has_edge(u, best)) witness = u;
    return {best, witness};
}

} // namespace

EligiblePair find_eligible_pair(const Graph& g, OpCounter* ops) {
    int n = g.vertex_count();
    BlockDecomposition whole = block_cut_tree(g, ops);
    if (!two_connected(g, whole)) throw std::invalid_argument("find_eligible_pair: graph is not 2-connected");
    if (is_complete(g)) throw std::invalid_argument("find_eligible_pair: graph is complete");
    if (is_k_regular(g, 2)) throw std::invalid_argument("find_eligible_pair: graph is a cycle");

    // A non-cycle 2-connected graph has a vertex of degree >= 3; anchoring
    // there keeps G - {x, y} connected in the branch below.
    int v = -1;
    for (int u = 0; u < n && v == -1; ++u)
        if (g.degree(u) >= 3) v = u;

    std::vector<int> rest;
    rest.reserve(n - 1);
    for (int u = 0; u < n; ++u)
        if (u != v) rest.push_back(u);
    std::vector<int> old_of_new;
    Graph g_minus_v = g.induced(rest, &old_of_new);
    BlockDecomposition d = block_cut_tree(g_minus_v, ops);

    if (d.cut_vertices.empty()) {
        // G - v is 2-connected: v with any vertex at distance two works.
        auto [y, witness] = distance_two_vertex(g, v, ops);
        if (y != -1) return {v, y, witness};
        // v is universal; any two non-adjacent vertices meet through v.
        for (int u = 0; u < n; ++u) {
            if (u == v || g.degree(u) == n - 1) continue;
            std::vector<char> adj(n, 0);
            adj[u] = 1;
            for (int w : g.neighbors(u)) adj[w] = 1;
            for (int w = 0; w < n; ++w)
                if (!adj[w] && w != v) return {u, w, v};
        }
        throw std::logic_error("find_eligible_pair: non-complete graph without distance-2 pair");
    }

    // G - v has cut vertices: take neighbours of v inside the interiors of
    // two distinct end blocks. They are non-adjacent (different blocks) and
    // removing them keeps both blocks' remainders attached.
    auto ends = end_blocks(d);
    assert(ends.size() >= 2);
    int picked[2] = {-1, -1};
    int chosen_blocks = 0;
    for (auto [bi, cut] : ends) {
        int candidate = -1;
        for (int w : d.blocks[bi]) {
            if (w == cut) continue;
            int orig = old_of_new[w];
            if (g.has_edge(v, orig) && (candidate == -1 || orig < candidate)) candidate = orig;
        }
        if (candidate == -1)
            throw std::logic_error("find_eligible_pair: end block interior without neighbour of v");
        picked[chosen_blocks++] = candidate;
        if (chosen_blocks == 2) break;
    }
    return {picked[0], picked[1], v};
}

ForestPartition forest_partition_nonregular(const Graph& g, int k, OpCounter* ops) {
    if (max_degree(g) > k)
        throw std::invalid_argument("forest_partition_nonregular: maximum degree exceeds k");
    for (const auto& comp : connected_components(g)) {
        bool regular = true;
        for (int v : comp) regular &= (g.degree(v) == k);
        if (regular)
            throw std::invalid_argument("forest_partition_nonregular: component is k-regular");
    }
    PartitionSpec spec = forest_spec(k);
    auto deg = degeneracy_ordering(g, ops);
    GreedyOptions opt;
    opt.prefer_zero_classes = (k % 2 == 1);
    return wrap(greedy_assign(g, deg.ordering, spec, opt, ops), k);
}

ForestPartition forest_partition_2connected(const Graph& g, int k, OpCounter* ops) {
    int n = g.vertex_count();
    if (k < 3) throw std::invalid_argument("forest_partition_2connected: k must be at least 3");
    if (!is_k_regular(g, k))
        throw std::invalid_argument("forest_partition_2connected: graph is not k-regular");
    if (n == k + 1) throw std::invalid_argument("graph is K_{k+1}");

    EligiblePair pair = find_eligible_pair(g, ops); // also checks 2-connectivity
    int x = pair.x, y = pair.y, v = pair.witness;

    // Identify x and y into z. New ids: drop y, compact, z is x's image.
    std::vector<int> new_id(n, -1);
    int next = 0;
    for (int u = 0; u < n; ++u)
        if (u != y) new_id[u] = next++;
    int z = new_id[x];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(g.edge_count()));
    for (auto [a, b] : g.edges()) {
        if (a == y) a = x;
        if (b == y) b = x;
        int na = new_id[a], nb = new_id[b];
        if (na > nb) std::swap(na, nb);
        edges.emplace_back(na, nb);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Graph merged = Graph::from_edges(n - 1, edges);
    if (ops) ops->edge_scans += static_cast<unsigned long long>(g.edge_count());

    // Common neighbours of x and y other than v: they have k - 2 earlier
    // neighbours in the ordering below, so a forest class away from z's
    // class is always available to them.
    std::vector<int> commons;
    for (int u : g.neighbors(x))
        if (u != v && g.has_edge(y, u)) commons.push_back(u);

    // Ordering: z first, then G - {x, y} with the witness last.
    std::vector<int> rest;
    rest.reserve(n - 2);
    for (int u = 0; u < n; ++u)
        if (u != x && u != y) rest.push_back(u);
    std::vector<int> old_of_rest;
    Graph star = g.induced(rest, &old_of_rest);
    int root = -1;
    for (size_t i = 0; i < old_of_rest.size(); ++i)
        if (old_of_rest[i] == v) root = static_cast<int>(i);
    VertexOrdering tail = parent_last_ordering(star, root, ops);

    VertexOrdering ordering;
    ordering.order.reserve(n - 1);
    ordering.order.push_back(z);
    for (int u : tail.order) ordering.order.push_back(new_id[old_of_rest[u]]);

    PartitionSpec spec = forest_spec(k);
    bool odd = (k % 2 == 1);
    int pin_class = odd ? spec.size() - 1 : 0; // the class that will hold x and y
    GreedyOptions opt;
    opt.prefer_zero_classes = odd;
    opt.pinned.emplace_back(z, pin_class);
    for (int u : commons) opt.forbidden.emplace_back(new_id[u], pin_class);
    Partition merged_part = greedy_assign(merged, ordering, spec, opt, ops);

    // Split z back into x and y.
    Partition part{spec, std::vector<int>(n, -1)};
    for (int u = 0; u < n; ++u)
        if (u != y) part.class_of[u] = merged_part.class_of[new_id[u]];
    part.class_of[x] = pin_class;
    part.class_of[y] = pin_class;
    return wrap(std::move(part), k);
}

namespace detail {

Partition rebuild_end_block_partition(const Graph& b_prime, int k, int w,
                                      const std::vector<int>& cut_neighbors,
                                      OpCounter* ops) {
    int nb = b_prime.vertex_count();
    std::vector<char> is_cut_nbr(nb, 0);
    for (int u : cut_neighbors) is_cut_nbr[u] = 1;

    // [w] + per-component parent-last orderings of B' - w, each rooted at a
    // neighbour of the removed cut vertex (one exists in every component
    // because the end block is 2-connected).
    std::vector<int> rest;
    rest.reserve(nb - 1);
    for (int u = 0; u < nb; ++u)
        if (u != w) rest.push_back(u);
    std::vector<int> old_of_new;
    Graph remainder = b_prime.induced(rest, &old_of_new);

    VertexOrdering ordering;
    ordering.order.reserve(nb);
    ordering.order.push_back(w);
    for (const auto& comp : connected_components(remainder)) {
        int root = -1;
        for (int u : comp)
            if (is_cut_nbr[old_of_new[u]]) {
                root = u;
                break;
            }
        if (root == -1)
            throw std::logic_error("rebuild_end_block_partition: component without cut-vertex neighbour");
        std::vector<int> comp_old;
        Graph comp_graph = remainder.induced(comp, &comp_old);
        int comp_root = -1;
        for (size_t i = 0; i < comp_old.size(); ++i)
            if (comp_old[i] == root) comp_root = static_cast<int>(i);
        VertexOrdering sub = parent_last_ordering(comp_graph, comp_root, ops);
        for (int u : sub.order) ordering.order.push_back(old_of_new[comp_old[u]]);
    }

    GreedyOptions opt;
    opt.prefer_zero_classes = true; // w has no earlier neighbours, so it lands in the independent set
    return greedy_assign(b_prime, ordering, forest_spec(k), opt, ops);
}

ForestPartition forest_partition_with_cut_traced(const Graph& g, int k, EndBlockTrace* trace,
                                                 OpCounter* ops) {
    int n = g.vertex_count();
    if (k < 3) throw std::invalid_argument("forest_partition_with_cut: k must be at least 3");
    if (!is_k_regular(g, k))
        throw std::invalid_argument("forest_partition_with_cut: graph is not k-regular");
    if (!is_connected(g))
        throw std::invalid_argument("forest_partition_with_cut: graph is disconnected");
    BlockDecomposition d = block_cut_tree(g, ops);
    if (d.cut_vertices.empty())
        throw std::invalid_argument("forest_partition_with_cut: graph is 2-connected");

    auto ends = end_blocks(d);
    int block_index = ends.front().first;
    int v = ends.front().second;
    if (trace) trace->cut_vertex = v;

    const auto& block = d.blocks[block_index];
    std::vector<char> in_block(n, 0);
    for (int u : block) in_block[u] = 1;

    std::vector<int> outside, inside;
    outside.reserve(n - block.size());
    for (int u = 0; u < n; ++u)
        if (!in_block[u]) outside.push_back(u);
    for (int u : block)
        if (u != v) inside.push_back(u);

    std::vector<int> old_of_out, old_of_in, new_of_in(n, -1);
    Graph g_out = g.induced(outside, &old_of_out);
    Graph b_prime = g.induced(inside, &old_of_in);
    for (size_t i = 0; i < old_of_in.size(); ++i) new_of_in[old_of_in[i]] = static_cast<int>(i);

    // Both sides miss at least one edge at every neighbour of v, so neither
    // has a k-regular component.
    ForestPartition f_out = forest_partition_nonregular(g_out, k, ops);
    ForestPartition f_in = forest_partition_nonregular(b_prime, k, ops);

    PartitionSpec spec = forest_spec(k);
    int s = spec.size();
    int forests = k / 2;
    bool odd = (k % 2 == 1);
    int is_class = odd ? forests : -1;

    std::vector<char> out_set(n, 0);
    for (int u : outside) out_set[u] = 1;
    std::vector<int> cnt_out(s, 0), cnt_in(s, 0);
    std::vector<int> v_inside_nbrs; // ids in b_prime
    auto recount = [&]() {
        std::fill(cnt_out.begin(), cnt_out.end(), 0);
        std::fill(cnt_in.begin(), cnt_in.end(), 0);
        v_inside_nbrs.clear();
        for (int u : g.neighbors(v)) {
            if (out_set[u]) {
                // position of u in outside list
                int id = static_cast<int>(std::lower_bound(outside.begin(), outside.end(), u) -
                                          outside.begin());
                ++cnt_out[f_out.partition.class_of[id]];
            } else if (u != v) {
                int id = new_of_in[u];
                v_inside_nbrs.push_back(id);
                ++cnt_in[f_in.partition.class_of[id]];
            }
        }
    };
    recount();

    auto lowest_forest = [&](const std::vector<int>& cnt, int cap) {
        for (int c = 0; c < forests; ++c)
            if (cnt[c] <= cap) return c;
        return -1;
    };

    int fa = lowest_forest(cnt_out, 1);
    int fb = lowest_forest(cnt_in, 1);
    int place_class;
    if (fa != -1 && fb != -1) {
        place_class = fa;
    } else if (odd && cnt_out[is_class] + cnt_in[is_class] == 0) {
        fa = fb = is_class;
        place_class = is_class;
    } else {
        // Only reachable for odd k when v's single outside neighbour sits in
        // the independent set and every inside forest holds two neighbours:
        // rebuild the block partition so a neighbour of v starts it and
        // therefore joins the independent set.
        if (!odd || fa == -1)
            throw std::logic_error("forest_partition_with_cut: pairing counts out of range");
        if (trace) trace->used_fallback = true;
        std::sort(v_inside_nbrs.begin(), v_inside_nbrs.end());
        int w = v_inside_nbrs.front();
        f_in = wrap(detail::rebuild_end_block_partition(b_prime, k, w, v_inside_nbrs, ops), k);
        recount();
        fa = lowest_forest(cnt_out, 0);
        fb = lowest_forest(cnt_in, 1);
        if (fa == -1 || fb == -1)
            throw std::logic_error("forest_partition_with_cut: fallback did not free a forest");
        place_class = fa;
    }
    if (trace) trace->placed_class = place_class;

    // Relabel the block side so class fb lines up with fa; other classes
    // pair up identity-wise (independent sets always pair together).
    std::vector<int> relabel(s);
    for (int c = 0; c < s; ++c) relabel[c] = c;
    if (fa != fb) std::swap(relabel[fa], relabel[fb]);

    Partition out{spec, std::vector<int>(n, -1)};
    for (size_t i = 0; i < old_of_out.size(); ++i)
        out.class_of[old_of_out[i]] = f_out.partition.class_of[i];
    for (size_t i = 0; i < old_of_in.size(); ++i)
        out.class_of[old_of_in[i]] = relabel[f_in.partition.class_of[i]];
    out.class_of[v] = place_class;
    return wrap(std::move(out), k);
}

} // namespace detail

ForestPartition forest_partition_with_cut(const Graph& g, int k, OpCounter* ops) {
    return detail::forest_partition_with_cut_traced(g, k, nullptr, ops);
}

ForestPartition forest_partition(const Graph& g, OpCounter* ops) {
    int n = g.vertex_count();
    int k = max_degree(g);
    if (k <= 2)
        throw std::invalid_argument("forest_partition: maximum degree must be at least 3");

    auto comps = connected_components(g);
    PartitionSpec spec = forest_spec(k);
    Partition part{spec, std::vector<int>(n, -1)};
    for (const auto& comp : comps) {
        std::vector<int> old_of_new;
        Graph sub = g.induced(comp, &old_of_new);
        ForestPartition fp;
        if (!is_k_regular(sub, k)) {
            fp = forest_partition_nonregular(sub, k, ops);
        } else if (sub.vertex_count() == k + 1) {
            throw std::invalid_argument(comps.size() == 1 ? "graph is K_{k+1}"
                                                          : "component is K_{k+1}");
        } else {
            BlockDecomposition d = block_cut_tree(sub, ops);
            if (d.cut_vertices.empty())
                fp = forest_partition_2connected(sub, k, ops);
            else
                fp = detail::forest_partition_with_cut_traced(sub, k, nullptr, ops);
        }
        for (size_t i = 0; i < old_of_new.size(); ++i)
            part.class_of[old_of_new[i]] = fp.partition.class_of[i];
    }
    return wrap(std::move(part), k);
}

Partition allocate_classes(const Graph& g, const ForestPartition& fp, const PartitionSpec& spec,
                           OpCounter* ops) {
    if (!spec.all_zero_one())
        throw std::invalid_argument("allocate_classes: spec classes must all be 0 or 1");
    int s = spec.size();
    int t = spec.ones();
    if (s + t < fp.k)
        throw std::invalid_argument("spec bound violated: need s + t >= k, got s=" +
                                    std::to_string(s) + " t=" + std::to_string(t) +
                                    " k=" + std::to_string(fp.k));

    std::vector<int> ones_idx, zeros_idx;
    for (int c = 0; c < s; ++c) (spec.targets[c] == 1 ? ones_idx : zeros_idx).push_back(c);

    auto fp_members = fp.partition.members();
    int r = fp.forest_count;
    size_t next_one = 0, next_zero = 0;

    Partition out{spec, std::vector<int>(g.vertex_count(), -1)};
    auto put = [&](const std::vector<int>& verts, int cls) {
        for (int v : verts) out.class_of[v] = cls;
    };

    int whole_forests = std::min<int>(r, static_cast<int>(ones_idx.size()));
    for (int f = 0; f < whole_forests; ++f) put(fp_members[f], ones_idx[next_one++]);

    if (fp.has_independent_class) {
        const auto& is_members = fp_members[fp.independent_class()];
        if (next_one < ones_idx.size())
            put(is_members, ones_idx[next_one++]); // independent sets are forests too
        else
            put(is_members, zeros_idx.at(next_zero++));
    }
    for (int f = whole_forests; f < r; ++f) {
        auto halves = split_forest(g, fp_members[f]);
        if (ops) ops->vertex_visits += fp_members[f].size();
        put(halves.first, zeros_idx.at(next_zero++));
        put(halves.second, zeros_idx.at(next_zero++));
    }
    return out;
}

Partition degenerate_partition(const Graph& g, const PartitionSpec& spec, OpCounter* ops) {
    int k = max_degree(g);
    int s = spec.size();
    if (k <= 2)
        throw std::invalid_argument("degenerate_partition: maximum degree must be at least 3");
    if (spec.sum() < k - s)
        throw std::invalid_argument("spec bound violated: need p_1+...+p_s >= k - s, got sum=" +
                                    std::to_string(spec.sum()) + " k=" + std::to_string(k) +
                                    " s=" + std::to_string(s));

    auto comps = connected_components(g);
    bool any_regular = false;
    for (const auto& comp : comps) {
        bool regular = true;
        for (int v : comp) regular &= (g.degree(v) == k);
        if (regular && static_cast<int>(comp.size()) == k + 1)
            throw std::invalid_argument(comps.size() == 1 ? "graph is K_{k+1}"
                                                          : "component is K_{k+1}");
        any_regular |= regular;
    }

    if (spec.all_zero_one()) {
        ForestPartition fp = forest_partition(g, ops);
        return allocate_classes(g, fp, spec, ops);
    }
    if (any_regular)
        throw std::invalid_argument(
            "unsupported: k-regular graph with a class bound >= 2 is out of scope");
    auto deg = degeneracy_ordering(g, ops);
    return greedy_assign(g, deg.ordering, spec, {}, ops);
}

} // namespace degpart
