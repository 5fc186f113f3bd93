#include "degpart/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace degpart {

namespace {

using Clock = std::chrono::steady_clock;

struct Searcher {
    const Graph& g;
    const PartitionSpec& spec;
    const SearchBudget& budget;
    const std::vector<int>& order;
    const std::function<bool(const Partition&)>& visit;

    int n, s;
    std::vector<int> cls;
    long long nodes = 0;
    bool budget_hit = false;
    bool stopped = false;
    Clock::time_point deadline;

    // scratch for the core check
    std::vector<int> indeg, stack, touched;
    std::vector<char> removed;

    Searcher(const Graph& g_, const PartitionSpec& spec_, const SearchBudget& budget_,
             const std::vector<int>& order_, const std::function<bool(const Partition&)>& visit_)
        : g(g_), spec(spec_), budget(budget_), order(order_), visit(visit_),
          n(g_.vertex_count()), s(spec_.size()), cls(n, -1), indeg(n, 0), removed(n, 0) {
        deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(budget.time_limit_seconds));
    }

    // The assigned vertices of class c fail iff peeling at the class
    // threshold leaves a core. Cores survive further assignments, so a
    // failing prefix can never extend to a valid partition.
    bool class_has_core(int c) {
        int threshold = spec.targets[c];
        touched.clear();
        for (int v = 0; v < n; ++v)
            if (cls[v] == c) {
                int d = 0;
                for (int u : g.neighbors(v)) d += (cls[u] == c);
                indeg[v] = d;
                removed[v] = 0;
                touched.push_back(v);
            }
        stack.clear();
        for (int v : touched)
            if (indeg[v] <= threshold) {
                removed[v] = 1;
                stack.push_back(v);
            }
        size_t peeled = stack.size();
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (cls[u] != c || removed[u]) continue;
                if (--indeg[u] <= threshold) {
                    removed[u] = 1;
                    stack.push_back(u);
                    ++peeled;
                }
            }
        }
        return peeled != touched.size();
    }

    bool quick_reject(int v, int c) {
        if (spec.targets[c] == 0) {
            for (int u : g.neighbors(v))
                if (cls[u] == c) return true;
            return false;
        }
        return class_has_core(c);
    }

    bool first_of_value(int c) const {
        for (int c2 = 0; c2 < c; ++c2)
            if (spec.targets[c2] == spec.targets[c]) return false;
        return true;
    }

    // returns false to abort the whole search
    bool dfs(int depth) {
        if (depth == n) {
            Partition p{spec, cls};
            if (!visit(p)) stopped = true;
            return !stopped;
        }
        int v = order[depth];
        for (int c = 0; c < s; ++c) {
            // Classes with equal targets are interchangeable for the very
            // first vertex; one representative per target value is enough.
            if (depth == 0 && !first_of_value(c)) continue;
            ++nodes;
            if (nodes >= budget.node_limit || (nodes % 4096 == 0 && Clock::now() > deadline)) {
                budget_hit = true;
                return false;
            }
            cls[v] = c;
            if (!quick_reject(v, c)) {
                if (!dfs(depth + 1)) {
                    cls[v] = -1;
                    return false;
                }
            }
            cls[v] = -1;
        }
        return true;
    }
};

std::vector<int> default_order(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    return order;
}

} // namespace

SearchStatus for_each_partition(const Graph& g, const PartitionSpec& spec,
                                const SearchBudget& budget, const std::vector<int>& order_hint,
                                const std::function<bool(const Partition&)>& visit,
                                long long* nodes_visited) {
    if (spec.size() < 1) throw std::invalid_argument("for_each_partition: empty spec");
    std::vector<int> order = order_hint.empty() ? default_order(g) : order_hint;
    if (static_cast<int>(order.size()) != g.vertex_count())
        throw std::invalid_argument("for_each_partition: order hint does not cover the graph");

    Searcher search(g, spec, budget, order, visit);
    bool completed;
    if (g.vertex_count() == 0) {
        Partition p{spec, {}};
        completed = visit(p);
        search.stopped = !completed;
    } else {
        search.dfs(0);
    }
    if (nodes_visited) *nodes_visited = search.nodes;
    if (search.stopped) return SearchStatus::Found;
    if (search.budget_hit) return SearchStatus::BudgetExceeded;
    return SearchStatus::None;
}

SearchResult find_partition_bruteforce(const Graph& g, const PartitionSpec& spec,
                                       const SearchBudget& budget,
                                       const std::vector<int>& order_hint) {
    SearchResult res;
    res.status = for_each_partition(
        g, spec, budget, order_hint,
        [&](const Partition& p) {
            res.partition = p;
            return false; // first hit is enough
        },
        &res.nodes_visited);
    return res;
}

std::vector<std::pair<int, int>> all_eligible_pairs(const Graph& g) {
    int n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("all_eligible_pairs: graph too large for direct check");
    std::vector<std::pair<int, int>> out;
    std::vector<char> seen(n);
    std::vector<int> queue;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (g.has_edge(x, y)) continue;
            bool common = false;
            for (int u : g.neighbors(x)) common |= g.has_edge(u, y);
            if (!common) continue; // distance is more than two
            // connectivity of G - {x, y}
            std::fill(seen.begin(), seen.end(), 0);
            seen[x] = seen[y] = 1;
            int start = -1;
            for (int v = 0; v < n && start == -1; ++v)
                if (!seen[v]) start = v;
            int reached = 0;
            if (start != -1) {
                queue.assign(1, start);
                seen[start] = 1;
                while (!queue.empty()) {
                    int v = queue.back();
                    queue.pop_back();
                    ++reached;
                    for (int u : g.neighbors(v))
                        if (!seen[u]) {
                            seen[u] = 1;
                            queue.push_back(u);
                        }
                }
            }
            if (reached == n - 2) out.emplace_back(x, y);
        }
    return out;
}

std::vector<Assignment> all_satisfying_assignments(int num_vars,
                                                   const std::vector<std::vector<int>>& clauses,
                                                   SatVariant variant) {
    if (num_vars > 20)
        throw std::invalid_argument("all_satisfying_assignments: more than 20 variables");
    std::vector<Assignment> out;
    Assignment a(num_vars, false);
    for (unsigned long long mask = 0; mask < (1ull << num_vars); ++mask) {
        for (int v = 0; v < num_vars; ++v) a[v] = (mask >> v) & 1u;
        if (check_assignment(clauses, a, variant)) out.push_back(a);
    }
    return out;
}

std::vector<Assignment> all_satisfying_assignments(const RSatInstance& inst, SatVariant variant) {
    return all_satisfying_assignments(inst.num_vars, inst.clauses, variant);
}

} // namespace degpart
