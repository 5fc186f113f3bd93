#include <doctest.h>

#include <algorithm>

#include "degpart/degeneracy.hpp"
#include "degpart/generators.hpp"
#include "degpart/graph.hpp"
#include "test_util.hpp"

using namespace degpart;

namespace {

// Largest number of earlier neighbours over the whole ordering.
int max_back_degree(const Graph& g, const VertexOrdering& ord) {
    std::vector<int> position(g.vertex_count());
    for (size_t i = 0; i < ord.order.size(); ++i) position[ord.order[i]] = static_cast<int>(i);
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int back = 0;
        for (int u : g.neighbors(v)) back += (position[u] < position[v]);
        best = std::max(best, back);
    }
    return best;
}

} // namespace

TEST_CASE("degeneracy of the standard examples") {
    CHECK(degeneracy_ordering(named_graph("k4")).degeneracy == 3);
    CHECK(degeneracy_ordering(named_graph("petersen")).degeneracy == 3);
    CHECK(degeneracy_ordering(named_graph("c5")).degeneracy == 2);
    CHECK(degeneracy_ordering(Graph::from_edges(1, {})).degeneracy == 0);
}

TEST_CASE("degeneracy ordering attains its bound exactly") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = test_util::gnp(3 + seed % 10, 20 + 9 * (seed % 7), seed);
        auto res = degeneracy_ordering(g);
        CHECK(max_back_degree(g, res.ordering) == res.degeneracy);
        if (g.vertex_count() <= 10) CHECK(res.degeneracy == test_util::naive_degeneracy(g));
    }
}

TEST_CASE("parent_last_ordering ends at the root and gives later neighbours") {
    Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    auto ord = parent_last_ordering(star, 0);
    CHECK(ord.order.back() == 0);

    Graph c4 = named_graph("c4");
    auto c4_ord = parent_last_ordering(c4, 0);
    CHECK(c4_ord.order.back() == 0);

    Graph petersen = named_graph("petersen");
    for (int root : {0, 3, 9}) {
        auto p = parent_last_ordering(petersen, root);
        CHECK(p.order.back() == root);
        std::vector<int> position(10);
        for (size_t i = 0; i < p.order.size(); ++i) position[p.order[i]] = static_cast<int>(i);
        for (int i = 0; i + 1 < 10; ++i) {
            int v = p.order[i];
            bool has_later = false;
            for (int u : petersen.neighbors(v)) has_later |= (position[u] > i);
            CHECK(has_later);
        }
    }

    Graph disconnected = test_util::disjoint_union(named_graph("c3"), named_graph("c3"));
    CHECK_THROWS_AS(parent_last_ordering(disconnected, 0), std::invalid_argument);
}

TEST_CASE("greedy_assign colors a path with two independent sets") {
    Graph p3 = parse_graph_text("p edge 3 2\ne 1 2\ne 2 3\n");
    VertexOrdering ord{{0, 2, 1}}; // both ends first, middle last
    Partition part = greedy_assign(p3, ord, PartitionSpec{{0, 0}});
    CHECK(validate_partition(p3, part).ok);
    CHECK(part.class_of[0] != part.class_of[1]);
    CHECK(part.class_of[2] != part.class_of[1]);
}

TEST_CASE("greedy_assign splits K4 minus an edge into forest and independent set") {
    Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto deg = degeneracy_ordering(g);
    Partition part = greedy_assign(g, deg.ordering, PartitionSpec{{1, 0}});
    CHECK(validate_partition(g, part).ok);
}

TEST_CASE("greedy_assign reports an inadmissible vertex") {
    Graph c5 = named_graph("c5");
    auto deg = degeneracy_ordering(c5);
    CHECK_THROWS_AS(greedy_assign(c5, deg.ordering, PartitionSpec{{1}}), std::logic_error);
}

TEST_CASE("greedy_assign honours pins and forbidden classes") {
    Graph c4 = named_graph("c4");
    auto deg = degeneracy_ordering(c4);
    GreedyOptions opt;
    opt.pinned.emplace_back(deg.ordering.order[0], 1);
    opt.forbidden.emplace_back(deg.ordering.order[1], 0);
    Partition part = greedy_assign(c4, deg.ordering, PartitionSpec{{1, 1}}, opt);
    CHECK(part.class_of[deg.ordering.order[0]] == 1);
    CHECK(part.class_of[deg.ordering.order[1]] != 0);
    CHECK(validate_partition(c4, part).ok);
}

TEST_CASE("zero-class preference fills the independent set first") {
    // path 0-1: without the preference both land in the forest class,
    // with it the first vertex takes the trailing independent set
    Graph p2 = Graph::from_edges(2, {{0, 1}});
    VertexOrdering ord{{0, 1}};
    PartitionSpec spec{{1, 0}};
    Partition plain = greedy_assign(p2, ord, spec);
    CHECK(plain.class_of == std::vector<int>{0, 0});
    GreedyOptions opt;
    opt.prefer_zero_classes = true;
    Partition preferred = greedy_assign(p2, ord, spec, opt);
    CHECK(preferred.class_of == std::vector<int>{1, 0});
}

TEST_CASE("greedy over a degeneracy ordering always validates") {
    int cases = 0;
    for (std::uint64_t seed = 1; cases < 1000; ++seed) {
        Graph g = test_util::gnp(4 + seed % 12, 15 + 11 * (seed % 8), seed * 31);
        auto res = degeneracy_ordering(g);
        // capacity sum(p_i + 1) > degeneracy guarantees admissibility
        std::vector<PartitionSpec> specs;
        specs.push_back(PartitionSpec{std::vector<int>(res.degeneracy + 1, 0)});
        specs.push_back(PartitionSpec{std::vector<int>(res.degeneracy / 2 + 1, 1)});
        PartitionSpec mixed;
        mixed.targets = {res.degeneracy, 0};
        specs.push_back(mixed);
        for (const auto& spec : specs) {
            Partition part = greedy_assign(g, res.ordering, spec);
            CHECK(validate_partition(g, part).ok);
            ++cases;
        }
    }
}
