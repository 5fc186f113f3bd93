#include <doctest.h>

#include "degpart/generators.hpp"
#include "degpart/graph.hpp"
#include "test_util.hpp"

using namespace degpart;

TEST_CASE("parse_graph reads the header and edge lines") {
    Graph g = parse_graph_text("p edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("parse_graph accepts comments and a complete graph") {
    Graph g = parse_graph_text("c complete graph\np edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
    CHECK(g.vertex_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
    CHECK(is_complete(g));
}

TEST_CASE("parse_graph rejects malformed input") {
    CHECK_THROWS_WITH_AS(parse_graph_text("p edge 2 1\ne 1 1\n"),
                         doctest::Contains("self-loop"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_graph_text("p edge 2 2\ne 1 2\ne 1 2\n"),
                         doctest::Contains("duplicate edge"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_graph_text("p edge 2 1\ne 1 3\n"),
                         doctest::Contains("out of range"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_graph_text("p edge 2 2\ne 1 2\n"),
                         doctest::Contains("declares"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_graph_text("p edge 2 1\ne 2 1\n"),
                         doctest::Contains("u < v"), std::runtime_error);
    CHECK_THROWS(parse_graph_text("e 1 2\n"));
    CHECK_THROWS(parse_graph_text("p edge x y\n"));
}

TEST_CASE("serialize_graph emits sorted edges and round-trips") {
    Graph k4 = named_graph("k4");
    CHECK(serialize_graph(k4) == "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
    CHECK(serialize_graph(Graph::from_edges(1, {})) == "p edge 1 0\n");

    Graph r = random_regular(50, 3, 99);
    std::string text = serialize_graph(r);
    CHECK(serialize_graph(parse_graph_text(text)) == text);
}

TEST_CASE("degree and regularity queries") {
    Graph petersen = named_graph("petersen");
    CHECK(max_degree(petersen) == 3);
    CHECK(is_k_regular(petersen, 3));
    CHECK_FALSE(is_k_regular(petersen, 2));
    CHECK_FALSE(is_complete(petersen));

    Graph p3 = parse_graph_text("p edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(max_degree(p3) == 2);
    CHECK_FALSE(is_k_regular(p3, 2));
    CHECK(is_complete(named_graph("k4")));
}

TEST_CASE("connected components") {
    Graph two_triangles = test_util::disjoint_union(named_graph("c3"), named_graph("c3"));
    auto comps = connected_components(two_triangles);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 3);
    CHECK(comps[1].size() == 3);

    CHECK(connected_components(named_graph("petersen")).size() == 1);
    CHECK(connected_components(Graph::from_edges(5, {})).size() == 5);
}

TEST_CASE("parsers survive random noise without crashing") {
    test_util::Rng rng(314159);
    const char charset[] = "pce 0123456789-\nx";
    for (int round = 0; round < 500; ++round) {
        std::string noise;
        int len = 1 + static_cast<int>(rng.below(60));
        for (int i = 0; i < len; ++i) noise.push_back(charset[rng.below(sizeof(charset) - 1)]);
        CHECK_THROWS_AS(parse_graph_text(noise), std::runtime_error);
    }
    // prefix corruption of a valid file: either throws or parses
    std::string good = serialize_graph(named_graph("petersen"));
    for (size_t cut = 0; cut < good.size(); cut += 7) {
        try {
            parse_graph_text(good.substr(0, cut));
        } catch (const std::runtime_error&) {
        }
    }
}

TEST_CASE("induced subgraph keeps adjacency and mappings") {
    Graph petersen = named_graph("petersen");
    std::vector<int> keep = {0, 1, 2, 5, 6};
    std::vector<int> old_of_new, new_of_old;
    Graph sub = petersen.induced(keep, &old_of_new, &new_of_old);
    CHECK(sub.vertex_count() == 5);
    for (int a = 0; a < sub.vertex_count(); ++a)
        for (int b = 0; b < sub.vertex_count(); ++b) {
            if (a == b) continue;
            CHECK(sub.has_edge(a, b) == petersen.has_edge(old_of_new[a], old_of_new[b]));
        }
    for (int v : keep) CHECK(old_of_new[new_of_old[v]] == v);
}
