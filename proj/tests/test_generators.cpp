#include <doctest.h>

#include <stdexcept>

#include "degpart/generators.hpp"
#include "degpart/graph.hpp"

using namespace degpart;

TEST_CASE("random_regular produces a simple k-regular graph") {
    Graph g = random_regular(10, 3, 7);
    CHECK(g.vertex_count() == 10);
    for (int v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);
    CHECK(g.edge_count() == 15);
}

TEST_CASE("random_regular is deterministic per seed") {
    CHECK(serialize_graph(random_regular(24, 4, 42)) == serialize_graph(random_regular(24, 4, 42)));
    CHECK(serialize_graph(random_regular(24, 4, 42)) != serialize_graph(random_regular(24, 4, 43)));
}

TEST_CASE("random_regular rejects infeasible parameters") {
    CHECK_THROWS_AS(random_regular(5, 3, 1), std::invalid_argument);  // n*k odd
    CHECK_THROWS_AS(random_regular(4, 4, 1), std::invalid_argument);  // k >= n
    CHECK_THROWS_AS(random_regular(0, 0, 1), std::invalid_argument);
}

TEST_CASE("named graphs have the expected shapes") {
    Graph petersen = named_graph("petersen");
    CHECK(petersen.vertex_count() == 10);
    CHECK(petersen.edge_count() == 15);
    CHECK(is_k_regular(petersen, 3));

    Graph q3 = named_graph("q3");
    CHECK(q3.vertex_count() == 8);
    CHECK(q3.edge_count() == 12);
    CHECK(is_k_regular(q3, 3));
    CHECK(is_connected(q3));

    Graph prism = named_graph("prism");
    CHECK(prism.vertex_count() == 6);
    CHECK(is_k_regular(prism, 3));

    Graph bowtie = named_graph("bowtie");
    CHECK(bowtie.vertex_count() == 5);
    CHECK(bowtie.edge_count() == 6);
    CHECK(max_degree(bowtie) == 4);

    CHECK(is_complete(named_graph("K5")));
    CHECK(named_graph("K5").vertex_count() == 5);
    CHECK(is_k_regular(named_graph("c7"), 2));
    CHECK(named_graph("c7").vertex_count() == 7);

    CHECK_THROWS_AS(named_graph("nope"), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("kxy"), std::invalid_argument);
}
