#include <doctest.h>

#include "cograph/graph.hpp"
#include "cograph/graph_io.hpp"

#include <random>
#include <sstream>

using namespace cograph;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) {
        g.add_edge(v, v + 1);
    }
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph random_graph(int n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(density);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

}  // namespace

TEST_CASE("adjacency is symmetric and rejects bad edges") {
    Graph g(4);
    g.add_edge(0, 2);
    CHECK(g.adjacent(2, 0));
    CHECK(g.edge_count() == 1);
    g.add_edge(2, 0);
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 4), InputError);
    CHECK_THROWS_AS(g.add_edge(-1, 2), InputError);
}

TEST_CASE("complete, edgeless and complement") {
    CHECK(Graph::complete(5).edge_count() == 10);
    CHECK(Graph::edgeless(5).edge_count() == 0);
    CHECK(complement(Graph::complete(5)) == Graph::edgeless(5));
    CHECK(complement(complement(cycle(6))) == cycle(6));
    CHECK(complement(Graph(0)).order() == 0);
}

TEST_CASE("disjoint union and join place the left operand first") {
    const Graph k2 = Graph::complete(2);
    const Graph u = disjoint_union(k2, Graph::edgeless(1));
    CHECK(u.order() == 3);
    CHECK(u.adjacent(0, 1));
    CHECK_FALSE(u.adjacent(1, 2));
    const Graph j = join(Graph::edgeless(2), Graph::edgeless(2));
    CHECK(are_isomorphic(j, cycle(4)));
    CHECK(j.edge_count() == 4);
    CHECK_FALSE(j.adjacent(0, 1));
}

TEST_CASE("forest and independence predicates") {
    CHECK(is_forest(path(5)));
    CHECK_FALSE(is_forest(cycle(5)));
    CHECK(is_forest(Graph(0)));
    CHECK(is_forest(Graph::edgeless(3)));
    const Graph c = cycle(5);
    std::vector<int> three{0, 1, 2};
    CHECK(induces_forest(c, make_vertex_set(5, three)));
    CHECK(induces_forest(c, c.empty_set()));
    CHECK_FALSE(induces_forest(c, c.all_vertices()));
    std::vector<int> apart{0, 2};
    CHECK(is_independent(c, make_vertex_set(5, apart)));
    CHECK_FALSE(is_independent(c, make_vertex_set(5, three)));
}

TEST_CASE("forest check agrees with the edge-count identity on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Graph g = random_graph(n, 0.25, rng);
        const auto comps = components(g);
        const bool identity = g.edge_count() + comps.size() == static_cast<std::size_t>(n);
        CHECK(is_forest(g) == identity);
        CHECK(induces_forest(g, g.all_vertices()) == identity);
    }
}

TEST_CASE("components and co-components") {
    const Graph g = disjoint_union(Graph::complete(3), path(2));
    const auto comps = components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3, 4});
    const Graph j = join(Graph::edgeless(2), Graph::edgeless(3));
    CHECK(co_components(j, j.all_vertices()).size() == 2);
    CHECK(components(j, j.all_vertices()).size() == 1);
}

TEST_CASE("induced subgraph and vertex deletion renumber in increasing order") {
    const Graph c = cycle(5);
    const Graph d = delete_vertex(c, 0);
    CHECK(d == path(4));
    std::vector<int> keep{1, 3, 4};
    const Graph s = induced_subgraph(c, keep);
    CHECK(s.order() == 3);
    CHECK(s.edge_count() == 1);
    CHECK(s.adjacent(1, 2));
    CHECK_THROWS_AS(delete_vertex(c, 5), InputError);
}

TEST_CASE("induced copy search") {
    CHECK(find_induced_copy(Graph::complete(6), Graph::complete(5)).has_value());
    CHECK_FALSE(find_induced_copy(cycle(5), Graph::complete(3)).has_value());
    CHECK_FALSE(find_induced_copy(cycle(6), path(6)).has_value());
    CHECK(find_induced_copy(cycle(6), path(5)).has_value());
    const auto hit = find_induced_copy(cycle(7), path(4));
    REQUIRE(hit.has_value());
    const auto& m = *hit;
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
            CHECK(cycle(7).adjacent(m[a], m[b]) == path(4).adjacent(a, b));
        }
    }
    CHECK(find_induced_copy(cycle(4), Graph(0)).has_value());
}

TEST_CASE("isomorphism") {
    CHECK(are_isomorphic(cycle(4), join(Graph::edgeless(2), Graph::edgeless(2))));
    CHECK_FALSE(are_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))));
    CHECK_FALSE(are_isomorphic(path(4), Graph::complete(4)));
}

TEST_CASE("graph6 known strings") {
    CHECK(to_graph6(Graph::complete(5)) == "D~{");
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(to_graph6(Graph::complete(2)) == "A_");
    CHECK(from_graph6("D~{") == Graph::complete(5));
    CHECK(from_graph6(">>graph6<<D~{") == Graph::complete(5));
    CHECK(from_graph6("D~{\n") == Graph::complete(5));
}

TEST_CASE("graph6 round trip including the long header") {
    std::mt19937_64 rng(11);
    for (int n : {0, 1, 2, 5, 13, 62, 63, 64, 100, 300}) {
        const Graph g = random_graph(n, 0.3, rng);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(from_graph6(""), InputError);
    CHECK_THROWS_AS(from_graph6("D~"), InputError);
    CHECK_THROWS_AS(from_graph6("D~{~"), InputError);
    CHECK_THROWS_AS(from_graph6(":Fa@x^"), InputError);
    CHECK_THROWS_AS(from_graph6("&C"), InputError);
    CHECK_THROWS_AS(from_graph6("A`"), InputError);
}

TEST_CASE("edge list reader") {
    std::istringstream in("# a triangle\n3\n0 1\n1 2\n2 0\n");
    const Graph g = from_edge_list(in);
    CHECK(g == Graph::complete(3));
    std::istringstream back(to_edge_list(cycle(5)));
    CHECK(from_edge_list(back) == cycle(5));
    std::istringstream bad("2\n0 5\n");
    CHECK_THROWS_AS(from_edge_list(bad), InputError);
    CHECK_THROWS_AS(read_edge_list_file("/nonexistent/file.txt"), InputError);
}
