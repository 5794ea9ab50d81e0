#include <doctest.h>

#include "cograph/oracle.hpp"
#include "cograph/union_find.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace cograph;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) {
        g.add_edge(v, (v + 1) % n);
    }
    return g;
}

}  // namespace

TEST_CASE("rollback union-find") {
    RollbackUnionFind uf(5);
    const auto start = uf.checkpoint();
    CHECK(uf.unite(0, 1));
    CHECK(uf.unite(1, 2));
    CHECK_FALSE(uf.unite(0, 2));
    const auto mid = uf.checkpoint();
    CHECK(uf.unite(3, 4));
    CHECK(uf.find(3) == uf.find(4));
    uf.rollback(mid);
    CHECK(uf.find(3) != uf.find(4));
    CHECK(uf.find(0) == uf.find(2));
    uf.rollback(start);
    for (int v = 0; v < 5; ++v) {
        CHECK(uf.find(v) == v);
    }
}

TEST_CASE("oracle on known graphs") {
    CHECK_FALSE(brute_force_partitionable(Graph::complete(5), {2, 0, 0}));
    CHECK(brute_force_partitionable(Graph::complete(5), {3, 0, 0}));
    CHECK(brute_force_partitionable(cycle(5), {0, 3, 0}));
    CHECK_FALSE(brute_force_partitionable(cycle(5), {0, 2, 0}));
    CHECK(brute_force_partitionable(cycle(5), {0, 2, 1}));
    CHECK(brute_force_partitionable(cycle(5), {1, 0, 1}));
    CHECK_FALSE(brute_force_partitionable(cycle(5), {1, 0, 0}));
    CHECK(brute_force_partitionable(Graph(0), {0, 0, 0}));
    CHECK_FALSE(brute_force_partitionable(Graph(1), {0, 0, 0}));
    CHECK(brute_force_arboricity(Graph::complete(7)) == 4);
    CHECK(brute_force_chromatic(cycle(7)) == 3);
    CHECK(brute_force_min_deletions(cycle(6), 0, 1) == 3);
}

TEST_CASE("oracle verdict does not depend on vertex order") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        Graph g(n);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng() % 2) {
                    g.add_edge(u, v);
                }
            }
        }
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const Triple t{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
        CHECK(brute_force_partitionable(g, t) == brute_force_partitionable(g, t, {}, order));
    }
}

TEST_CASE("oracle input checks and budget") {
    CHECK_THROWS_AS(brute_force_partitionable(Graph::complete(3), {-1, 0, 0}), InputError);
    CHECK_THROWS_AS(brute_force_partitionable(Graph::complete(3), {1, 0, 0}, {}, {0, 0, 1}), InputError);
    CHECK_THROWS_AS(brute_force_partitionable(Graph::complete(13), {7, 0, 0}), OracleBudgetExceeded);
    OracleBudget tiny;
    tiny.max_assignments = 10;
    CHECK_THROWS_AS(brute_force_partitionable(Graph::complete(8), {3, 0, 0}, tiny), OracleBudgetExceeded);
}

TEST_CASE("oracle strength and cograph check") {
    CHECK(brute_force_strength(cycle(4)) == StrengthProfile{2, 2, 3});
    CHECK(brute_force_strength(cycle(5)).omega == 2);
    CHECK_FALSE(brute_force_is_cograph(cycle(5)));
    CHECK(brute_force_is_cograph(cycle(4)));
    CHECK(brute_force_is_cograph(Graph::complete(6)));
}
