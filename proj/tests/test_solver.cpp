#include <doctest.h>

#include "cograph/dp_kernel.hpp"
#include "cograph/oracle.hpp"
#include "cograph/reference_dp.hpp"
#include "cograph/solver.hpp"

#include <random>

using namespace cograph;

namespace {

const Cotree c4 = parse_expr("J(I(2),I(2))");

std::vector<Triple> box_triples(Box b) {
    std::vector<Triple> out;
    for (int p = 0; p <= b.p; ++p) {
        for (int q = 0; q <= b.q; ++q) {
            for (int r = 0; r <= b.r; ++r) {
                out.push_back({p, q, r});
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("triple weights and order") {
    const Triple t{2, 1, 3};
    CHECK(solver_weight(t) == 6);
    CHECK(obstruction_weight(t) == 8);
    CHECK(dominated_by({1, 1, 0}, {1, 2, 0}));
    CHECK_FALSE(dominated_by({2, 0, 0}, {1, 5, 5}));
    CHECK(to_string(t) == "(2,1,3)");
}

TEST_CASE("derive_union") {
    CHECK(derive_union({1, 0, 0}, {1, 0, 0}) == Triple{1, 0, 0});
    CHECK(derive_union({0, 1, 0}, {0, 0, 2}) == Triple{0, 1, 2});
    CHECK(derive_union({2, 1, 1}, {1, 3, 0}) == Triple{2, 3, 1});
}

TEST_CASE("derive_join") {
    CHECK(derive_join({0, 1, 0}, {0, 0, 1}) == std::vector<Triple>{{0, 1, 1}, {1, 0, 0}});
    CHECK(derive_join({1, 0, 0}, {1, 0, 0}) == std::vector<Triple>{{2, 0, 0}});
    CHECK(derive_join({0, 1, 0}, {0, 0, 2}) == std::vector<Triple>{{0, 1, 2}, {1, 0, 1}});
}

TEST_CASE("join derivations add obstruction weight") {
    for (const Triple& u : box_triples({3, 3, 3})) {
        for (const Triple& d : box_triples({2, 2, 2})) {
            for (const Triple& t : derive_join(u, d)) {
                CHECK(obstruction_weight(t) == obstruction_weight(u) + obstruction_weight(d));
                CHECK(solver_weight(t) <= solver_weight(u) + solver_weight(d));
                CHECK(t.q >= 0);
                CHECK(t.r >= 0);
            }
        }
    }
}

TEST_CASE("TripleSet grid") {
    TripleSet s({2, 2, 2});
    CHECK_THROWS_AS(s.insert({3, 0, 0}), InputError);
    s.insert({1, 0, 0});
    CHECK(s.contains({1, 0, 0}));
    CHECK_FALSE(s.contains({3, 0, 0}));
    CHECK_FALSE(s.is_upward_closed());
    CHECK(s.frontier() == std::vector<Triple>{{1, 0, 0}});
}

TEST_CASE("leaf and empty cotree") {
    const TripleSet leaf = feasible_set(Cotree::leaf(), {2, 2, 2});
    CHECK(leaf.frontier() == std::vector<Triple>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    CHECK_FALSE(leaf.contains({0, 0, 0}));
    CHECK(feasible_set(Cotree(), {1, 1, 1}).contains({0, 0, 0}));
    CHECK(is_partitionable(Cotree(), {0, 0, 0}));
}

TEST_CASE("C4 frontier") {
    const TripleSet s = feasible_set(c4, {4, 4, 4});
    CHECK(s.frontier() == std::vector<Triple>{{0, 0, 4}, {0, 1, 2}, {0, 2, 0}, {1, 0, 1}, {1, 1, 0}, {2, 0, 0}});
}

TEST_CASE("complete graphs and arboricity one obstructions") {
    const Cotree k5 = Cotree::complete(5);
    CHECK_FALSE(is_partitionable(k5, {2, 0, 0}));
    CHECK(is_partitionable(k5, {3, 0, 0}));
    for (int p = 1; p <= 3; ++p) {
        CHECK(vertex_arboricity(Cotree::complete(2 * p + 1)) == p + 1);
    }
    const Cotree g = parse_expr("C(U(3*K(2),K(1)))");
    CHECK(g.vertex_count() == 7);
    CHECK_FALSE(is_partitionable(g, {2, 0, 0}));
    const Graph h = realize(g);
    for (int v = 0; v < h.order(); ++v) {
        CHECK(is_partitionable(delete_vertex(h, v), {2, 0, 0}));
    }
}

TEST_CASE("q-colourable feedback sets on thick cliques") {
    for (int q = 0; q <= 3; ++q) {
        const Cotree thick = complement(repeat(q + 2, Cotree::complete(2)));
        CHECK_FALSE(is_partitionable(thick, {1, q, 0}));
        CHECK(is_partitionable(Cotree::complete(q + 2), {1, q, 0}));
        CHECK_FALSE(is_partitionable(Cotree::complete(q + 3), {1, q, 0}));
    }
    CHECK(min_q_feedback(Cotree::complete(4)) == 2);
    CHECK(min_q_feedback(Cotree::complete(3)) == 1);
    CHECK(is_partitionable(parse_expr("U(J(K(1),I(4)),K(2))"), {1, 0, 0}));
}

TEST_CASE("derived parameters") {
    CHECK(min_deletions(c4, 0, 1) == 2);
    CHECK(min_deletions(c4, 1, 0) == 1);
    CHECK(min_deletions(Cotree::complete(5), 0, 2) == 3);
    CHECK(chromatic_number(Cotree::complete(7)) == 7);
    CHECK(chromatic_number(Cotree::edgeless(7)) == 1);
    CHECK(vertex_arboricity(Cotree::edgeless(7)) == 1);
    CHECK(vertex_arboricity(Cotree()) == 0);
    CHECK(chromatic_number(c4) == 2);
    CHECK(vertex_arboricity(realize(c4)) == 2);
}

TEST_CASE("graph overloads reject non-cographs with a witness") {
    Graph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    CHECK_THROWS_AS(vertex_arboricity(p4), NotCographError);
    try {
        is_partitionable(p4, {1, 0, 0});
        FAIL("expected an error");
    } catch (const NotCographError& e) {
        CHECK(e.witness().path == std::array<int, 4>{0, 1, 2, 3});
    }
}

TEST_CASE("negative triples are rejected") {
    CHECK_THROWS_AS(is_partitionable(c4, {-1, 0, 0}), InputError);
    CHECK_THROWS_AS(feasible_set(c4, {1, -1, 0}), InputError);
}

TEST_CASE("kernel, reference and oracle agree on all cographs up to six vertices") {
    const Box box{3, 3, 3};
    for (int n = 1; n <= 6; ++n) {
        for (const Cotree& t : enumerate_cographs(n)) {
            const TripleSet fast = feasible_set(t, box, Execution::serial);
            CHECK(fast == feasible_set(t, box, Execution::parallel));
            CHECK(fast == reference_feasible_set(t, box));
            CHECK(fast.is_upward_closed());
            CHECK(fast.is_exchange_closed());
            const Graph g = realize(t);
            for (const Triple& x : box_triples(box)) {
                CHECK(fast.contains(x) == brute_force_partitionable(g, x));
            }
        }
    }
}

TEST_CASE("fold order does not matter") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const Cotree t = random_cotree(2 + static_cast<int>(rng() % 30), rng, {false, 6});
        const Cotree s = shuffle_children(t, rng);
        CHECK(feasible_set(t, {3, 3, 3}) == feasible_set(s, {3, 3, 3}));
        CHECK(evaluate_serial(t, 3, 5) == evaluate_serial(s, 3, 5));
    }
}

TEST_CASE("serial and parallel kernels are identical on large trees") {
    std::mt19937_64 rng(2);
    for (bool balanced : {false, true}) {
        const Cotree t = random_cotree(20000, rng, {balanced, 4});
        CHECK(evaluate_serial(t, 4, 8) == evaluate_parallel(t, 4, 8));
    }
}

TEST_CASE("certificates") {
    SUBCASE("bipartition of C4") {
        const auto cert = extract_certificate(c4, {0, 2, 0});
        REQUIRE(cert.labels.size() == 4);
        CHECK(cert.labels[0] == cert.labels[1]);
        CHECK(cert.labels[2] == cert.labels[3]);
        CHECK_FALSE(cert.labels[0] == cert.labels[2]);
        CHECK(cert.labels[0].kind == VertexLabel::Kind::independent);
        const Graph g = realize(c4);
        CHECK(check_partition(g, cert, {0, 2, 0}));
        CHECK_FALSE(check_partition(g, cert, {0, 1, 0}));
    }
    SUBCASE("K5 into three forests") {
        const auto cert = extract_certificate(Cotree::complete(5), {3, 0, 0});
        CHECK(check_partition(Graph::complete(5), cert, {3, 0, 0}));
        std::vector<int> sizes(3, 0);
        for (const auto& l : cert.labels) {
            REQUIRE(l.kind == VertexLabel::Kind::forest);
            ++sizes[l.index - 1];
        }
        std::ranges::sort(sizes);
        CHECK(sizes == std::vector<int>{1, 2, 2});
    }
    SUBCASE("two C4 joined with three independent vertices, one removed") {
        const Graph g = realize(parse_expr("J(U(2*J(2*I(2))),I(3))"));
        const Graph h = delete_vertex(g, 10);
        const Cotree t = require_cograph(h);
        CHECK(check_partition(h, extract_certificate(t, {2, 0, 0}), {2, 0, 0}));
    }
    SUBCASE("infeasible triple") {
        CHECK_THROWS_AS(extract_certificate(Cotree::complete(5), {2, 0, 0}), InfeasibleError);
    }
    SUBCASE("stars crossing a join") {
        const Cotree star = parse_expr("J(I(3),K(1))");
        const auto cert = extract_certificate(star, {1, 0, 0});
        CHECK(check_partition(realize(star), cert, {1, 0, 0}));
    }
}

TEST_CASE("certificate validator input errors") {
    const Graph g = realize(c4);
    PartitionCertificate short_cert;
    short_cert.labels.resize(3);
    CHECK_THROWS_AS(check_partition(g, short_cert, {0, 2, 4}), InputError);
    PartitionCertificate zero;
    zero.labels.assign(4, {VertexLabel::Kind::forest, 0});
    CHECK_THROWS_AS(check_partition(g, zero, {2, 0, 0}), InputError);
    PartitionCertificate deleted;
    deleted.labels.assign(4, {VertexLabel::Kind::deleted, 0});
    CHECK(check_partition(g, deleted, {0, 0, 4}));
    CHECK_FALSE(check_partition(g, deleted, {0, 0, 3}));
    PartitionCertificate one_forest;
    one_forest.labels.assign(4, {VertexLabel::Kind::forest, 1});
    CHECK_FALSE(check_partition(g, one_forest, {1, 0, 0}));
}

TEST_CASE("certificate round trip on random instances") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 400; ++trial) {
        const Cotree t = random_cotree(1 + static_cast<int>(rng() % 25), rng);
        const Graph g = realize(t);
        const Triple x{static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)};
        if (is_partitionable(t, x)) {
            const auto cert = extract_certificate(t, x);
            CHECK(check_partition(g, cert, x));
        } else {
            CHECK_THROWS_AS(extract_certificate(t, x), InfeasibleError);
        }
    }
}

TEST_CASE("parameter chain on small cographs") {
    for (int n = 1; n <= 8; ++n) {
        for (const Cotree& t : enumerate_cographs(n)) {
            const int rho = vertex_arboricity(t);
            const int chi = chromatic_number(t);
            CHECK(rho <= chi);
            CHECK(chi <= 2 * rho);
            CHECK(min_deletions(t, 0, chi) == 0);
            CHECK(min_deletions(t, 0, chi - 1) > 0);
        }
    }
}
