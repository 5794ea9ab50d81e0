#include <doctest.h>

#include "cograph/obstructions.hpp"
#include "cograph/strength.hpp"

#include <set>

using namespace cograph;

namespace {

std::set<CanonicalCode> codes(const std::vector<Cotree>& trees) {
    std::set<CanonicalCode> out;
    for (const auto& t : trees) {
        out.insert(canonical_code(t));
    }
    return out;
}

std::set<CanonicalCode> codes(const std::vector<ObstructionReport>& reports) {
    std::set<CanonicalCode> out;
    for (const auto& r : reports) {
        out.insert(canonical_code(r.tree));
    }
    return out;
}

const TripleGoalSet arboricity1{{{1, 0, 0}}};
const TripleGoalSet arboricity2{{{2, 0, 0}}};

}  // namespace

TEST_CASE("goal parsing") {
    CHECK(parse_goal("(1,0,0)").triples == std::vector<Triple>{{1, 0, 0}});
    CHECK(parse_goal("2,0,0").triples == std::vector<Triple>{{2, 0, 0}});
    CHECK(parse_goal("(2,0,0),(1,1,0)").triples == std::vector<Triple>{{2, 0, 0}, {1, 1, 0}});
    CHECK(parse_goal(" 2,0,0 ; 1,1,0 ").triples.size() == 2);
    CHECK_THROWS_AS(parse_goal(""), InputError);
    CHECK_THROWS_AS(parse_goal("1,0"), InputError);
    CHECK_THROWS_AS(parse_goal("(1,0,-1)"), InputError);
    CHECK_THROWS_AS(parse_goal("((1,0,0))"), InputError);
    CHECK(to_string(parse_goal("(2,0,0),(1,1,0)")) == "(2,0,0),(1,1,0)");
}

TEST_CASE("A2 catalogue") {
    const auto a2 = family_A2();
    REQUIRE(a2.size() == 7);
    const std::vector<int> sizes{5, 9, 8, 11, 7, 9, 7};
    for (std::size_t k = 0; k < a2.size(); ++k) {
        CHECK(a2[k].vertex_count() == sizes[k]);
        const ObstructionReport r = is_minimal_obstruction(a2[k], arboricity2);
        CHECK(r.is_obstruction);
        CHECK(r.is_minimal);
        CHECK(r.witnesses.size() == static_cast<std::size_t>(sizes[k]));
        const Graph g = realize(a2[k]);
        for (const auto& w : r.witnesses) {
            CHECK(check_partition(delete_vertex(g, w.vertex), w.certificate, w.triple));
        }
    }
    CHECK(codes(a2).size() == 7);
}

TEST_CASE("A_p family") {
    CHECK(codes(family_Ap(2)) == codes(family_A2()));
    const auto a3 = family_Ap(3);
    CHECK(a3.size() == 8);
    for (const auto& t : a3) {
        CHECK(is_minimal_obstruction(t, {{{3, 0, 0}}}).is_minimal);
    }
    CHECK(family_Ap_expressions(3).front() == "K(7)");
    CHECK_THROWS_AS(family_Ap(1), InputError);
}

TEST_CASE("partition numbers and star forests") {
    const std::vector<long long> pi{1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int m = 0; m < static_cast<int>(pi.size()); ++m) {
        CHECK(partition_count(m) == pi[m]);
    }
    CHECK(star_forests(5).size() == 6);
    REQUIRE(star_forests(2).size() == 1);
    CHECK(realize(star_forests(2)[0]) == Graph::complete(2));
    for (int m = 2; m <= 7; ++m) {
        const auto forests = star_forests(m);
        CHECK(static_cast<long long>(forests.size()) == partition_count(m) - 1);
        CHECK(codes(forests).size() == forests.size());
        for (const auto& f : forests) {
            const Graph g = realize(f);
            CHECK(g.order() == m);
            CHECK(is_forest(g));
            CHECK(g.edge_count() >= 1);
        }
    }
    CHECK_THROWS_AS(star_forests(1), InputError);
}

TEST_CASE("O_i construction") {
    const int p = 3;
    CHECK(canonical_code(family_Oi(p, 0, {})) == canonical_code(parse_expr("C(U(4*K(4)))")));
    const std::vector<Cotree> k2s(3, Cotree::complete(2));
    CHECK(canonical_code(family_Oi(p, p, k2s)) == canonical_code(Cotree::complete(7)));
    for (const auto& f : star_forests(4)) {
        CHECK(family_Oi(p, 1, {f}).vertex_count() == 13);
    }
    CHECK_THROWS_AS(family_Oi(p, 1, {Cotree::complete(4)}), InputError);
    CHECK_THROWS_AS(family_Oi(p, 2, {star_forests(3)[0]}), InputError);
    CHECK_THROWS_AS(family_Oi(p, 4, {}), InputError);
}

TEST_CASE("O_i counts") {
    for (int p = 2; p <= 4; ++p) {
        CHECK(count_Oi(p, 0).generated == 1);
        CHECK(count_Oi(p, p).generated == 1);
    }
    const OiCount one = count_Oi(3, 1);
    CHECK(one.generated == 4);
    CHECK(one.multisets == 4);
    CHECK(one.formula_matches);
    const OiCount two = count_Oi(3, 2);
    CHECK(two.generated == two.multisets);
    CHECK(two.generated == 3);
    CHECK_FALSE(two.formula_matches);
}

TEST_CASE("O_i members at p = 3 are minimal obstructions") {
    for (int i = 0; i <= 3; ++i) {
        for (const auto& g : all_Oi(3, i)) {
            CHECK(g.vertex_count() == 3 * (3 + 2 - i) + 1);
            CHECK(is_minimal_obstruction(g, {{{3, 0, 0}}}).is_minimal);
        }
    }
}

TEST_CASE("minimality checker") {
    CHECK(is_minimal_obstruction(Cotree::complete(5), arboricity2).is_minimal);
    const auto k6 = is_minimal_obstruction(Cotree::complete(6), arboricity2);
    CHECK(k6.is_obstruction);
    CHECK_FALSE(k6.is_minimal);
    CHECK(k6.surviving_vertex == 0);
    CHECK(k6.witnesses.empty());
    for (int q = 0; q <= 2; ++q) {
        CHECK(is_minimal_obstruction(Cotree::complete(q + 3), {{{1, q, 0}}}).is_minimal);
    }
    const auto feasible = is_minimal_obstruction(Cotree::complete(4), arboricity2);
    CHECK_FALSE(feasible.is_obstruction);
    CHECK(feasible.graph6 == "C~");
    CHECK(feasible.dsl == "K(4)");
    const auto either = is_minimal_obstruction(Cotree::complete(5), parse_goal("(2,0,0),(1,1,0)"));
    CHECK(either.is_minimal);
    CHECK_FALSE(is_minimal_obstruction(Cotree::complete(4), parse_goal("(2,0,0),(1,1,0)")).is_obstruction);
}

TEST_CASE("induced containment") {
    CHECK(contains_induced(Graph::complete(6), Graph::complete(5)));
    CHECK_FALSE(contains_induced(realize(parse_expr("C(U(3*K(3)))")), Graph::complete(5)));
    std::vector<Graph> a2;
    for (const auto& t : family_A2()) {
        a2.push_back(realize(t));
    }
    for (const auto& f : star_forests(6)) {
        CHECK(is_family_free(realize(f), a2));
    }
    CHECK_FALSE(is_family_free(Graph::complete(6), a2));
}

TEST_CASE("search for small goals") {
    const auto one = search_minimal_obstructions(4, arboricity1);
    CHECK(codes(one) == codes(std::vector<Cotree>{Cotree::complete(3), parse_expr("J(I(2),I(2))")}));
    const auto ifvs = search_minimal_obstructions(7, {{{1, 1, 0}}});
    CHECK(codes(ifvs) == codes(std::vector<Cotree>{Cotree::complete(4), parse_expr("C(U(3*K(2)))")}));
    const auto parallel = search_minimal_obstructions(7, {{{1, 1, 0}}}, 3);
    REQUIRE(parallel.size() == ifvs.size());
    for (std::size_t k = 0; k < ifvs.size(); ++k) {
        CHECK(parallel[k].graph6 == ifvs[k].graph6);
    }
    CHECK(one.front().tree.vertex_count() == 3);
}

TEST_CASE("search for arboricity two up to nine vertices finds the small A2 members") {
    std::vector<Cotree> small;
    for (const auto& t : family_A2()) {
        if (t.vertex_count() <= 9) {
            small.push_back(t);
        }
    }
    CHECK(codes(search_minimal_obstructions(9, arboricity2)) == codes(small));
}

TEST_CASE("build_H") {
    const Cotree g = parse_expr("C(U(3*K(3)))");
    const Cotree h = build_H(g, g, 2);
    CHECK(h.vertex_count() == 22);
    CHECK(vertex_arboricity(h) == 4);
    CHECK(chromatic_number(h) == 4);
    CHECK(height(h) == height(g) + 2);
    CHECK(is_minimal_obstruction(h, {{{3, 0, 0}}}).is_minimal);
    CHECK_THROWS_AS(build_H(Cotree::complete(4), g, 2), InputError);
    CHECK_THROWS_AS(build_H(parse_expr("J(I(2),I(2))"), g, 2), InputError);
}

TEST_CASE("structural bounds") {
    const auto k5 = structural_bounds(Cotree::complete(5), 2);
    CHECK(k5.is_complete_2p1);
    CHECK(k5.join_ok);
    CHECK(k5.height_nodes == 2);
    for (const auto& t : family_A2()) {
        const auto b = structural_bounds(t, 2);
        CHECK(b.height_ok);
        CHECK(b.join_ok);
    }
}

TEST_CASE("decomposition of disconnected obstructions") {
    const Cotree g = parse_expr("U(K(2),K(2))");
    // two edges need two deletions for a single independent set
    const auto d = decompose_disconnected(g, 1, 1);
    CHECK(d.components.size() == 2);
    CHECK(d.component_r == std::vector<int>{0, 0});
    CHECK(d.components_minimal);
    CHECK(d.sum_matches);
    CHECK_THROWS_AS(decompose_disconnected(Cotree::complete(3), 1, 1), InputError);
}
