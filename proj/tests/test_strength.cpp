#include <doctest.h>

#include "cograph/oracle.hpp"
#include "cograph/solver.hpp"
#include "cograph/strength.hpp"

#include <random>

using namespace cograph;

TEST_CASE("strength of small graphs") {
    CHECK(strength_profile(Cotree::leaf()) == StrengthProfile{1, 0, 1});
    CHECK(strength_profile(parse_expr("J(I(2),I(2))")) == StrengthProfile{2, 2, 3});
    CHECK(strength_profile(Cotree::complete(5)) == StrengthProfile{5, 0, 5});
    CHECK(strength_profile(Cotree::edgeless(3)) == StrengthProfile{1, 1, 2});
    const Cotree thick3 = parse_expr("C(U(3*K(2)))");
    CHECK(strength_profile(thick3) == StrengthProfile{3, 3, 4});
    CHECK(q_from_strength(thick3) == 2);
    CHECK(q_from_strength(Cotree::leaf()) == 0);
    CHECK_THROWS_AS(strength_profile(Cotree()), InputError);
}

TEST_CASE("strength matches subset search on cographs up to nine vertices") {
    for (int n = 1; n <= 9; ++n) {
        for (const Cotree& t : enumerate_cographs(n)) {
            CHECK(strength_profile(t) == brute_force_strength(realize(t)));
        }
    }
}

TEST_CASE("q equals strength minus two on cographs up to eight vertices") {
    for (int n = 2; n <= 8; ++n) {
        for (const Cotree& t : enumerate_cographs(n)) {
            CHECK(min_q_feedback(t) == strength_profile(t).strength - 2);
        }
    }
}

TEST_CASE("q equals strength minus two on random cotrees") {
    std::mt19937_64 rng(314);
    for (int trial = 0; trial < 150; ++trial) {
        const Cotree t = random_cotree(2 + static_cast<int>(rng() % 120), rng);
        CHECK(min_q_feedback(t) == strength_profile(t).strength - 2);
    }
}
