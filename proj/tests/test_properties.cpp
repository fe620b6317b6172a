#include "support.hpp"

using namespace test;

TEST_CASE("chain unifiers solve the problem pointwise", "[property]") {
    std::mt19937 rng(61);
    const UnificationProblem p = parse_problem(boundary_problem_text, 2);
    for (const auto& r : ascending_chain(3, 2)) {
        for (int i = 0; i < 100; ++i) {
            const RationalPoint y = evaluate(r.sigma, random_point(rng, 2, 40));
            for (const auto& [lhs, rhs] : p.equations) CHECK(oracle::semantics(lhs, y) == oracle::semantics(rhs, y));
        }
    }
}

TEST_CASE("factorizations keep corner nonconstancy and degree", "[property]") {
    const auto chain = ascending_chain(3, 2);
    for (std::size_t i = 1; i < chain.size(); ++i) {
        const ZMap& theta = chain[i].sigma;
        const ZMap& eta = chain[i - 1].sigma;
        CHECK(composition_equals(theta, *chain[i].alpha, eta));
        CHECK(degree(eta) <= degree(theta));
        if (nonconstant_on_corners(eta)) CHECK(nonconstant_on_corners(theta));
    }
}

TEST_CASE("extend_with_value keeps the map on its domain", "[property]") {
    std::mt19937 rng(67);
    for (int i = 0; i < 5; ++i) {
        const Term t = random_term(rng, 3, 2);
        const ZMap g = mcnaughton(t, 2);
        const Polyhedron half = Polyhedron::from_points(2, {{pt({q(0), q(0)}), pt({q(1), q(0)}), pt({q(0), q(1)})}});
        const ZMap r = restrict(g, half);
        const long z = 3 + i;
        const ZMap e = extend_with_value(r, unit_cube(2), Integer(z));
        CHECK(equals(restrict(e, half), r));
        CHECK(std::count(e.values().begin(), e.values().end(), pt({q(z)})) > 0);
        CHECK(oracle::regular(e.complex()));
        CHECK(oracle::tiles(e.complex(), unit_cube(2).pieces.front(), 1));
    }
}

TEST_CASE("McNaughton maps compose like terms", "[property]") {
    std::mt19937 rng(71);
    for (int i = 0; i < 20; ++i) {
        const Term s = random_term(rng, 3, 1);
        const Term t = random_term(rng, 3, 1);
        const ZMap gs = mcnaughton(s, 1), gt = mcnaughton(t, 1);
        const ZMap h = compose(gs, gt);
        for (int j = 0; j < 30; ++j) {
            const RationalPoint x = random_point(rng, 1, 25);
            CHECK(evaluate(h, x)[0] == oracle::semantics(s, {oracle::semantics(t, x)}));
        }
    }
}

TEST_CASE("solution polyhedra agree with membership", "[property]") {
    std::mt19937 rng(73);
    for (int i = 0; i < 10; ++i) {
        const std::size_t m = 2;
        const Term t = random_term(rng, 3, m);
        const UnificationProblem p{m, {{t, make_constant(true)}}};
        const Polyhedron b = solution_polyhedron(p);
        for (int j = 0; j < 40; ++j) {
            const RationalPoint x = random_point(rng, m, 10);
            CHECK(b.contains(x) == (oracle::semantics(t, x) == 1));
        }
    }
}
