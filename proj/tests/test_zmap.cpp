#include "support.hpp"

using namespace test;

namespace {

ZMap finer_tent() {
    return interval_map({q(0), q(1, 4), q(1, 3), q(1, 2), q(2, 3), q(3, 4), q(1)},
                        {{q(0)}, {q(1, 4)}, {q(1, 3)}, {q(1, 2)}, {q(1, 3)}, {q(1, 4)}, {q(0)}});
}

ZMap identity_on_interval() { return interval_map({q(0), q(1)}, {{q(0)}, {q(1)}}); }

bool integer_pieces(const ZMap& g) {
    for (const auto& p : g.pieces())
        for (const auto& row : p.coefficients)
            if (row.size() != g.dim() + 1) return false;
    return true;
}

bool divisibility(const ZMap& g) {
    for (std::size_t i = 0; i < g.values().size(); ++i)
        if (denominator(g.complex().vertices[i]) % denominator(g.values()[i]) != 0) return false;
    return true;
}

// a random Z-map on a refined square: blow-ups of the Kuhn triangulation with
// integer-compatible values built from a random integer affine map per vertex
ZMap random_square_map(std::mt19937& rng, std::size_t codim) {
    SimplicialComplex k = triangulate_cube(2).complex();
    for (int i = 0; i < 3; ++i) {
        const auto faces = k.faces();
        const Cell& f = faces[rng() % faces.size()];
        k = blowup(k, k.simplex(f));
    }
    RegularTriangulation t = RegularTriangulation::certify(k);
    std::vector<RationalPoint> values;
    std::uniform_int_distribution<long> coef(-2, 2);
    for (const auto& v : t.vertices()) {
        const IntegerVector h = homogeneous(v);
        RationalPoint y;
        for (std::size_t j = 0; j < codim; ++j) {
            Integer s = 0;
            for (const auto& e : h) s += Integer(coef(rng)) * e;
            Rational r(s, h.back());
            r.canonicalize();
            y.push_back(r);
        }
        values.push_back(std::move(y));
    }
    return extend_vertex_map(t, std::move(values));
}

}  // namespace

TEST_CASE("extend vertex map") {
    const ZMap t = tent();
    REQUIRE(t.pieces().size() == 2);
    CHECK(t.pieces()[0].coefficients == std::vector<IntegerVector>{{0, 1}});
    CHECK(t.pieces()[1].coefficients == std::vector<IntegerVector>{{1, -1}});
    const ZMap zero = constant_on_cube(2, pt({q(0)}));
    for (const auto& p : zero.pieces()) CHECK(p.coefficients == std::vector<IntegerVector>{{0, 0, 0}});
    try {
        interval_map({q(0), q(1)}, {{q(1, 2)}, {q(0)}});
        FAIL("expected DenominatorViolation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DenominatorViolation);
    }
}

TEST_CASE("evaluate") {
    CHECK(evaluate(tent(), pt({q(1, 4)})) == pt({q(1, 4)}));
    CHECK(evaluate(tent(), pt({q(3, 4)})) == pt({q(1, 4)}));
    CHECK(evaluate(identity_map(2), pt({q(1, 3), q(2, 3)})) == pt({q(1, 3), q(2, 3)}));
    try {
        evaluate(tent(), pt({q(2)}));
        FAIL("expected OutsideDomain");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OutsideDomain);
    }
}

TEST_CASE("compose") {
    const ZMap t = tent();
    CHECK(equals(compose(identity_on_interval(), t), t));
    const ZMap c = compose(constant_map(RegularTriangulation::certify(complex_of(1, {pt({q(0)}), pt({q(1, 2)})}, {{0, 1}})),
                                        pt({q(1)})),
                           t);
    CHECK(equals(c, constant_on_cube(1, pt({q(1)}))));
    const ZMap w = wrap();
    for (long i = 0; i <= 8; ++i) CHECK(evaluate(w, pt({q(i, 8)})) == zeta(q(4 * i, 8)));
    CHECK(composition_equals(zeta_segment(0, 4), scale(4), w));
    try {
        compose(tent(), scale(2));
        FAIL("expected ImageEscapesDomain");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ImageEscapesDomain);
    }
}

TEST_CASE("image") {
    CHECK(oracle::same_set(image(iota_prime()), Polyhedron::from_points(2, {{pt({q(0), q(0)}), pt({q(1), q(0)})}})));
    CHECK(oracle::same_set(image(tent()), Polyhedron::from_points(1, {{pt({q(0)}), pt({q(1, 2)})}})));
    CHECK(oracle::same_set(image(constant_on_cube(2, pt({q(0), q(0)}))), Polyhedron::from_points(2, {{pt({q(0), q(0)})}})));
}

TEST_CASE("equals") {
    CHECK(equals(tent(), finer_tent()));
    CHECK(equals(finer_tent(), tent()));
    CHECK_FALSE(equals(tent(), identity_on_interval()));
    CHECK(equals(tent(), tent()));
    try {
        equals(tent(), identity_map(2));
        FAIL("expected CarrierMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CarrierMismatch);
    }
}

TEST_CASE("extend with value") {
    const ZMap bottom = restrict(coordinate_map(2, {0}), Polyhedron::from_points(2, {{pt({q(0), q(0)}), pt({q(1), q(0)})}}));
    const ZMap e = extend_with_value(bottom, unit_cube(2), 0);
    CHECK(oracle::same_set(e.carrier(), unit_cube(2)));
    CHECK(equals(restrict(e, bottom.carrier()), bottom));
    bool off = false;
    for (std::size_t i = 0; i < e.values().size(); ++i)
        if (!bottom.carrier().contains(e.complex().vertices[i]) && e.values()[i] == pt({q(0)})) off = true;
    CHECK(off);

    try {
        extend_with_value(identity_on_interval(), unit_cube(1), 1);
        FAIL("expected NotStrict");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotStrict);
    }
    try {
        extend_with_value(identity_on_interval(), Polyhedron::from_points(1, {{pt({q(0)}), pt({q(1, 2)})}}), 1);
        FAIL("expected OutsideHierarchy");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OutsideHierarchy);
    }

    const ZMap dot0 = constant_map(RegularTriangulation::certify(complex_of(1, {pt({q(0)})}, {{0}})), pt({q(0)}));
    const ZMap d = extend_with_value(dot0, unit_cube(1), 1);
    std::set<RationalPoint> values(d.values().begin(), d.values().end());
    CHECK(values.count(pt({q(0)})));
    CHECK(values.count(pt({q(1)})));
    CHECK(evaluate(d, pt({q(0)})) == pt({q(0)}));
}

TEST_CASE("is_into") {
    CHECK(is_into(iota_prime(), boundary_square()));
    const ZMap centre = constant_map(RegularTriangulation::certify(complex_of(2, {pt({q(1, 2), q(1, 2)})}, {{0}})),
                                     pt({q(1, 2), q(1, 2)}));
    CHECK_FALSE(is_into(centre, boundary_square()));
    CHECK(is_into(constant_on_cube(2, pt({q(0), q(0)})), boundary_square()));
    CHECK_FALSE(is_into(identity_map(2), boundary_square()));
}

TEST_CASE("restrict") {
    const ZMap r = restrict(identity_map(2), boundary_square());
    CHECK(oracle::same_set(r.carrier(), boundary_square()));
    for (const auto& v : r.complex().vertices) CHECK(evaluate(r, v) == v);
    CHECK(equals(restrict(tent(), tent().carrier()), tent()));
    const ZMap half = restrict(tent(), Polyhedron::from_points(1, {{pt({q(0)}), pt({q(1, 2)})}}));
    CHECK(equals(half, interval_map({q(0), q(1, 2)}, {{q(0)}, {q(1, 2)}})));
    try {
        restrict(tent(), Polyhedron::from_points(1, {{pt({q(0)}), pt({q(2)})}}));
        FAIL("expected OutsideDomain");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OutsideDomain);
    }
}

TEST_CASE("structural invariants of produced maps", "[property]") {
    std::mt19937 rng(17);
    for (int i = 0; i < 10; ++i) {
        const ZMap g = random_square_map(rng, 2);
        CHECK(integer_pieces(g));
        CHECK(divisibility(g));
        CHECK(oracle::regular(g.complex()));
        CHECK(equals(g, extend_vertex_map(g.domain(), g.values())));
    }
}

TEST_CASE("composition soundness", "[property]") {
    std::mt19937 rng(19);
    for (int i = 0; i < 4; ++i) {
        // f: square -> square through a random map clamped into the cube
        ZMap f = random_square_map(rng, 2);
        std::vector<RationalPoint> vals = f.values();
        for (auto& v : vals)
            for (auto& x : v) x = x < 0 ? Rational(0) : (x > 1 ? Rational(1) : x);
        f = extend_vertex_map(f.domain(), vals);
        if (!is_into(f, unit_cube(2))) continue;
        const ZMap g = random_square_map(rng, 1);
        const ZMap h = compose(g, f);
        CHECK(oracle::regular(h.complex()));
        CHECK(integer_pieces(h));
        CHECK(divisibility(h));
        CHECK(composition_equals(g, f, h));
        for (int s = 0; s < 200; ++s) {
            const RationalPoint x = random_point(rng, 2, 12);
            CHECK(evaluate(h, x) == evaluate(g, evaluate(f, x)));
        }
    }
}

TEST_CASE("equals is an equivalence", "[property]") {
    std::mt19937 rng(23);
    for (int i = 0; i < 6; ++i) {
        const ZMap g = random_square_map(rng, 1);
        const ZMap g2 = compose(g, identity_map(2));
        const ZMap other = random_square_map(rng, 1);
        CHECK(equals(g, g));
        CHECK(equals(g, g2) == equals(g2, g));
        CHECK(equals(g, g2));
        CHECK(equals(g, other) == equals(other, g));
        if (equals(g2, other)) CHECK(equals(g, other));
    }
}
