#include "support.hpp"

using namespace test;

namespace {

// all extreme points of {x : system}, by intersecting every n-subset of tight hyperplanes
std::vector<RationalPoint> brute_vertices(const HalfSpaceSystem& sys, std::size_t n) {
    std::vector<Constraint> rows = sys.equalities;
    rows.insert(rows.end(), sys.inequalities.begin(), sys.inequalities.end());
    std::set<RationalPoint> out;
    const std::size_t m = rows.size();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != n) continue;
        std::vector<RationalPoint> pts;
        linalg::Matrix a;
        RationalVector b;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) {
                RationalVector r;
                for (const auto& x : rows[i].normal) r.push_back(Rational(x));
                a.push_back(r);
                b.push_back(Rational(rows[i].offset));
            }
        if (auto x = linalg::solve_unique(a, b); x && sys.contains(*x)) out.insert(*x);
    }
    return {out.begin(), out.end()};
}

std::set<std::pair<IntegerVector, Integer>> as_set(const std::vector<Constraint>& cs) {
    std::set<std::pair<IntegerVector, Integer>> s;
    for (const auto& c : cs) s.insert({c.normal, c.offset});
    return s;
}

}  // namespace

TEST_CASE("denominator") {
    CHECK(denominator(pt({q(1, 2), q(1, 3)})) == 6);
    CHECK(denominator(pt({q(0), q(0)})) == 1);
    CHECK(denominator(pt({q(2, 6), q(1, 2)})) == 6);
}

TEST_CASE("homogeneous lift") {
    CHECK(homogeneous(pt({q(1, 2), q(1, 3)})) == IntegerVector{3, 2, 6});
    CHECK(homogeneous(pt({q(0), q(0)})) == IntegerVector{0, 0, 1});
    CHECK(homogeneous(pt({q(1), q(1)})) == IntegerVector{1, 1, 1});
}

TEST_CASE("hull to halfspaces") {
    const Polytope tri = hull_to_halfspaces({pt({q(0), q(0)}), pt({q(1), q(0)}), pt({q(0), q(1)})});
    CHECK(tri.halfspaces.equalities.empty());
    CHECK(as_set(tri.halfspaces.inequalities) ==
          std::set<std::pair<IntegerVector, Integer>>{{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, -1}});
    CHECK(brute_vertices(tri.halfspaces, 2) == tri.vertices);

    const Polytope dot_ = hull_to_halfspaces({pt({q(0), q(0)})});
    CHECK(dot_.halfspaces.inequalities.empty());
    CHECK(as_set(dot_.halfspaces.equalities) == std::set<std::pair<IntegerVector, Integer>>{{{1, 0}, 0}, {{0, 1}, 0}});

    const Polytope sq =
        hull_to_halfspaces({pt({q(0), q(0)}), pt({q(1), q(0)}), pt({q(0), q(1)}), pt({q(1), q(1)})});
    CHECK(as_set(sq.halfspaces.inequalities) ==
          std::set<std::pair<IntegerVector, Integer>>{{{1, 0}, 0}, {{0, 1}, 0}, {{-1, 0}, -1}, {{0, -1}, -1}});
    CHECK(sq.vertices.size() == 4);
}

TEST_CASE("hull drops interior points") {
    const Polytope p = hull_to_halfspaces({pt({q(0), q(0)}), pt({q(2), q(0)}), pt({q(0), q(2)}), pt({q(1, 2), q(1, 2)})});
    CHECK(p.vertices.size() == 3);
}

TEST_CASE("affine span") {
    const AffineSubspace line = affine_span({pt({q(0), q(0)}), pt({q(1), q(0)})});
    CHECK(line.dimension() == 1);
    CHECK(line.contains(pt({q(7, 3), q(0)})));
    CHECK_FALSE(line.contains(pt({q(0), q(1, 5)})));
    CHECK(affine_span({}).dimension() == -1);
    const AffineSubspace plane = affine_span({pt({q(0), q(0)}), pt({q(1), q(0)}), pt({q(0), q(1)})});
    CHECK(plane.dimension() == 2);
    CHECK(plane.contains(pt({q(-5), q(9, 7)})));
}

TEST_CASE("relative interior") {
    const Simplex seg({pt({q(0), q(0)}), pt({q(1), q(0)})});
    CHECK(relative_interior_contains(seg, pt({q(1, 2), q(0)})));
    CHECK_FALSE(relative_interior_contains(seg, pt({q(0), q(0)})));
    CHECK_FALSE(relative_interior_contains(seg, pt({q(1, 2), q(1, 9)})));
    const Simplex tri({pt({q(0), q(0)}), pt({q(1), q(0)}), pt({q(0), q(1)})});
    CHECK(relative_interior_contains(tri, pt({q(1, 3), q(1, 3)})));
    CHECK_FALSE(relative_interior_contains(tri, pt({q(1, 2), q(1, 2)})));
    const Simplex point({pt({q(1, 3)})});
    CHECK(relative_interior_contains(point, pt({q(1, 3)})));
}

TEST_CASE("rational point in difference") {
    const Polyhedron square = unit_cube(2);
    const RationalPoint x = rational_point_in_difference(square, boundary_square());
    CHECK(square.contains(x));
    CHECK_FALSE(boundary_square().contains(x));

    const Polyhedron unit = unit_cube(1);
    try {
        rational_point_in_difference(unit, unit);
        FAIL("expected NoDifference");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoDifference);
    }

    const Polyhedron bottom = Polyhedron::from_points(2, {{pt({q(0), q(0)}), pt({q(1), q(0)})}});
    const Polyhedron origin = Polyhedron::from_points(2, {{pt({q(0), q(0)})}});
    const RationalPoint y = rational_point_in_difference(bottom, origin);
    CHECK(y[1] == 0);
    CHECK(y[0] > 0);
    CHECK(y[0] <= 1);
}

TEST_CASE("solve affine on simplex") {
    CHECK(solve_affine_on_simplex(Simplex({pt({q(0)}), pt({q(1)})}), {q(0), q(1)}) == RationalVector{q(0), q(1)});
    // values follow the sorted vertex order (0,0), (0,1), (1,0)
    CHECK(solve_affine_on_simplex(Simplex({pt({q(0), q(0)}), pt({q(1), q(0)}), pt({q(0), q(1)})}), {q(0), q(0), q(1)}) ==
          RationalVector{q(0), q(1), q(0)});
    const Simplex line({pt({q(1, 2), q(0)}), pt({q(1), q(0)})});
    const RationalVector c = solve_affine_on_simplex(line, {q(1, 2), q(0)});
    CHECK(c == RationalVector{q(1), q(-1), q(0)});
}

TEST_CASE("rational text form") {
    CHECK(to_string(q(6, 4)) == "3/2");
    CHECK(to_string(q(-4, 2)) == "-2");
    CHECK(parse_rational("10/4") == q(5, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("homogeneous round trip and hull round trip", "[property]") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + rng() % 3;
        const RationalPoint v = random_point(rng, n, 12);
        const IntegerVector h = homogeneous(v);
        CHECK(h.back() == denominator(v));
        CHECK(from_homogeneous(h) == v);
    }
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = 1 + rng() % 3;
        const std::size_t count = 1 + rng() % 6;
        std::vector<RationalPoint> pts;
        for (std::size_t j = 0; j < count; ++j) pts.push_back(random_point(rng, n, 4));
        const Polytope p = hull_to_halfspaces(pts);
        for (const auto& x : pts) CHECK(p.contains(x));
        for (const auto& c : p.halfspaces.inequalities) {
            Integer g = 0;
            for (const auto& a : c.normal) g = gcd(g, a);
            CHECK(gcd(g, c.offset) == 1);
        }
        const AffineSubspace span = affine_span(pts);
        if (span.dimension() == static_cast<int>(n)) CHECK(brute_vertices(p.halfspaces, n) == p.vertices);
    }
}

TEST_CASE("relative interior implies containment", "[property]") {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        std::vector<RationalPoint> pts;
        for (int j = 0; j < 3; ++j) pts.push_back(random_point(rng, 2, 5));
        if (!affinely_independent(pts)) continue;
        const Simplex s(pts);
        const RationalPoint x = random_point(rng, 2, 6);
        if (relative_interior_contains(s, x)) CHECK(s.contains(x));
        for (const auto& v : s.vertices()) CHECK_FALSE(relative_interior_contains(s, v));
    }
}
