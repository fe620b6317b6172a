#pragma once

#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "nullary/chain.hpp"
#include "nullary/linalg.hpp"
#include "oracles.hpp"

namespace test {

using namespace nullary;

inline Rational q(long p, long d = 1) { return make_rational(p, d); }

inline RationalPoint pt(std::initializer_list<Rational> c) { return make_point(c); }

inline SimplicialComplex complex_of(std::size_t dim, std::vector<RationalPoint> vertices, std::vector<Cell> cells) {
    SimplicialComplex c;
    c.ambient_dim = dim;
    c.vertices = std::move(vertices);
    c.simplices = std::move(cells);
    return c;
}

// 1-D map on [0,1] with the given breakpoints and values
inline ZMap interval_map(std::vector<Rational> xs, std::vector<RationalPoint> values) {
    std::vector<RationalPoint> vs;
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        vs.push_back({xs[i]});
        if (i) cells.push_back({i - 1, i});
    }
    return extend_vertex_map(RegularTriangulation::certify(complex_of(1, vs, cells)), std::move(values));
}

inline ZMap tent() { return interval_map({q(0), q(1, 2), q(1)}, {{q(0)}, {q(1, 2)}, {q(0)}}); }

inline ZMap constant_on_cube(std::size_t n, RationalPoint c) { return constant_map(triangulate_cube(n), std::move(c)); }

// x |-> k x on [0,1]
inline ZMap scale(long k) { return interval_map({q(0), q(1)}, {{q(0)}, {q(k)}}); }

inline ZMap wrap() { return compose(zeta_segment(0, 4), scale(4)); }

using oracle::random_point;
using oracle::random_rational;
using oracle::random_term;

}  // namespace test
