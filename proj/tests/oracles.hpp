#pragma once

// Independent reference checks shared by the unit tests and the acceptance run.

#include <algorithm>
#include <random>
#include <vector>

#include "nullary/chain.hpp"

namespace oracle {

using namespace nullary;

// determinant of a square rational matrix by plain elimination
inline Rational det(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

// gcd of all maximal minors of the homogeneous lifts, by enumerating column subsets
inline bool regular_simplex(const std::vector<RationalPoint>& vertices) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& v : vertices) {
        Integer den = 1;
        for (const auto& x : v) den = lcm(den, x.get_den());
        std::vector<Rational> r;
        for (const auto& x : v) r.push_back(x * den);
        r.push_back(Rational(den));
        rows.push_back(std::move(r));
    }
    const std::size_t k = rows.size(), cols = rows.front().size();
    if (k > cols) return false;
    Integer g = 0;
    std::vector<bool> pick(cols, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::vector<Rational>> minor;
        for (const auto& r : rows) {
            std::vector<Rational> sub;
            for (std::size_t c = 0; c < cols; ++c)
                if (pick[c]) sub.push_back(r[c]);
            minor.push_back(std::move(sub));
        }
        g = gcd(g, det(std::move(minor)).get_num());
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return g == 1;
}

inline bool regular(const SimplicialComplex& c) {
    for (const auto& s : c.simplices) {
        std::vector<RationalPoint> pts;
        for (auto v : s) pts.push_back(c.vertices.at(v));
        if (!regular_simplex(pts)) return false;
    }
    return true;
}

inline Rational mv(Op op, const Rational& a, const Rational& b) {
    switch (op) {
        case Op::Oplus: return std::min<Rational>(1, a + b);
        case Op::Odot: return std::max<Rational>(0, a + b - 1);
        case Op::Join: return std::max<Rational>(a, b);
        default: return std::min<Rational>(a, b);
    }
}

inline Rational random_rational(std::mt19937& rng, long max_den, long lo = 0, long hi = 1) {
    std::uniform_int_distribution<long> den(1, max_den);
    const long d = den(rng);
    std::uniform_int_distribution<long> num(lo * d, hi * d);
    return make_rational(num(rng), d);
}

inline RationalPoint random_point(std::mt19937& rng, std::size_t n, long max_den) {
    RationalPoint p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(random_rational(rng, max_den));
    return p;
}

inline Term random_term(std::mt19937& rng, std::size_t depth, std::size_t arity) {
    std::uniform_int_distribution<int> pick(0, 9);
    const int k = depth == 0 ? pick(rng) % 3 : pick(rng);
    if (k == 0 && depth == 0) return make_constant(pick(rng) % 2);
    if (k <= 2) return make_var(1 + rng() % arity);
    if (k == 3) return make_not(random_term(rng, depth - 1, arity));
    static constexpr Op ops[] = {Op::Oplus, Op::Odot, Op::Join, Op::Meet};
    return make_binary(ops[k % 4], random_term(rng, depth - 1, arity), random_term(rng, depth - 1, arity));
}

// a single-cell map on conv(vertices), values given per vertex
inline ZMap cell_map(std::size_t dim, const std::vector<RationalPoint>& vertices, std::vector<RationalPoint> values) {
    SimplicialComplex c;
    c.ambient_dim = dim;
    c.vertices = vertices;
    std::vector<std::size_t> order(vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vertices[a] < vertices[b]; });
    std::vector<RationalPoint> sorted_values;
    for (std::size_t i = 0; i < order.size(); ++i) {
        c.vertices[i] = vertices[order[i]];
        sorted_values.push_back(std::move(values[order[i]]));
    }
    Cell all(vertices.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    c.simplices = {all};
    return extend_vertex_map(RegularTriangulation::certify(std::move(c)), std::move(sorted_values));
}

inline Rational affine_value(const IntegerVector& eta, const RationalPoint& x) {
    Rational s = eta[0];
    for (std::size_t i = 0; i < x.size(); ++i) s += eta[i + 1] * x[i];
    return s;
}

// a random regular simplex (a cell of a blown-up cube), one of its facets, and
// an integer affine map nonconstant on that facet
inline SqueezeContext random_context(std::mt19937& rng, std::size_t n) {
    SimplicialComplex k = triangulate_cube(n).complex();
    const std::size_t blowups = rng() % 4;
    for (std::size_t i = 0; i < blowups; ++i) {
        const auto faces = k.faces();
        k = blowup(k, k.simplex(faces[rng() % faces.size()]));
    }
    const Cell& cell = k.simplices[rng() % k.simplices.size()];
    const Simplex s = k.simplex(cell);
    std::vector<RationalPoint> facet = s.vertices();
    facet.erase(facet.begin() + static_cast<long>(rng() % facet.size()));
    std::uniform_int_distribution<long> coef(-3, 3);
    for (;;) {
        IntegerVector eta;
        for (std::size_t i = 0; i <= n; ++i) eta.push_back(coef(rng));
        bool nonconstant = false;
        for (const auto& v : facet)
            if (affine_value(eta, v) != affine_value(eta, facet[0])) nonconstant = true;
        if (nonconstant) return SqueezeContext::make(s, Simplex(facet), std::move(eta));
    }
}

struct SqueezeVerdict {
    bool preserves_eta = false;
    bool misses_y = false;
    bool fixes_other_facets = false;
    bool pass() const { return preserves_eta && misses_y && fixes_other_facets; }
};

inline SqueezeVerdict squeeze_contract(const SqueezeContext& ctx, const SqueezeResult& r) {
    const std::size_t n = ctx.s.ambient_dim();
    const auto& vs = ctx.s.vertices();
    std::vector<RationalPoint> values;
    for (const auto& v : vs) values.push_back({affine_value(ctx.eta, v)});
    const ZMap eta = cell_map(n, vs, values);
    SqueezeVerdict out;
    out.preserves_eta = equals(compose(eta, r.rho), eta);
    out.misses_y = !image(r.rho).contains(r.y) && r.z == evaluate(r.rho, r.y);
    out.fixes_other_facets = true;
    for (std::size_t drop = 0; drop < vs.size(); ++drop) {
        std::vector<RationalPoint> g = vs;
        g.erase(g.begin() + static_cast<long>(drop));
        if (Simplex(g).vertices() == ctx.f.vertices()) continue;
        const ZMap id = cell_map(n, g, g);
        if (!equals(restrict(r.rho, id.carrier()), id)) out.fixes_other_facets = false;
    }
    return out;
}

// standard [0,1] semantics of a term
inline Rational semantics(const Term& t, const RationalPoint& x) {
    switch (t->op) {
        case Op::Zero: return 0;
        case Op::One: return 1;
        case Op::Var: return x.at(t->var - 1);
        case Op::Not: return 1 - semantics(t->left, x);
        default: return mv(t->op, semantics(t->left, x), semantics(t->right, x));
    }
}

inline Rational simplex_volume(const std::vector<RationalPoint>& v) {
    std::vector<std::vector<Rational>> m;
    for (std::size_t i = 1; i < v.size(); ++i) {
        std::vector<Rational> r;
        for (std::size_t j = 0; j < v[0].size(); ++j) r.push_back(v[i][j] - v[0][j]);
        m.push_back(std::move(r));
    }
    Rational d = abs(det(std::move(m)));
    for (std::size_t i = 2; i < v.size(); ++i) d /= static_cast<long>(i);
    return d;
}

// the k-faces of c inside the k-simplex p have projected volumes summing to p's,
// so p is their union
inline bool union_of_simplices(const SimplicialComplex& c, const Polytope& p) {
    const int k = p.dimension();
    if (static_cast<int>(p.vertices.size()) != k + 1) return false;
    const std::size_t n = c.ambient_dim;
    auto project = [&](const std::vector<RationalPoint>& pts, const std::vector<std::size_t>& axes) {
        std::vector<RationalPoint> out;
        for (const auto& x : pts) {
            RationalPoint y;
            for (auto a : axes) y.push_back(x[a]);
            out.push_back(std::move(y));
        }
        return out;
    };
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    std::vector<std::size_t> axes;
    Rational whole = 0;
    do {
        axes.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) axes.push_back(i);
        whole = k == 0 ? Rational(1) : simplex_volume(project(p.vertices, axes));
    } while (whole == 0 && std::prev_permutation(pick.begin(), pick.end()));
    if (whole == 0) return false;
    Rational total = 0;
    for (const auto& f : c.faces()) {
        if (static_cast<int>(f.size()) != k + 1) continue;
        std::vector<RationalPoint> pts;
        for (auto v : f) pts.push_back(c.vertices.at(v));
        if (!std::all_of(pts.begin(), pts.end(), [&](const RationalPoint& x) { return p.contains(x); })) continue;
        total += k == 0 ? Rational(1) : simplex_volume(project(pts, axes));
    }
    return total == whole;
}

// full-dimensional cells inside the convex polytope p whose volumes add up to `volume`
inline bool tiles(const SimplicialComplex& c, const Polytope& p, const Rational& volume) {
    Rational total = 0;
    for (const auto& s : c.simplices) {
        std::vector<RationalPoint> pts;
        for (auto v : s) {
            if (!p.contains(c.vertices.at(v))) return false;
            pts.push_back(c.vertices.at(v));
        }
        if (pts.size() != c.ambient_dim + 1) return false;
        total += simplex_volume(pts);
    }
    return total == volume;
}

inline bool same_set(const Polyhedron& a, const Polyhedron& b) { return polyhedron_subset(a, b) && polyhedron_subset(b, a); }

}  // namespace oracle
