#include "nullary/cover.hpp"

#include <algorithm>
#include <deque>

#include "nullary/squeeze.hpp"

namespace nullary {

namespace {

const RationalPoint kCorners[4] = {make_point({0, 0}), make_point({1, 0}), make_point({1, 1}), make_point({0, 1})};

// edge e joins corner e to corner e+1
bool on_edge(std::size_t e, const RationalPoint& p) {
    switch (e) {
        case 0: return p[1] == 0 && p[0] >= 0 && p[0] <= 1;
        case 1: return p[0] == 1 && p[1] >= 0 && p[1] <= 1;
        case 2: return p[1] == 1 && p[0] >= 0 && p[0] <= 1;
        default: return p[0] == 0 && p[1] >= 0 && p[1] <= 1;
    }
}

Rational edge_parameter(std::size_t e, const RationalPoint& p) {
    switch (e) {
        case 0: return p[0];
        case 1: return 1 + p[1];
        case 2: return 3 - p[0];
        default: return 4 - p[1];
    }
}

Integer mod4(const Integer& i) {
    Integer r = i % 4;
    if (r < 0) r += 4;
    return r;
}

}  // namespace

Polyhedron boundary_square() {
    std::vector<std::vector<RationalPoint>> edges;
    for (std::size_t e = 0; e < 4; ++e) edges.push_back({kCorners[e], kCorners[(e + 1) % 4]});
    return Polyhedron::from_points(2, edges);
}

RationalPoint zeta(const Rational& x) {
    const Integer i = floor(x);
    const Rational r = x - i;
    const Integer m = mod4(i);
    if (m == 0) return {r, Rational(0)};
    if (m == 1) return {Rational(1), r};
    if (m == 2) return {1 - r, Rational(1)};
    return {Rational(0), 1 - r};
}

ZMap zeta_segment(const Integer& a, const Integer& b) {
    if (!(a < b)) throw Error(ErrorCode::BadInterval, "interval [" + a.get_str() + ", " + b.get_str() + "] is empty");
    SimplicialComplex c;
    c.ambient_dim = 1;
    std::vector<RationalPoint> values;
    for (Integer i = a; i <= b; ++i) {
        c.vertices.push_back({Rational(i)});
        values.push_back(zeta(Rational(i)));
        if (i > a) {
            const std::size_t k = c.vertices.size() - 1;
            c.simplices.push_back({k - 1, k});
        }
    }
    return extend_vertex_map(RegularTriangulation::certify(std::move(c)), std::move(values));
}

Lift lift(const ZMap& eta) {
    if (eta.codomain_dim() != 2 || !is_into(eta, boundary_square()))
        throw Error(ErrorCode::NotIntoBoundary, "map does not land in the boundary of the square");
    const SimplicialComplex& k = eta.complex();
    const auto& values = eta.values();
    // an affine image of a simplex inside the boundary is a segment on one edge
    std::vector<std::size_t> edge(k.simplices.size());
    for (std::size_t c = 0; c < k.simplices.size(); ++c) {
        std::size_t e = 0;
        while (e < 4 && !std::all_of(k.simplices[c].begin(), k.simplices[c].end(),
                                     [&](std::size_t v) { return on_edge(e, values[v]); }))
            ++e;
        if (e == 4) throw Error(ErrorCode::NotIntoBoundary, "a simplex does not map into a single edge");
        edge[c] = e;
    }
    std::vector<std::vector<std::size_t>> cells_at(k.vertices.size());
    for (std::size_t c = 0; c < k.simplices.size(); ++c)
        for (auto v : k.simplices[c]) cells_at[v].push_back(c);

    std::vector<std::optional<Rational>> lifted(k.vertices.size());
    std::vector<bool> placed(k.simplices.size(), false);
    std::deque<std::size_t> queue;
    Rational base_value = 0;
    if (!cells_at[0].empty()) {
        const std::size_t c0 = cells_at[0].front();
        base_value = edge_parameter(edge[c0], values[0]);
        if (base_value >= 4) base_value -= 4;
        lifted[0] = base_value;
        queue.push_back(c0);
        placed[c0] = true;
    }
    while (!queue.empty()) {
        const std::size_t c = queue.front();
        queue.pop_front();
        const Cell& cell = k.simplices[c];
        auto known = std::find_if(cell.begin(), cell.end(), [&](std::size_t v) { return lifted[v].has_value(); });
        const Rational offset = *lifted[*known] - edge_parameter(edge[c], values[*known]);
        for (auto v : cell) {
            const Rational l = offset + edge_parameter(edge[c], values[v]);
            if (lifted[v] && *lifted[v] != l) throw Error(ErrorCode::NotIntoBoundary, "inconsistent lift");
            lifted[v] = l;
            for (auto d : cells_at[v])
                if (!placed[d]) {
                    placed[d] = true;
                    queue.push_back(d);
                }
        }
    }
    std::vector<RationalPoint> out;
    for (const auto& l : lifted) {
        if (!l) throw Error(ErrorCode::NotIntoBoundary, "domain is not connected");
        out.push_back({*l});
    }
    Lift result{extend_vertex_map(eta.domain(), std::move(out)), k.vertices.front(), base_value};
    return result;
}

Rational degree(const ZMap& eta) {
    const Lift l = lift(eta);
    const auto& v = l.map.values();
    auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return (*hi)[0] - (*lo)[0];
}

bool nonconstant_on_corners(const ZMap& eta) {
    const std::size_t n = eta.dim();
    std::optional<RationalPoint> first;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        RationalPoint c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = (mask >> i) & 1;
        RationalPoint y = evaluate(eta, c);
        if (!first) first = std::move(y);
        else if (*first != y) return true;
    }
    return false;
}

ZMap pad(const ZMap& eta, std::size_t m) {
    const std::size_t n = eta.dim();
    if (m == n) return eta;
    if (m < n) throw Error(ErrorCode::DimensionMismatch, "cannot pad to fewer variables");
    std::vector<std::size_t> coords(n);
    for (std::size_t i = 0; i < n; ++i) coords[i] = i;
    return compose(eta, coordinate_map(m, coords));
}

Generalization generalize(const ZMap& eta, FacetChoice choice) {
    if (!nonconstant_on_corners(eta))
        throw Error(ErrorCode::ConstantOnCorners, "map is constant on the corners of the cube");
    const ZMap padded = pad(eta, std::max<std::size_t>(2, eta.dim()));
    const Lift l = lift(padded);
    const auto& v = l.map.values();
    const Integer z = floor(std::max_element(v.begin(), v.end())->front()) + 1;
    UpperBound ub = exists_upper_bound(l.map, z, choice);
    const auto& tv = ub.theta.values();
    auto [lo, hi] = std::minmax_element(tv.begin(), tv.end());
    const Integer a = floor(lo->front());
    Integer b = ceil(hi->front());
    if (b == a) b = a + 1;
    return {compose(zeta_segment(a, b), ub.theta), std::move(ub.alpha)};
}

}  // namespace nullary
