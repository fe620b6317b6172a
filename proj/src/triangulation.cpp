#include "nullary/triangulation.hpp"

#include <algorithm>
#include <set>

#include "nullary/linalg.hpp"
#include "nullary/mesh.hpp"

namespace nullary {

using detail::Mesh;

Simplex SimplicialComplex::simplex(const Cell& cell) const {
    std::vector<RationalPoint> pts;
    pts.reserve(cell.size());
    for (auto v : cell) pts.push_back(vertices.at(v));
    return Simplex(std::move(pts));
}

std::vector<Cell> SimplicialComplex::faces() const {
    std::set<Cell> all;
    for (const auto& c : simplices) {
        const std::size_t k = c.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
            Cell f;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (std::size_t{1} << i)) f.push_back(c[i]);
            all.insert(std::move(f));
        }
    }
    return {all.begin(), all.end()};
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& c : simplices) d = std::max(d, static_cast<int>(c.size()) - 1);
    return d;
}

Polyhedron SimplicialComplex::carrier() const {
    Polyhedron p;
    p.ambient_dim = ambient_dim;
    for (const auto& c : simplices) p.pieces.push_back(simplex(c).polytope());
    return p;
}

std::optional<std::size_t> SimplicialComplex::find_vertex(const RationalPoint& p) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
    if (it == vertices.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

RegularTriangulation RegularTriangulation::certify(SimplicialComplex complex) {
    if (!is_regular(complex)) throw Error(ErrorCode::NotRegular, "triangulation has a non-regular simplex");
    RegularTriangulation t;
    t.complex_ = std::move(complex);
    t.certified_ = true;
    return t;
}

bool is_regular_simplex(const std::vector<RationalPoint>& vertices) {
    return multiplicity(vertices) == 1;
}

bool is_regular(const SimplicialComplex& complex) {
    // faces of a regular simplex are regular
    return std::all_of(complex.simplices.begin(), complex.simplices.end(), [&](const Cell& c) {
        std::vector<RationalPoint> pts;
        for (auto v : c) pts.push_back(complex.vertices.at(v));
        return is_regular_simplex(pts);
    });
}

Integer multiplicity(const std::vector<RationalPoint>& vertices) {
    linalg::IntMatrix rows;
    for (const auto& v : vertices) rows.push_back(homogeneous(v));
    return linalg::maximal_minor_gcd(rows);
}

RationalPoint farey_mediant(const Simplex& face) {
    IntegerVector sum;
    for (const auto& v : face.vertices()) {
        auto h = homogeneous(v);
        if (sum.empty()) sum.assign(h.size(), Integer(0));
        for (std::size_t i = 0; i < h.size(); ++i) sum[i] += h[i];
    }
    return from_homogeneous(sum);
}

SimplicialComplex blowup(const SimplicialComplex& complex, const Simplex& face) {
    Cell f;
    for (const auto& v : face.vertices()) {
        auto id = complex.find_vertex(v);
        if (!id) throw Error(ErrorCode::BadInput, "face is not in the complex");
        f.push_back(*id);
    }
    std::sort(f.begin(), f.end());
    if (f.size() == 1) return complex;
    Mesh m = Mesh::from_complex(complex);
    RationalVector weights;
    Rational total = 0;
    for (auto v : f) total += Rational(denominator(complex.vertices[v]));
    for (auto v : f) weights.push_back(Rational(denominator(complex.vertices[v])) / total);
    m.star(f, weights);
    return m.to_complex();
}

RegularTriangulation joint_refinement(const std::vector<Polyhedron>& family, std::size_t max_blowups) {
    Polyhedron all;
    for (const auto& p : family) {
        if (p.pieces.empty()) continue;
        if (all.pieces.empty()) all.ambient_dim = p.ambient_dim;
        else if (p.ambient_dim != all.ambient_dim)
            throw Error(ErrorCode::DimensionMismatch, "family members live in different spaces");
        all.pieces.insert(all.pieces.end(), p.pieces.begin(), p.pieces.end());
    }
    if (all.pieces.empty()) throw Error(ErrorCode::EmptyFamily, "joint refinement of an empty family");
    Mesh m = Mesh::covering(all);
    m.desingularize(max_blowups);
    return RegularTriangulation::certify(m.to_complex());
}

RegularTriangulation insert_vertex(const RegularTriangulation& triangulation, const RationalPoint& y,
                                   std::size_t max_blowups) {
    const auto& complex = triangulation.complex();
    if (complex.find_vertex(y)) return triangulation;
    std::optional<Cell> carrier;
    for (const auto& f : complex.faces()) {
        if (carrier && carrier->size() <= f.size()) continue;
        if (relative_interior_contains(complex.simplex(f), y)) carrier = f;
    }
    if (!carrier) throw Error(ErrorCode::PointOutside, "point " + to_string(y) + " is outside the carrier");
    Mesh m = Mesh::from_complex(complex);
    std::vector<RationalPoint> pts;
    for (auto v : *carrier) pts.push_back(complex.vertices[v]);
    m.star(*carrier, *barycentric(pts, y));
    m.desingularize(max_blowups);
    return RegularTriangulation::certify(m.to_complex());
}

RegularTriangulation triangulate_cube(std::size_t n) {
    if (n < 1 || n > 4)
        throw Error(ErrorCode::UnsupportedDimension, "cube dimension must be between 1 and 4");
    Mesh m = Mesh::kuhn_box(IntegerVector(n, Integer(0)), IntegerVector(n, Integer(1)));
    return RegularTriangulation::certify(m.to_complex());
}

Polyhedron unit_cube(std::size_t n) {
    if (n < 1 || n > 4)
        throw Error(ErrorCode::UnsupportedDimension, "cube dimension must be between 1 and 4");
    std::vector<RationalPoint> corners;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        RationalPoint c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = (mask >> i) & 1;
        corners.push_back(std::move(c));
    }
    return Polyhedron::from_points(n, {corners});
}

namespace {

std::pair<RationalPoint, RationalPoint> bbox(const std::vector<RationalPoint>& pts) {
    RationalPoint lo = pts.front(), hi = pts.front();
    for (const auto& p : pts)
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] < lo[i]) lo[i] = p[i];
            if (p[i] > hi[i]) hi[i] = p[i];
        }
    return {lo, hi};
}

bool overlaps(const std::pair<RationalPoint, RationalPoint>& a, const std::pair<RationalPoint, RationalPoint>& b) {
    for (std::size_t i = 0; i < a.first.size(); ++i)
        if (a.second[i] < b.first[i] || b.second[i] < a.first[i]) return false;
    return true;
}

Mesh piece_mesh(const Polytope& piece) {
    const std::size_t n = piece.ambient_dim();
    if (static_cast<int>(piece.vertices.size()) == piece.dimension() + 1) {
        Mesh m(n, 0);
        Cell c;
        for (const auto& v : piece.vertices) c.push_back(m.add_vertex(v, {}));
        m.add_cell(c);
        return m;
    }
    return Mesh::covering(Polyhedron{n, {piece}});
}

// Refines `m` (a mesh inside the box `box`) against every piece of `p` near it.
void refine_local(Mesh& m, const std::pair<RationalPoint, RationalPoint>& box, const Polyhedron& p) {
    for (const auto& piece : p.pieces)
        if (overlaps(box, bbox(piece.vertices))) m.refine_against(piece, Mesh::Space::Domain, false);
}

}  // namespace

RationalPoint rational_point_in_difference(const Polyhedron& q, const Polyhedron& p) {
    if (q.pieces.empty()) throw Error(ErrorCode::NoDifference, "Q is empty");
    if (!p.pieces.empty() && p.ambient_dim != q.ambient_dim)
        throw Error(ErrorCode::DimensionMismatch, "Q and P live in different spaces");
    const Mesh cover = Mesh::covering(q);
    SimplicialComplex canonical = cover.to_complex();
    for (const auto& cell : canonical.simplices) {
        const Simplex s = canonical.simplex(cell);
        const auto box = bbox(s.vertices());
        std::vector<const Polytope*> near;
        for (const auto& piece : p.pieces)
            if (overlaps(box, bbox(piece.vertices))) near.push_back(&piece);
        const auto candidates = detail::difference_barycenters(s.vertices(), near);
        if (candidates.empty()) continue;
        std::optional<RationalPoint> found;
        for (const auto& b : candidates)
            if (!p.contains(b) && (!found || denominator(b) < denominator(*found) ||
                                   (denominator(b) == denominator(*found) && b < *found)))
                found = b;
        if (found) return *found;
        Mesh m = piece_mesh(s.polytope());
        refine_local(m, bbox(s.vertices()), p);
        std::optional<RationalPoint> best;
        Integer best_den;
        for (const auto& f : m.faces()) {
            RationalPoint b = Simplex(m.cell_points(f)).barycenter();
            if (p.contains(b)) continue;
            Integer d = denominator(b);
            if (!best || d < best_den || (d == best_den && b < *best)) {
                best = std::move(b);
                best_den = d;
            }
        }
        if (best) return *best;
    }
    throw Error(ErrorCode::NoDifference, "Q is contained in P");
}

bool polyhedron_subset(const Polyhedron& a, const Polyhedron& b) {
    for (const auto& piece : a.pieces) {
        if (std::any_of(b.pieces.begin(), b.pieces.end(), [&](const Polytope& t) {
                return std::all_of(piece.vertices.begin(), piece.vertices.end(),
                                   [&](const RationalPoint& v) { return t.contains(v); });
            }))
            continue;
        if (b.pieces.empty()) return false;
        Mesh m = piece_mesh(piece);
        refine_local(m, bbox(piece.vertices), b);
        for (const auto& c : m.cells()) {
            const auto pts = m.cell_points(c);
            const bool inside = std::any_of(b.pieces.begin(), b.pieces.end(), [&](const Polytope& t) {
                return std::all_of(pts.begin(), pts.end(), [&](const RationalPoint& v) { return t.contains(v); });
            });
            if (!inside) return false;
        }
    }
    return true;
}

}  // namespace nullary
