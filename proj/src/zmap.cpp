#include "nullary/zmap.hpp"

#include <algorithm>
#include <set>

#include "nullary/linalg.hpp"
#include "nullary/mesh.hpp"

namespace nullary {

using detail::DataRow;
using detail::Mesh;
using detail::Overlay;

namespace {

Mesh to_mesh(const ZMap& g) { return Mesh::from_complex(g.complex(), g.values()); }

ZMap from_mesh(Mesh& m) {
    m.desingularize();
    std::vector<DataRow> data;
    SimplicialComplex c = m.to_complex(&data);
    return extend_vertex_map(RegularTriangulation::certify(std::move(c)), std::move(data));
}

bool divides(const Integer& a, const Integer& b) { return b % a == 0; }

}  // namespace

RationalPoint AffinePiece::apply(const RationalPoint& x) const {
    RationalPoint out(coefficients.size());
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
        const auto& row = coefficients[j];
        Rational s(row[0]);
        for (std::size_t i = 0; i < x.size(); ++i) s += row[i + 1] * x[i];
        out[j] = s;
    }
    return out;
}

ZMap extend_vertex_map(const RegularTriangulation& domain, std::vector<RationalPoint> values) {
    if (!domain.certified()) throw Error(ErrorCode::NotRegular, "domain triangulation is not certified");
    const auto& complex = domain.complex();
    if (values.size() != complex.vertices.size())
        throw Error(ErrorCode::DimensionMismatch, "one value per vertex required");
    const std::size_t m = values.empty() ? 0 : values.front().size();
    for (std::size_t v = 0; v < values.size(); ++v) {
        if (values[v].size() != m) throw Error(ErrorCode::DimensionMismatch, "values of mixed dimension");
        if (!divides(denominator(values[v]), denominator(complex.vertices[v])))
            throw Error(ErrorCode::DenominatorViolation, "den of value " + to_string(values[v]) +
                                                             " does not divide den of vertex " +
                                                             to_string(complex.vertices[v]));
    }

    ZMap g;
    g.domain_ = domain;
    g.codomain_dim_ = m;
    const std::size_t n = complex.ambient_dim;
    for (const auto& cell : complex.simplices) {
        linalg::IntMatrix w;
        for (auto v : cell) w.push_back(homogeneous(complex.vertices[v]));
        AffinePiece piece{cell, {}};
        for (std::size_t j = 0; j < m; ++j) {
            IntegerVector b;
            for (auto v : cell) {
                Rational s = values[v][j] * denominator(complex.vertices[v]);
                b.push_back(s.get_num());
            }
            auto x = linalg::solve_integer(w, b);
            if (!x) throw Error(ErrorCode::IntegralityFailure, "no integer affine piece on a simplex");
            IntegerVector row(n + 1);
            row[0] = (*x)[n];
            for (std::size_t i = 0; i < n; ++i) row[i + 1] = (*x)[i];
            piece.coefficients.push_back(std::move(row));
        }
        g.pieces_.push_back(std::move(piece));
    }
    g.values_ = std::move(values);
    return g;
}

RationalPoint evaluate(const ZMap& g, const RationalPoint& x) {
    if (x.size() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from domain");
    const auto& complex = g.complex();
    if (auto v = complex.find_vertex(x)) return g.values()[*v];
    for (const auto& piece : g.pieces()) {
        bool outside = false;
        for (std::size_t i = 0; i < x.size() && !outside; ++i) {
            bool below = true, above = true;
            for (auto v : piece.cell) {
                if (complex.vertices[v][i] <= x[i]) below = false;
                if (complex.vertices[v][i] >= x[i]) above = false;
            }
            outside = below || above;
        }
        if (outside) continue;
        std::vector<RationalPoint> pts;
        for (auto v : piece.cell) pts.push_back(complex.vertices[v]);
        auto b = barycentric(pts, x);
        if (!b || std::any_of(b->begin(), b->end(), [](const Rational& c) { return c < 0; })) continue;
        return piece.apply(x);
    }
    throw Error(ErrorCode::OutsideDomain, "point " + to_string(x) + " is outside the domain");
}

Polyhedron image(const ZMap& g) {
    Polyhedron p;
    p.ambient_dim = g.codomain_dim();
    std::set<std::vector<RationalPoint>> seen;
    for (const auto& cell : g.complex().simplices) {
        std::vector<RationalPoint> pts;
        for (auto v : cell) pts.push_back(g.values()[v]);
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (seen.insert(pts).second) p.pieces.push_back(hull_to_halfspaces(pts));
    }
    return p;
}

namespace {

std::vector<Polytope> cells_of(const ZMap& h) {
    std::vector<Polytope> out;
    for (const auto& cell : h.complex().simplices) out.push_back(h.complex().simplex(cell).polytope());
    return out;
}

// f's mesh overlaid with g's cells, carrying g o f as data.
Mesh pull_back(const ZMap& g, const ZMap& f) {
    if (f.codomain_dim() != g.dim())
        throw Error(ErrorCode::DimensionMismatch, "codomain of f differs from domain of g");
    Overlay o = overlay(to_mesh(f), cells_of(g), Mesh::Space::Values);
    if (!o.covered) throw Error(ErrorCode::ImageEscapesDomain, "image of f leaves the domain of g");
    Mesh& m = o.mesh;
    std::vector<DataRow> out(m.vertex_count());
    for (std::size_t c = 0; c < m.cells().size(); ++c)
        for (auto v : m.cells()[c])
            if (out[v].empty()) out[v] = g.pieces()[o.target[c]].apply(m.data(v));
    m.set_width(g.codomain_dim());
    for (std::size_t v = 0; v < m.vertex_count(); ++v) m.data(v) = out[v];
    return std::move(m);
}

// Whether the map carried by `m` (with carrier that of `f`) equals g.
bool agrees(const Mesh& mesh, const ZMap& f, const ZMap& g) {
    if (f.dim() != g.dim() || mesh.width() != g.codomain_dim())
        throw Error(ErrorCode::CarrierMismatch, "maps have different domain or codomain dimensions");
    Overlay o = overlay(mesh, cells_of(g), Mesh::Space::Domain);
    if (!o.covered || !overlay(to_mesh(g), cells_of(f), Mesh::Space::Domain).covered)
        throw Error(ErrorCode::CarrierMismatch, "maps have different carriers");
    const Mesh& m = o.mesh;
    for (std::size_t c = 0; c < m.cells().size(); ++c)
        for (auto v : m.cells()[c])
            if (g.pieces()[o.target[c]].apply(m.point(v)) != m.data(v)) return false;
    return true;
}

}  // namespace

bool equals(const ZMap& f, const ZMap& g) { return agrees(to_mesh(f), f, g); }

bool composition_equals(const ZMap& g, const ZMap& f, const ZMap& h) { return agrees(pull_back(g, f), f, h); }

ZMap compose(const ZMap& g, const ZMap& f) {
    Mesh m = pull_back(g, f);
    return from_mesh(m);
}

ZMap extend_with_value(const ZMap& eta, const Polyhedron& q, const Integer& z) {
    if (eta.codomain_dim() != 1) throw Error(ErrorCode::DimensionMismatch, "extension needs a real-valued map");
    const Polyhedron p = eta.carrier();
    if (q.ambient_dim != p.ambient_dim || !polyhedron_subset(p, q))
        throw Error(ErrorCode::OutsideHierarchy, "domain of the map is not inside Q");
    RationalPoint s;
    try {
        s = rational_point_in_difference(q, p);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NoDifference) throw;
        throw Error(ErrorCode::NotStrict, "domain of the map equals Q");
    }
    std::vector<Polyhedron> family;
    for (const auto& piece : p.pieces) family.push_back(Polyhedron{p.ambient_dim, {piece}});
    family.push_back(q);
    family.push_back(Polyhedron::from_points(q.ambient_dim, {{s}}));
    RegularTriangulation delta = joint_refinement(family);
    std::vector<RationalPoint> values;
    for (const auto& v : delta.vertices()) {
        if (p.contains(v)) values.push_back(evaluate(eta, v));
        else values.push_back({Rational(z)});
    }
    return extend_vertex_map(delta, std::move(values));
}

bool is_into(const ZMap& g, const Polyhedron& t) {
    if (t.pieces.empty()) return false;
    if (t.ambient_dim != g.codomain_dim()) throw Error(ErrorCode::DimensionMismatch, "target dimension differs");
    Mesh m = to_mesh(g);
    for (const auto& piece : t.pieces) m.refine_against(piece, Mesh::Space::Values, false);
    for (const auto& cell : m.cells()) {
        bool inside = std::any_of(t.pieces.begin(), t.pieces.end(), [&](const Polytope& piece) {
            return std::all_of(cell.begin(), cell.end(), [&](std::size_t v) { return piece.contains(m.data(v)); });
        });
        if (!inside) return false;
    }
    return true;
}

ZMap restrict(const ZMap& g, const Polyhedron& r) {
    if (r.ambient_dim != g.dim() || !polyhedron_subset(r, g.carrier()))
        throw Error(ErrorCode::OutsideDomain, "restriction set is not inside the domain");
    Mesh m = to_mesh(g);
    for (const auto& piece : r.pieces) m.refine_against(piece, Mesh::Space::Domain, true);
    m.keep_faces([&](const Cell& f) { return r.contains(Simplex(m.cell_points(f)).barycenter()); });
    return from_mesh(m);
}

ZMap identity_map(std::size_t n) {
    RegularTriangulation t = triangulate_cube(n);
    return extend_vertex_map(t, t.vertices());
}

ZMap constant_map(const RegularTriangulation& domain, const RationalPoint& c) {
    return extend_vertex_map(domain, std::vector<RationalPoint>(domain.vertices().size(), c));
}

ZMap coordinate_map(std::size_t n, const std::vector<std::size_t>& coordinates) {
    RegularTriangulation t = triangulate_cube(n);
    std::vector<RationalPoint> values;
    for (const auto& v : t.vertices()) {
        RationalPoint out;
        for (auto i : coordinates) out.push_back(v.at(i));
        values.push_back(std::move(out));
    }
    return extend_vertex_map(t, std::move(values));
}

}  // namespace nullary
