#include "nullary/squeeze.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nullary/linalg.hpp"
#include "nullary/mesh.hpp"

namespace nullary {

namespace {

Rational linear_dot(const IntegerVector& eta, const RationalVector& w) {
    Rational s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += eta[i + 1] * w[i];
    return s;
}

Rational eval_affine(const IntegerVector& eta, const RationalPoint& x) { return Rational(eta[0]) + linear_dot(eta, x); }

Integer abs_max(const IntegerVector& v) {
    Integer m = 0;
    for (const auto& x : v) m = std::max<Integer>(m, abs(x));
    return m;
}

}  // namespace

SqueezeContext SqueezeContext::make(const Simplex& s, const Simplex& f, IntegerVector eta) {
    if (s.dimension() < 2) throw Error(ErrorCode::DimensionTooLow, "squeezing needs a simplex of dimension >= 2");
    if (eta.size() != s.ambient_dim() + 1) throw Error(ErrorCode::DimensionMismatch, "affine map has wrong length");
    const auto& sv = s.vertices();
    const auto& fv = f.vertices();
    if (f.dimension() != s.dimension() - 1 ||
        !std::all_of(fv.begin(), fv.end(), [&](const RationalPoint& p) { return std::binary_search(sv.begin(), sv.end(), p); }))
        throw Error(ErrorCode::BadInput, "f is not a facet of s");
    const Rational first = eval_affine(eta, fv.front());
    if (std::all_of(fv.begin(), fv.end(), [&](const RationalPoint& p) { return eval_affine(eta, p) == first; }))
        throw Error(ErrorCode::ConstantOnFace, "affine map is constant on the facet");

    SqueezeContext ctx{s, f, std::move(eta), s.polytope().halfspaces};
    auto& ineq = ctx.system.inequalities;
    auto it = std::find_if(ineq.begin(), ineq.end(), [&](const Constraint& c) {
        return std::all_of(fv.begin(), fv.end(), [&](const RationalPoint& p) { return c.slack(p) == 0; });
    });
    std::rotate(ineq.begin(), it, it + 1);
    return ctx;
}

std::pair<Rational, Rational> equal_denominator_points(const RationalPoint& t, const RationalVector& v,
                                                       const RationalVector& w, const Rational& eps) {
    if (is_zero(v)) throw Error(ErrorCode::ZeroDirection, "direction v is zero");
    if (eps <= 0) throw Error(ErrorCode::PreconditionViolated, "eps must be positive");
    const Integer a = denominator(v);
    const Integer dw = denominator(w);
    IntegerVector vi(v.size()), wi(w.size()), sum(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) vi[i] = Rational(v[i] * a).get_num();
    Integer k = 1;
    while (true) {
        bool nonzero = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            wi[i] = Rational(w[i] * dw * k).get_num();
            sum[i] = vi[i] + wi[i];
            if (sum[i] != 0) nonzero = true;
        }
        if (nonzero) break;
        ++k;
    }
    const Integer b = dw * k;
    Integer bound = std::max(floor(a / eps), floor(b / eps));
    bound = std::max(bound, denominator(t));
    bound = std::max(bound, abs_max(vi));
    bound = std::max(bound, abs_max(sum));
    Integer p;
    mpz_nextprime(p.get_mpz_t(), bound.get_mpz_t());
    Rational delta(a, p), tau(b, p);
    delta.canonicalize();
    tau.canonicalize();
    return {delta, tau};
}

Rational interior_step(const Simplex& s, const RationalPoint& t, const std::vector<RationalVector>& directions) {
    if (directions.empty()) return 1;
    const HalfSpaceSystem sys = s.polytope().halfspaces;
    for (const auto& e : sys.equalities) {
        if (e.slack(t) != 0) throw Error(ErrorCode::PreconditionViolated, "t is not on the affine span");
        for (const auto& d : directions)
            if (dot(e.normal, d) != 0) throw Error(ErrorCode::PreconditionViolated, "direction leaves the affine span");
    }
    const Rational l(static_cast<long>(directions.size()));
    std::optional<Rational> eps;
    for (const auto& c : sys.inequalities) {
        const Rational slack = c.slack(t);
        if (slack < 0) throw Error(ErrorCode::PreconditionViolated, "t is outside the simplex");
        if (slack == 0) {
            bool positive = false;
            for (const auto& d : directions) {
                const Rational p = dot(c.normal, d);
                if (p < 0) throw Error(ErrorCode::PreconditionViolated, "a direction points out of the simplex");
                if (p > 0) positive = true;
            }
            if (!positive) throw Error(ErrorCode::PreconditionViolated, "no direction enters the simplex");
            continue;
        }
        Rational m = 0;
        for (const auto& d : directions) m = std::max<Rational>(m, abs(dot(c.normal, d)));
        Rational bound = slack / (l * m + 1);
        if (!eps || bound < *eps) eps = bound;
    }
    return eps ? *eps : Rational(1);
}

RationalVector squeezing_direction(const SqueezeContext& ctx) {
    const std::size_t n = ctx.s.ambient_dim();
    linalg::Matrix rows;
    for (const auto& e : ctx.system.equalities) {
        RationalVector r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = e.normal[i];
        rows.push_back(std::move(r));
    }
    RationalVector lin(n);
    for (std::size_t i = 0; i < n; ++i) lin[i] = ctx.eta[i + 1];
    rows.push_back(std::move(lin));
    const Constraint& a0 = ctx.system.inequalities.front();
    for (auto& w : linalg::nullspace(std::move(rows), n)) {
        const Rational p = dot(a0.normal, w);
        if (p == 0) continue;
        IntegerVector ints = primitive_integer(w);
        RationalVector out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = p > 0 ? Rational(ints[i]) : Rational(-ints[i]);
        return out;
    }
    throw Error(ErrorCode::PreconditionViolated, "no squeezing direction exists");
}

SqueezeResult squeeze(const SqueezeContext& ctx) {
    const RationalPoint t = ctx.f.barycenter();
    const RationalVector v = ctx.f.vertices()[1] - ctx.f.vertices()[0];
    const RationalVector w = squeezing_direction(ctx);
    const Rational eps = std::min<Rational>(interior_step(ctx.f, t, {v}), interior_step(ctx.s, t, {v, w}));
    const auto [delta, tau] = equal_denominator_points(t, v, w, eps);
    const RationalPoint y = t + delta * v;
    const RationalPoint z = y + tau * w;

    SimplicialComplex one;
    one.ambient_dim = ctx.s.ambient_dim();
    one.vertices = ctx.s.vertices();
    Cell all(one.vertices.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    one.simplices.push_back(all);
    RegularTriangulation delta_tri;
    if (is_regular(one)) {
        delta_tri = insert_vertex(RegularTriangulation::certify(std::move(one)), y);
    } else {
        const std::size_t n = ctx.s.ambient_dim();
        delta_tri = joint_refinement({Polyhedron{n, {ctx.s.polytope()}}, Polyhedron::from_points(n, {{y}})});
    }
    std::vector<RationalPoint> values = delta_tri.vertices();
    for (auto& p : values)
        if (p == y) p = z;
    return {extend_vertex_map(delta_tri, std::move(values)), y, z};
}

namespace {

struct Space {
    ZMap alpha;
    Simplex s;
    SqueezeResult squeezed;
};

Space make_space_detail(const ZMap& eta, FacetChoice choice) {
    const std::size_t n = eta.dim();
    if (n <= 1) throw Error(ErrorCode::DimensionTooLow, "making space needs dimension >= 2");
    if (eta.codomain_dim() != 1) throw Error(ErrorCode::DimensionMismatch, "map must be real-valued");
    const SimplicialComplex& k = eta.complex();

    auto on_boundary = [&](const Cell& face) {
        for (std::size_t i = 0; i < n; ++i)
            for (int side = 0; side < 2; ++side)
                if (std::all_of(face.begin(), face.end(), [&](std::size_t v) { return k.vertices[v][i] == side; }))
                    return true;
        return false;
    };
    std::optional<std::pair<Integer, Cell>> best;
    std::size_t cell_index = 0;
    for (std::size_t ci = 0; ci < k.simplices.size(); ++ci) {
        const Cell& c = k.simplices[ci];
        Integer coarse = 0;
        if (choice == FacetChoice::Coarsest)
            for (auto v : c) coarse = std::max<Integer>(coarse, denominator(k.vertices[v]));
        if (best && coarse > best->first) continue;
        for (std::size_t drop = 0; drop < c.size(); ++drop) {
            Cell face = c;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
            if (!on_boundary(face)) continue;
            const auto& first = eta.values()[face.front()];
            if (std::all_of(face.begin(), face.end(), [&](std::size_t v) { return eta.values()[v] == first; })) continue;
            std::pair<Integer, Cell> key{coarse, face};
            if (!best || key < *best) {
                best = std::move(key);
                cell_index = ci;
            }
        }
    }
    if (!best) throw Error(ErrorCode::ConstantOnBoundary, "map is constant on the boundary of the cube");
    const Cell* facet = &best->second;
    const Cell& cell = k.simplices[cell_index];

    const SqueezeContext ctx =
        SqueezeContext::make(k.simplex(cell), k.simplex(*facet), eta.pieces()[cell_index].coefficients.front());
    SqueezeResult sq = squeeze(ctx);

    // eta's triangulation with the chosen cell replaced by rho's
    std::vector<RationalPoint> pts = k.vertices;
    const SimplicialComplex& inner = sq.rho.complex();
    pts.insert(pts.end(), inner.vertices.begin(), inner.vertices.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto index_of = [&](const RationalPoint& p) {
        return static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), p) - pts.begin());
    };
    SimplicialComplex glued;
    glued.ambient_dim = n;
    glued.vertices = pts;
    auto add = [&](const SimplicialComplex& from, const Cell& c) {
        Cell r;
        for (auto v : c) r.push_back(index_of(from.vertices[v]));
        std::sort(r.begin(), r.end());
        glued.simplices.push_back(std::move(r));
    };
    for (std::size_t i = 0; i < k.simplices.size(); ++i)
        if (i != cell_index) add(k, k.simplices[i]);
    for (const auto& c : inner.simplices) add(inner, c);
    std::sort(glued.simplices.begin(), glued.simplices.end());

    std::vector<RationalPoint> values = pts;
    values[index_of(sq.y)] = sq.z;
    ZMap alpha = extend_vertex_map(RegularTriangulation::certify(std::move(glued)), std::move(values));
    return {std::move(alpha), ctx.s, std::move(sq)};
}

}  // namespace

MakeSpaceResult make_space(const ZMap& eta, FacetChoice choice) {
    Space sp = make_space_detail(eta, choice);
    return {std::move(sp.alpha), sp.squeezed.y};
}

UpperBound exists_upper_bound(const ZMap& eta, const Integer& z, FacetChoice choice) {
    Space sp = make_space_detail(eta, choice);
    // Shrink the star of y by edge blow-ups until no simplex through y meets
    // image(alpha) off its face opposite y; then y alone can take the value z.
    const SimplicialComplex& k = sp.alpha.complex();
    const RationalPoint& y = sp.squeezed.y;
    const std::size_t yid = *k.find_vertex(y);
    std::vector<Polytope> moved;
    for (const auto& c : k.simplices) {
        if (!std::binary_search(c.begin(), c.end(), yid)) continue;
        std::vector<RationalPoint> pts = k.simplex(c).vertices();
        for (auto& p : pts)
            if (p == y) p = sp.squeezed.z;
        std::sort(pts.begin(), pts.end());
        moved.push_back(hull_to_halfspaces(pts));
    }
    std::vector<detail::DataRow> values;
    for (const auto& v : k.vertices) values.push_back(evaluate(eta, v));
    detail::Mesh m = detail::Mesh::from_complex(k, values);
    auto clear = [&] {
        for (const auto& c : m.cells()) {
            auto at = std::find(c.begin(), c.end(), yid);
            if (at == c.end()) continue;
            const auto pts = m.cell_points(c);
            for (const auto& piece : moved) {
                auto w = detail::max_weight_in(pts, static_cast<std::size_t>(at - c.begin()), piece);
                if (w && *w > 0) return false;
            }
        }
        return true;
    };
    const Rational dy(denominator(y));
    auto shrink = [&] {
        std::set<std::size_t> link;
        for (const auto& c : m.cells())
            if (std::binary_search(c.begin(), c.end(), yid))
                for (auto v : c)
                    if (v != yid) link.insert(v);
        std::vector<std::size_t> ring;
        for (auto u : link) {
            const Rational du(denominator(m.point(u)));
            if (u < yid) ring.push_back(m.star({u, yid}, {du / (du + dy), dy / (du + dy)}));
            else ring.push_back(m.star({yid, u}, {dy / (du + dy), du / (du + dy)}));
        }
        return ring;
    };
    for (std::size_t round = 0; !clear(); ++round) {
        if (round == 10000) throw Error(ErrorCode::IterationCap, "star of the excluded point does not shrink");
        shrink();
    }
    // eta stays in [i, i+1] on S; nested rings step the value up to z one
    // integer at a time so post-composition with zeta needs no new vertices.
    Rational lo = evaluate(eta, sp.s.vertices().front())[0];
    for (const auto& v : sp.s.vertices()) lo = std::min<Rational>(lo, evaluate(eta, v)[0]);
    for (Integer level = floor(lo) + 1; level < z; ++level)
        for (auto v : shrink()) m.data(v) = {Rational(level)};
    m.desingularize();
    m.data(yid) = {Rational(z)};
    std::vector<detail::DataRow> data;
    SimplicialComplex c = m.to_complex(&data);
    ZMap theta = extend_vertex_map(RegularTriangulation::certify(std::move(c)), std::move(data));
    return {std::move(theta), std::move(sp.alpha)};
}

}  // namespace nullary
