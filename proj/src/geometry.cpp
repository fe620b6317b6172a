#include "nullary/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nullary/linalg.hpp"

namespace nullary {

bool HalfSpaceSystem::contains(const RationalPoint& x) const {
    for (const auto& e : equalities)
        if (e.slack(x) != 0) return false;
    for (const auto& c : inequalities)
        if (c.slack(x) < 0) return false;
    return true;
}

bool HalfSpaceSystem::strictly_contains(const RationalPoint& x) const {
    for (const auto& e : equalities)
        if (e.slack(x) != 0) return false;
    for (const auto& c : inequalities)
        if (c.slack(x) <= 0) return false;
    return true;
}

int Polytope::dimension() const {
    if (vertices.empty()) return -1;
    return static_cast<int>(ambient_dim()) - static_cast<int>(halfspaces.equalities.size());
}

bool Polyhedron::contains(const RationalPoint& x) const {
    return std::any_of(pieces.begin(), pieces.end(), [&](const Polytope& p) { return p.contains(x); });
}

Polyhedron Polyhedron::from_points(std::size_t ambient_dim,
                                   const std::vector<std::vector<RationalPoint>>& pieces) {
    Polyhedron out;
    out.ambient_dim = ambient_dim;
    for (const auto& pts : pieces) out.pieces.push_back(hull_to_halfspaces(pts));
    return out;
}

bool AffineSubspace::contains(const RationalPoint& x) const {
    if (!basepoint) return false;
    linalg::Matrix m = directions;
    const auto before = linalg::rank(m);
    m.push_back(x - *basepoint);
    return linalg::rank(std::move(m)) == before;
}

Simplex::Simplex(std::vector<RationalPoint> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (!affinely_independent(vertices_))
        throw Error(ErrorCode::BadInput, "simplex vertices are not affinely independent");
}

RationalPoint Simplex::barycenter() const {
    RationalPoint c(ambient_dim(), Rational(0));
    for (const auto& v : vertices_)
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += v[i];
    Rational k(static_cast<long>(vertices_.size()));
    for (auto& x : c) x /= k;
    return c;
}

bool Simplex::contains(const RationalPoint& x) const {
    auto b = barycentric(vertices_, x);
    if (!b) return false;
    return std::all_of(b->begin(), b->end(), [](const Rational& c) { return c >= 0; });
}

Polytope Simplex::polytope() const { return hull_to_halfspaces(vertices_); }

Integer denominator(const RationalPoint& v) {
    Integer d = 1;
    for (const auto& c : v) d = lcm(d, c.get_den());
    return d;
}

IntegerVector homogeneous(const RationalPoint& v) {
    const Integer d = denominator(v);
    IntegerVector h(v.size() + 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational s = v[i] * d;
        h[i] = s.get_num();
    }
    h.back() = d;
    return h;
}

RationalPoint from_homogeneous(const IntegerVector& h) {
    RationalPoint p(h.size() - 1);
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
        p[i] = Rational(h[i], h.back());
        p[i].canonicalize();
    }
    return p;
}

AffineSubspace affine_span(const std::vector<RationalPoint>& points) {
    AffineSubspace out;
    if (points.empty()) return out;
    out.basepoint = *std::min_element(points.begin(), points.end());
    linalg::Matrix m;
    for (const auto& p : points) {
        auto d = p - *out.basepoint;
        if (!is_zero(d)) m.push_back(std::move(d));
    }
    linalg::rref(m);
    out.directions = std::move(m);
    return out;
}

bool affinely_independent(const std::vector<RationalPoint>& points) {
    if (points.empty()) return true;
    linalg::Matrix m;
    for (std::size_t i = 1; i < points.size(); ++i) m.push_back(points[i] - points[0]);
    return linalg::rank(std::move(m)) == points.size() - 1;
}

namespace {

Constraint normalize(const RationalVector& normal, const Rational& offset) {
    RationalVector all = normal;
    all.push_back(offset);
    IntegerVector ints = primitive_integer(all);
    Constraint c;
    c.offset = ints.back();
    ints.pop_back();
    c.normal = std::move(ints);
    return c;
}

Constraint sign_fix_equality(Constraint c) {
    for (const auto& a : c.normal) {
        if (a == 0) continue;
        if (a < 0) {
            for (auto& x : c.normal) x = -x;
            c.offset = -c.offset;
        }
        break;
    }
    return c;
}

// Normal within span(dirs) orthogonal to every difference in `diffs`.
std::optional<RationalVector> facet_normal(const linalg::Matrix& dirs, const linalg::Matrix& diffs) {
    const std::size_t k = dirs.size();
    linalg::Matrix sys;
    for (const auto& d : diffs) {
        RationalVector row(k);
        for (std::size_t j = 0; j < k; ++j) row[j] = dot(dirs[j], d);
        sys.push_back(std::move(row));
    }
    auto ker = linalg::nullspace(std::move(sys), k);
    if (ker.size() != 1) return std::nullopt;
    RationalVector normal(dirs.front().size(), Rational(0));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t c = 0; c < normal.size(); ++c) normal[c] += ker[0][j] * dirs[j][c];
    return normal;
}

}  // namespace

Polytope hull_to_halfspaces(const std::vector<RationalPoint>& input) {
    if (input.empty()) throw Error(ErrorCode::BadInput, "hull of an empty point set");
    std::vector<RationalPoint> pts = input;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.front().size();
    for (const auto& p : pts)
        if (p.size() != n) throw Error(ErrorCode::DimensionMismatch, "hull points of mixed dimension");

    Polytope out;
    const AffineSubspace span = affine_span(pts);
    const std::size_t k = span.directions.size();
    const RationalPoint& base = *span.basepoint;

    for (auto& normal : linalg::nullspace(span.directions, n))
        out.halfspaces.equalities.push_back(sign_fix_equality(normalize(normal, dot(normal, base))));
    std::sort(out.halfspaces.equalities.begin(), out.halfspaces.equalities.end());

    if (k == 0) {
        out.vertices = pts;
        return out;
    }

    std::set<Constraint> facets;
    auto try_subset = [&](const std::vector<std::size_t>& pick) {
        linalg::Matrix diffs;
        for (std::size_t i = 1; i < pick.size(); ++i) diffs.push_back(pts[pick[i]] - pts[pick[0]]);
        auto normal = facet_normal(span.directions, diffs);
        if (!normal) return;
        const Rational offset = dot(*normal, pts[pick[0]]);
        bool pos = false, neg = false;
        for (const auto& p : pts) {
            Rational s = dot(*normal, p) - offset;
            if (s > 0) pos = true;
            if (s < 0) neg = true;
        }
        if (pos && neg) return;
        if (neg) {
            for (auto& x : *normal) x = -x;
            facets.insert(normalize(*normal, -offset));
        } else {
            facets.insert(normalize(*normal, offset));
        }
    };

    if (pts.size() == k + 1) {
        // simplex: facets omit one vertex each
        for (std::size_t skip = 0; skip < pts.size(); ++skip) {
            std::vector<std::size_t> pick;
            for (std::size_t i = 0; i < pts.size(); ++i)
                if (i != skip) pick.push_back(i);
            try_subset(pick);
        }
    } else {
        std::vector<std::size_t> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        const std::size_t m = pts.size();
        while (true) {
            try_subset(pick);
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    out.halfspaces.inequalities.assign(facets.begin(), facets.end());

    for (const auto& p : pts) {
        linalg::Matrix tight;
        for (const auto& f : out.halfspaces.inequalities) {
            if (f.slack(p) != 0) continue;
            RationalVector row(n);
            for (std::size_t c = 0; c < n; ++c) row[c] = f.normal[c];
            tight.push_back(std::move(row));
        }
        if (linalg::rank(std::move(tight)) == k) out.vertices.push_back(p);
    }
    return out;
}

bool relative_interior_contains(const Simplex& s, const RationalPoint& x) {
    if (x.size() != s.ambient_dim())
        throw Error(ErrorCode::DimensionMismatch, "point and simplex dimensions differ");
    if (s.dimension() == 0) return x == s.vertices().front();
    return s.polytope().halfspaces.strictly_contains(x);
}

std::optional<RationalVector> barycentric(const std::vector<RationalPoint>& vertices,
                                          const RationalPoint& x) {
    const std::size_t k = vertices.size();
    const std::size_t n = x.size();
    // sum c_i v_i = x, sum c_i = 1
    linalg::Matrix a(n + 1, RationalVector(k));
    RationalVector b(n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < k; ++i) a[r][i] = vertices[i][r];
        b[r] = x[r];
    }
    for (std::size_t i = 0; i < k; ++i) a[n][i] = 1;
    b[n] = 1;
    return linalg::solve_unique(a, b);
}

RationalVector solve_affine_on_simplex(const Simplex& s, const std::vector<Rational>& values) {
    const auto& verts = s.vertices();
    if (values.size() != verts.size())
        throw Error(ErrorCode::DimensionMismatch, "one value per simplex vertex required");
    const std::size_t n = s.ambient_dim();
    const AffineSubspace span = affine_span(verts);
    const std::size_t k = span.directions.size();
    // Linear part L = sum c_j d_j; unknowns (lambda_0, c_1..c_k).
    linalg::Matrix a(verts.size(), RationalVector(k + 1));
    for (std::size_t i = 0; i < verts.size(); ++i) {
        a[i][0] = 1;
        for (std::size_t j = 0; j < k; ++j) a[i][j + 1] = dot(span.directions[j], verts[i]);
    }
    auto sol = linalg::solve_unique(a, values);
    if (!sol) throw Error(ErrorCode::IntegralityFailure, "affine interpolation is singular");
    RationalVector coeffs(n + 1, Rational(0));
    coeffs[0] = (*sol)[0];
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t c = 0; c < n; ++c) coeffs[c + 1] += (*sol)[j + 1] * span.directions[j][c];
    return coeffs;
}

}  // namespace nullary
