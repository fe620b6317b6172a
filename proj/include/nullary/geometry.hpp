#pragma once

// Exact rational polytopes: denominators, homogeneous lifts, V/H conversion,
// affine spans and relative interiors.

#include <optional>
#include <vector>

#include "nullary/rational.hpp"

namespace nullary {

/// normal . x >= offset (or == offset when used as an equality).
struct Constraint {
    IntegerVector normal;
    Integer offset;

    Rational slack(const RationalPoint& x) const { return dot(normal, x) - offset; }
    friend bool operator==(const Constraint&, const Constraint&) = default;
    friend bool operator<(const Constraint& a, const Constraint& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    }
};

struct HalfSpaceSystem {
    std::vector<Constraint> inequalities;
    std::vector<Constraint> equalities;

    bool contains(const RationalPoint& x) const;
    /// Equalities hold and every inequality is strict.
    bool strictly_contains(const RationalPoint& x) const;
    friend bool operator==(const HalfSpaceSystem&, const HalfSpaceSystem&) = default;
};

/// A rational polytope held in both representations.
struct Polytope {
    std::vector<RationalPoint> vertices;  // extreme points, lexicographic order
    HalfSpaceSystem halfspaces;

    std::size_t ambient_dim() const { return vertices.empty() ? 0 : vertices.front().size(); }
    int dimension() const;
    bool contains(const RationalPoint& x) const { return halfspaces.contains(x); }
    friend bool operator==(const Polytope& a, const Polytope& b) { return a.vertices == b.vertices; }
};

/// A finite union of rational polytopes.
struct Polyhedron {
    std::size_t ambient_dim = 0;
    std::vector<Polytope> pieces;

    bool contains(const RationalPoint& x) const;
    static Polyhedron from_points(std::size_t ambient_dim,
                                  const std::vector<std::vector<RationalPoint>>& pieces);
};

struct AffineSubspace {
    std::optional<RationalPoint> basepoint;
    std::vector<RationalVector> directions;  // RREF rows, linearly independent

    int dimension() const { return basepoint ? static_cast<int>(directions.size()) : -1; }
    bool contains(const RationalPoint& x) const;
};

/// conv of affinely independent rational points, vertices kept in
/// lexicographic order.
class Simplex {
public:
    Simplex() = default;
    explicit Simplex(std::vector<RationalPoint> vertices);

    const std::vector<RationalPoint>& vertices() const { return vertices_; }
    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t ambient_dim() const { return vertices_.empty() ? 0 : vertices_.front().size(); }
    RationalPoint barycenter() const;
    bool contains(const RationalPoint& x) const;
    Polytope polytope() const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend bool operator<(const Simplex& a, const Simplex& b) { return a.vertices_ < b.vertices_; }

private:
    std::vector<RationalPoint> vertices_;
};

/// lcm of the reduced denominators of the coordinates.
Integer denominator(const RationalPoint& v);

/// den(v) * (v, 1).
IntegerVector homogeneous(const RationalPoint& v);
RationalPoint from_homogeneous(const IntegerVector& h);

AffineSubspace affine_span(const std::vector<RationalPoint>& points);
bool affinely_independent(const std::vector<RationalPoint>& points);

Polytope hull_to_halfspaces(const std::vector<RationalPoint>& points);

bool relative_interior_contains(const Simplex& s, const RationalPoint& x);

/// Barycentric coordinates of x w.r.t. affinely independent vertices, or
/// nullopt when x is off their affine span.
std::optional<RationalVector> barycentric(const std::vector<RationalPoint>& vertices,
                                          const RationalPoint& x);

/// Coefficients (lambda_0, ..., lambda_n) of the affine map interpolating
/// `values` at the vertices of s, normalized so the linear part lies in the
/// direction space of s.
RationalVector solve_affine_on_simplex(const Simplex& s, const std::vector<Rational>& values);

/// A rational point of Q \ P, chosen deterministically (smallest denominator,
/// then lexicographic). Throws NoDifference when Q is contained in P.
RationalPoint rational_point_in_difference(const Polyhedron& q, const Polyhedron& p);

/// Exact set inclusion of carriers.
bool polyhedron_subset(const Polyhedron& a, const Polyhedron& b);

}  // namespace nullary
