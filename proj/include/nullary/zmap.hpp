#pragma once

// Z-maps: continuous piecewise-affine maps with integer coefficients, stored
// as a regular triangulation of the domain plus one value per vertex.

#include <vector>

#include "nullary/triangulation.hpp"

namespace nullary {

/// Affine map on one maximal simplex. Row j holds (l0, l1, ..., ln) for
/// output coordinate j, all integers.
struct AffinePiece {
    Cell cell;
    std::vector<IntegerVector> coefficients;

    RationalPoint apply(const RationalPoint& x) const;
    friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

class ZMap {
public:
    ZMap() = default;

    const RegularTriangulation& domain() const { return domain_; }
    const SimplicialComplex& complex() const { return domain_.complex(); }
    std::size_t dim() const { return domain_.ambient_dim(); }
    std::size_t codomain_dim() const { return codomain_dim_; }
    const std::vector<RationalPoint>& values() const { return values_; }
    const std::vector<AffinePiece>& pieces() const { return pieces_; }
    Polyhedron carrier() const { return domain_.complex().carrier(); }

    /// Structural identity (same triangulation, same values). See `equals`
    /// for equality as functions.
    friend bool operator==(const ZMap& a, const ZMap& b) {
        return a.domain_ == b.domain_ && a.values_ == b.values_ && a.codomain_dim_ == b.codomain_dim_;
    }

    friend ZMap extend_vertex_map(const RegularTriangulation& domain, std::vector<RationalPoint> values);

private:
    RegularTriangulation domain_;
    std::size_t codomain_dim_ = 0;
    std::vector<RationalPoint> values_;
    std::vector<AffinePiece> pieces_;
};

/// The unique Z-map affine on every simplex with the given vertex values
/// (values[i] belongs to vertex i).
ZMap extend_vertex_map(const RegularTriangulation& domain, std::vector<RationalPoint> values);

RationalPoint evaluate(const ZMap& g, const RationalPoint& x);

/// g after f.
ZMap compose(const ZMap& g, const ZMap& f);

Polyhedron image(const ZMap& g);

bool equals(const ZMap& f, const ZMap& g);
/// equals(compose(g, f), h) without triangulating g o f regularly.
bool composition_equals(const ZMap& g, const ZMap& f, const ZMap& h);

/// Extends a real-valued map on P to Q, taking the integer value z at a new
/// vertex outside P.
ZMap extend_with_value(const ZMap& eta, const Polyhedron& q, const Integer& z);

bool is_into(const ZMap& g, const Polyhedron& t);

ZMap restrict(const ZMap& g, const Polyhedron& r);

/// Identity on [0,1]^n.
ZMap identity_map(std::size_t n);

/// Constant map on the given triangulation.
ZMap constant_map(const RegularTriangulation& domain, const RationalPoint& c);

/// x |-> (x_{i_1}, ..., x_{i_m}) on [0,1]^n, indices zero-based.
ZMap coordinate_map(std::size_t n, const std::vector<std::size_t>& coordinates);

}  // namespace nullary
